#pragma once

// Matrix-slot labels and tensor-slot configurations.
//
// A label codes an element of the basis {Id} u {E_ab : (a,b) != (r,r)} of
// End(k^r): 0 is Id and 1 + a*r + b is E_{a+1,b+1} (0-based a, b). The code
// r*r stands for E_rr; it only appears in intermediate "extended" products
// and is removed by expand_rr().

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ddca/coeffring.hpp"

namespace ddca {

inline constexpr int kMaxSites = 16;

using Label = std::uint8_t;
using SiteArray = std::array<std::uint8_t, kMaxSites>;

inline constexpr Label kIdLabel = 0;

/// Extended label of E_{a+1,b+1} (0-based indices).
inline Label unit_label(int r, int a, int b) { return static_cast<Label>(1 + a * r + b); }
inline bool is_canonical_label(int r, Label l) { return l < r * r; }
inline std::pair<int, int> label_entry(int r, Label l) { return {(l - 1) / r, (l - 1) % r}; }

/// Product of extended labels; returns false when it vanishes.
bool label_mul(int r, Label a, Label b, Label& out);
/// "id" or "[a,b]" with 1-based entries.
std::string label_to_string(int r, Label l);
/// Inverse of label_to_string; throws ParseError.
Label parse_label(int r, const std::string& text);

/// Dense r x r rational matrix, row-major.
class Matrix {
 public:
  explicit Matrix(int r) : r_(r), entries_(static_cast<std::size_t>(r * r)) {}
  static Matrix identity(int r);
  static Matrix unit(int r, int a, int b);  // 0-based
  static Matrix from_label(int r, Label l);

  int size() const { return r_; }
  Rational& at(int a, int b) { return entries_[static_cast<std::size_t>(a * r_ + b)]; }
  const Rational& at(int a, int b) const { return entries_[static_cast<std::size_t>(a * r_ + b)]; }
  Rational trace() const;
  bool is_zero() const;

  /// Coordinates in the canonical label basis (E_rr eliminated).
  std::vector<std::pair<Label, Rational>> to_labels() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  int r_;
  std::vector<Rational> entries_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Rewrites every extended E_rr label among the first n sites as
/// Id - sum_{a<r} E_aa and calls emit(config, sign) for each resulting
/// canonical configuration.
void expand_rr(int n, int r, const SiteArray& config,
               const std::function<void(const SiteArray&, int)>& emit);

/// Sitewise product a*b of extended configurations; false if it vanishes.
bool config_mul(int n, int r, const SiteArray& a, const SiteArray& b, SiteArray& out);

/// Extended-label expansion of the slot operator sigma_u = P_{u^{-1}}
/// (sum over delta of tensor_j E_{delta_{u(j)}, delta_j}); sites fixed by u
/// carry Id. `perm` holds the images of u on 0..n-1.
std::vector<SiteArray> sigma_configs(int n, int r, const SiteArray& perm);

}  // namespace ddca
