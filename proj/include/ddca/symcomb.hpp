#pragma once

// Symmetric groups, Young diagrams and the group algebra Q[S_n].

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ddca/coeffring.hpp"

namespace ddca {

/// Permutation of {0..n-1}, stored as its image sequence. Text forms are
/// 1-based: "[2,1,3]". Composition is (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  /// From a 0-based image list; throws InvalidArgument unless bijective.
  static Permutation from_images(std::vector<int> images);
  /// Transposition of the 0-based points i and j.
  static Permutation transposition(int n, int i, int j);
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of n points in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int n);

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws InvalidArgument unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);
  static YoungDiagram parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;  // number of boxes
  int length() const { return static_cast<int>(rows_.size()); }
  int first_row() const { return rows_.empty() ? 0 : rows_.front(); }
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// Sum over boxes (i, j) of j - i.
long content(const YoungDiagram& lambda);
/// (n - |lambda|, lambda_1, ..., lambda_l); PadTooSmall when n < lambda_1 + |lambda|.
YoungDiagram pad(const YoungDiagram& lambda, int n);
/// ct(lambda) - |lambda| + (n - |lambda|)(n - |lambda| - 1)/2.
Rational interpolated_omega_value(const YoungDiagram& lambda, int n);

class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}
  static GroupAlgebraElement basis(const Permutation& p, Rational c = Rational(1));

  int degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;

  void add(const Permutation& p, const Rational& c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Permutation, Rational> terms_;
};

/// Sum of all transpositions s_ij, i < j.
GroupAlgebraElement omega_element(int n);
/// (1/n!) times the sum of all permutations.
GroupAlgebraElement symmetrizer(int n);

}  // namespace ddca
