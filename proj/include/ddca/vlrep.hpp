#pragma once

// The modules V_l = H_{-t,-k}(l,1) (x)_{S_l} (C^r)^{(x)l}.
//
// H_{t,k}(l, r) acts on the full space F = H' (x) (C^r)^{(x)l}, H' the
// rank-one algebra at (-t, -k), by right multiplication on H':
//   x_i: m (x) v -> m x_i (x) v,  y_i: m (x) v -> m y_i (x) v,
//   (g)_i acts on v,  w in S_l: m (x) v -> m w^{-1} (x) P_w v.
// F has the basis x^a y^b u (x) e_I. V_l is the quotient by m u (x) v = m (x) P_u v,
// with basis x^a y^b (x) e_I, and is identified with eF through
// lift = (1/l!) sum_w rho(w).

#include <map>
#include <string>
#include <vector>

#include "ddca/spherical.hpp"

namespace ddca {

struct FKey {
  SiteArray x{}, y{}, perm = identity_perm(), idx{};
  friend auto operator<=>(const FKey&, const FKey&) = default;
};

struct VlKey {
  SiteArray x{}, y{}, idx{};
  friend auto operator<=>(const VlKey&, const VlKey&) = default;
};

template <class Key>
class KeyedVector {
 public:
  KeyedVector() = default;
  static KeyedVector basis(const Key& key, const ParamPoly& c = 1) {
    KeyedVector v;
    v.add(key, c);
    return v;
  }
  const std::map<Key, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Key& key, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  KeyedVector& operator+=(const KeyedVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  KeyedVector& operator-=(const KeyedVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  KeyedVector& operator*=(const ParamPoly& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend KeyedVector operator+(KeyedVector a, const KeyedVector& b) { return a += b; }
  friend KeyedVector operator-(KeyedVector a, const KeyedVector& b) { return a -= b; }
  friend KeyedVector operator*(const ParamPoly& c, KeyedVector a) { return a *= c; }
  friend bool operator==(const KeyedVector&, const KeyedVector&) = default;

 private:
  std::map<Key, ParamPoly> terms_;
};

using FVector = KeyedVector<FKey>;
using VlVector = KeyedVector<VlKey>;

/// Generators of the alternative presentation that act through explicit
/// formulas: X^+_{i,p}, X^-_{i,p}, H_{i,p} for p in {0, 1} (i 0-based, i < r-1),
/// X^+_{0,0}, and X^{+,+-}_{0,1}, which needs omega_0 and is not modelled.
struct VlGenerator {
  enum class Kind { XPlus, XMinus, H, X00Plus, X01 };
  Kind kind;
  int i = 0;
  int p = 0;
  std::string name() const;
};

class VlModel {
 public:
  using Vector = FVector;

  /// Degrees of H' monomials are capped at max_degree (TruncationOverflow).
  VlModel(int l, int r, int max_degree);

  int n() const { return l_; }
  int l() const { return l_; }
  int r() const { return r_; }
  int max_degree() const { return max_degree_; }
  ParamPoly t() const { return outer_->t(); }
  ParamPoly k() const { return outer_->k(); }
  const ContextPtr& outer() const { return outer_; }
  const ContextPtr& inner() const { return inner_; }

  FVector x(int i, const FVector& v) const;
  FVector y(int i, const FVector& v) const;
  FVector unit(Label g, int i, const FVector& v) const;
  FVector unit(const Matrix& g, int i, const FVector& v) const;
  FVector perm(const SiteArray& w, const FVector& v) const;
  FVector zero() const { return {}; }
  /// A PBW element of H_{t,k}(l, r), monomials applied right to left.
  FVector act(const CherednikElement& a, const FVector& v) const;

  FVector lift(const VlVector& v) const;
  VlVector project(const FVector& v) const;
  bool is_symmetric(const FVector& v) const;

  /// b in B_{t,k}(l, r) acting on V_l.
  VlVector act_spherical(const SphericalElement& b, const VlVector& v) const;
  /// Same on eF; NotSymmetric unless v is fixed by every rho(w).
  FVector act_spherical(const SphericalElement& b, const FVector& v) const;

  /// Explicit formulas on V_l. X01 throws InvalidArgument.
  VlVector act_generator(const VlGenerator& g, const VlVector& v) const;
  /// The image of g in B_{t,k}(l, r) under the composite map
  /// (T00(E_i^+-), T00(H_i), T01(E_i^+-), T01(H_i), T10(E_{r1})).
  SphericalElement generator_image(const VlGenerator& g) const;

  /// x^a y^b (x) e_I with |a| + |b| <= maxdeg.
  std::vector<VlKey> basis(int maxdeg) const;
  FVector f_basis_vector(const VlKey& k) const;

  std::string to_string(const VlVector& v) const;
  std::string to_string(const FVector& v) const;

 private:
  void check_degree(const SiteArray& x, const SiteArray& y) const;

  int l_, r_, max_degree_;
  ContextPtr outer_, inner_;
};

struct SquareCheck {
  std::string generator;
  std::string status;  // "pass", "fail", or "skipped: ..."
  long vectors = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return status != "fail"; }
};

/// The generators listed in VlGenerator, at all i, against the images under
/// act_spherical, on every basis vector of V_l of degree <= maxdeg.
std::vector<SquareCheck> verify_commuting_square(int l, int r, int maxdeg, int threads = 1);

}  // namespace ddca
