#pragma once

// Polynomial representation k[x_1..x_n] (x) (k^r)^{(x)n} of H_{t,k}(n, r),
// with y_i acting by the Dunkl operator
//   t d/dx_i - k sum_{j != i} (x_i - x_j)^{-1} (1 - s_ij^x).

#include <map>
#include <string>
#include <utility>

#include "ddca/cherednik.hpp"

namespace ddca {

struct PolyTensorKey {
  SiteArray x{};    // exponents
  SiteArray idx{};  // tensor indices, 0-based
  friend auto operator<=>(const PolyTensorKey&, const PolyTensorKey&) = default;
};

class PolyTensorVector {
 public:
  explicit PolyTensorVector(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static PolyTensorVector basis(ContextPtr ctx, const PolyTensorKey& key, const ParamPoly& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const std::map<PolyTensorKey, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PolyTensorKey& key, const ParamPoly& c);

  PolyTensorVector& operator+=(const PolyTensorVector& o);
  PolyTensorVector& operator-=(const PolyTensorVector& o);
  PolyTensorVector& operator*=(const ParamPoly& c);
  friend PolyTensorVector operator+(PolyTensorVector a, const PolyTensorVector& b) { return a += b; }
  friend PolyTensorVector operator-(PolyTensorVector a, const PolyTensorVector& b) { return a -= b; }
  friend PolyTensorVector operator*(const ParamPoly& c, PolyTensorVector a) { return a *= c; }
  friend bool operator==(const PolyTensorVector& a, const PolyTensorVector& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<PolyTensorKey, ParamPoly> terms_;
};

PolyTensorVector act_x(int i, const PolyTensorVector& v);
PolyTensorVector act_y(int i, const PolyTensorVector& v);
PolyTensorVector act_unit(Label g, int i, const PolyTensorVector& v);
PolyTensorVector act_unit(const Matrix& g, int i, const PolyTensorVector& v);
/// s^x (x) P_s: x_i -> x_{s(i)} and the tensor factor in slot i moves to s(i).
PolyTensorVector act_perm(const Permutation& s, const PolyTensorVector& v);
/// Right to left through each PBW monomial.
PolyTensorVector act_element(const CherednikElement& a, const PolyTensorVector& v);

/// (x^e - s_ij x^e) / (x_i - x_j) as a list of (exponent vector, coefficient).
std::vector<std::pair<SiteArray, long>> divided_difference(const SiteArray& e, int i, int j);

/// All basis vectors x^e (x) e_I with |e| <= maxdeg.
std::vector<PolyTensorKey> polyrep_basis(int n, int r, int maxdeg);

/// Compares the actions of a and b on every basis vector of degree <= maxdeg.
bool oracle_equal(const CherednikElement& a, const CherednikElement& b, int maxdeg);

}  // namespace ddca

namespace ddca {

/// Adapter for check_relations().
class PolyRep {
 public:
  using Vector = PolyTensorVector;
  explicit PolyRep(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  int n() const { return ctx_->n(); }
  int r() const { return ctx_->r(); }
  ParamPoly t() const { return ctx_->t(); }
  ParamPoly k() const { return ctx_->k(); }
  Vector x(int i, const Vector& v) const { return act_x(i, v); }
  Vector y(int i, const Vector& v) const { return act_y(i, v); }
  Vector unit(Label l, int i, const Vector& v) const { return act_unit(l, i, v); }
  Vector perm(const SiteArray& s, const Vector& v) const { return act_perm(to_permutation(s, ctx_->n()), v); }
  Vector zero() const { return PolyTensorVector(ctx_); }

 private:
  ContextPtr ctx_;
};

}  // namespace ddca
