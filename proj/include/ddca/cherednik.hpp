#pragma once

// The extended Cherednik algebra H_{t,k}(n, r) in PBW normal form
// x^a * (matrix slots) * s * y^b.
//
// Internally commutators are computed through tau_w = w * sigma_w, which
// commutes with every matrix slot and satisfies
//   [y_i, x_j] = delta_ij (t - k sum_{m != i} tau_im) + (1 - delta_ij) k tau_ij,
// so reordering y^b x^c reduces to the rank-one algebra. Site indices in
// this API are 0-based.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ddca/coeffring.hpp"
#include "ddca/slots.hpp"
#include "ddca/symcomb.hpp"

namespace ddca {

SiteArray identity_perm();
/// (a o b)(i) = a(b(i)).
SiteArray perm_compose(const SiteArray& a, const SiteArray& b, int n);
SiteArray perm_inverse(const SiteArray& a, int n);
/// (v . e)_{v(i)} = e_i.
SiteArray perm_act(const SiteArray& v, const SiteArray& e, int n);
SiteArray transposition_array(int i, int j);
SiteArray to_site_array(const Permutation& p);
Permutation to_permutation(const SiteArray& a, int n);

/// x^e tau_u y^f in the rank-one (tau) picture.
struct TauKey {
  SiteArray e{}, u = identity_perm(), f{};
  friend auto operator<=>(const TauKey&, const TauKey&) = default;
};

struct TauTerm {
  TauKey key;
  ParamPoly coeff;
};

using TauExpansion = std::vector<TauTerm>;
using TauMap = std::map<TauKey, ParamPoly>;

/// Shared per-(n, r, t, k) data: parameter values and memoized reorderings.
class AlgebraContext {
 public:
  static std::shared_ptr<const AlgebraContext> get(int n, int r);
  /// Same algebra with the parameters t, k replaced by arbitrary values
  /// (used for H_{-t,-k}).
  static std::shared_ptr<const AlgebraContext> get(int n, int r, const ParamPoly& t, const ParamPoly& k);

  int n() const { return n_; }
  int r() const { return r_; }
  const ParamPoly& t() const { return t_; }
  const ParamPoly& k() const { return k_; }

  /// y^b x^c rewritten as sum of x^e tau_u y^f.
  std::shared_ptr<const TauExpansion> yx(const SiteArray& b, const SiteArray& c) const;
  /// Extended-label expansion of sigma_u (see sigma_configs).
  std::shared_ptr<const std::vector<SiteArray>> sigma(const SiteArray& u) const;

  /// Product in the rank-one tau picture.
  TauMap tau_mul(const TauMap& a, const TauMap& b) const;

  AlgebraContext(int n, int r, ParamPoly t, ParamPoly k);

 private:
  TauExpansion compute_yx(const SiteArray& b, const SiteArray& c) const;

  int n_, r_;
  ParamPoly t_, k_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<SiteArray, SiteArray>, std::shared_ptr<const TauExpansion>> yx_cache_;
  mutable std::map<SiteArray, std::shared_ptr<const std::vector<SiteArray>>> sigma_cache_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// x^x * slots * perm * y^y. Unused trailing sites hold zeros / fixed points.
struct CherednikMonomial {
  SiteArray x{}, slot{}, perm = identity_perm(), y{};
  friend auto operator<=>(const CherednikMonomial&, const CherednikMonomial&) = default;
};

std::string monomial_to_string(const CherednikMonomial& m, int n, int r);

class CherednikElement {
 public:
  explicit CherednikElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static CherednikElement scalar(ContextPtr ctx, const ParamPoly& c);
  static CherednikElement one(ContextPtr ctx) { return scalar(std::move(ctx), 1); }
  static CherednikElement x(ContextPtr ctx, int i);
  static CherednikElement y(ContextPtr ctx, int i);
  static CherednikElement unit(ContextPtr ctx, Label l, int i);
  static CherednikElement unit(ContextPtr ctx, const Matrix& g, int i);
  static CherednikElement perm(ContextPtr ctx, const Permutation& s);
  static CherednikElement transposition(ContextPtr ctx, int i, int j);
  /// sigma_ij = sum_{a,b} (E_ab)_i (E_ba)_j.
  static CherednikElement sigma(ContextPtr ctx, int i, int j);
  static CherednikElement monomial(ContextPtr ctx, const CherednikMonomial& m, const ParamPoly& c = 1);

  const ContextPtr& context() const { return ctx_; }
  int n() const { return ctx_->n(); }
  int r() const { return ctx_->r(); }
  const std::map<CherednikMonomial, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const CherednikMonomial& m, const ParamPoly& c);

  CherednikElement& operator+=(const CherednikElement& o);
  CherednikElement& operator-=(const CherednikElement& o);
  CherednikElement& operator*=(const ParamPoly& c);
  friend CherednikElement operator+(CherednikElement a, const CherednikElement& b) { return a += b; }
  friend CherednikElement operator-(CherednikElement a, const CherednikElement& b) { return a -= b; }
  friend CherednikElement operator*(CherednikElement a, const ParamPoly& c) { return a *= c; }
  friend CherednikElement operator*(const ParamPoly& c, CherednikElement a) { return a *= c; }
  friend CherednikElement operator*(const CherednikElement& a, const CherednikElement& b);
  CherednikElement operator-() const;

  friend bool operator==(const CherednikElement& a, const CherednikElement& b);

  /// (horizontal, vertical); the permutation factor does not count towards
  /// the horizontal degree. Throws ZeroElement.
  std::pair<int, int> bidegree() const;
  /// Maximal total x,y degree (0 for the zero element).
  int v_degree() const;

  /// Applies a substitution to every coefficient.
  CherednikElement map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& f) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<CherednikMonomial, ParamPoly> terms_;
};

CherednikElement mul(const CherednikElement& a, const CherednikElement& b);
CherednikElement commutator(const CherednikElement& a, const CherednikElement& b);

void check_same_context(const AlgebraContext& a, const AlgebraContext& b);

}  // namespace ddca
