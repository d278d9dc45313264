#pragma once

// The spherical subalgebra B = eHe.
//
// He has the basis x^a S y^b e (a group element next to e is absorbed into
// the y-exponents), and S_n permutes these monomials by relabelling sites.
// B is the invariant part, so an element is stored by its coordinates on
// the orbit sums O_R = sum_{m in orbit R} m e, with R the canonical
// representative: active sites packed onto 0..h-1 in decreasing order of
// their (x-exponent, slot label, y-exponent) triples.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddca/cherednik.hpp"

namespace ddca {

using HeMap = std::map<CherednikMonomial, ParamPoly>;

/// Canonical orbit representative of an He monomial (perm part ignored).
CherednikMonomial canonical_orbit_rep(const CherednikMonomial& m, int n);
int active_sites(const CherednikMonomial& m, int n);
int total_degree(const CherednikMonomial& m, int n);
/// |Stab(m)| in S_n.
Rational stabilizer_size(const CherednikMonomial& m, int n);
Rational orbit_size(const CherednikMonomial& m, int n);
/// All monomials in the S_n-orbit of m.
std::vector<CherednikMonomial> orbit(const CherednikMonomial& m, int n);

class SphericalElement {
 public:
  explicit SphericalElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  /// The idempotent e, unit of B.
  static SphericalElement unit(ContextPtr ctx);
  /// e X e for X in He given in the basis x^a S y^b e.
  static SphericalElement from_he(ContextPtr ctx, const HeMap& he);

  const ContextPtr& context() const { return ctx_; }
  int n() const { return ctx_->n(); }
  int r() const { return ctx_->r(); }
  const std::map<CherednikMonomial, ParamPoly>& coords() const { return coords_; }
  ParamPoly coefficient(const CherednikMonomial& rep) const;
  bool is_zero() const { return coords_.empty(); }
  void add(const CherednikMonomial& rep, const ParamPoly& c);

  SphericalElement& operator+=(const SphericalElement& o);
  SphericalElement& operator-=(const SphericalElement& o);
  SphericalElement& operator*=(const ParamPoly& c);
  friend SphericalElement operator+(SphericalElement a, const SphericalElement& b) { return a += b; }
  friend SphericalElement operator-(SphericalElement a, const SphericalElement& b) { return a -= b; }
  friend SphericalElement operator*(SphericalElement a, const ParamPoly& c) { return a *= c; }
  friend SphericalElement operator*(const ParamPoly& c, SphericalElement a) { return a *= c; }
  friend SphericalElement operator*(const SphericalElement& a, const SphericalElement& b);
  friend bool operator==(const SphericalElement& a, const SphericalElement& b);

  /// The element as a member of H (n! * orbit-size terms; small n only).
  CherednikElement inner() const;
  /// The element in He coordinates, sum_R c_R sum_{m in orbit R} m.
  HeMap he_form() const;

  int v_degree() const;
  /// (horizontal, vertical) over orbit representatives; ZeroElement on 0.
  std::pair<int, int> bidegree() const;
  SphericalElement map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& f) const;
  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<CherednikMonomial, ParamPoly> coords_;
};

SphericalElement sandwich(const CherednikElement& a);
SphericalElement spherical_mul(const SphericalElement& a, const SphericalElement& b);
SphericalElement spherical_commutator(const SphericalElement& a, const SphericalElement& b);

/// Slot configuration `slots` times a rank-one tau-picture element, times e,
/// in He coordinates.
HeMap he_from_tau(const AlgebraContext& ctx, const SiteArray& slots, const TauMap& tau);

/// T_{p,q,n}(g) = (p!q!/(p+q)!) sum_i (g)_i (sum of shuffles of p x_i's and q y_i's) e.
SphericalElement t_gen(const ContextPtr& ctx, int p, int q, const Matrix& g);
SphericalElement t_gen(const ContextPtr& ctx, int p, int q, Label l);

struct TFactor {
  int p = 0, q = 0;
  Label label = kIdLabel;
  friend auto operator<=>(const TFactor&, const TFactor&) = default;
};

/// Multiplicity function m: (p, q, label) -> positive integer.
class TIndex {
 public:
  TIndex() = default;
  TIndex(std::initializer_list<std::pair<TFactor, int>> entries);

  void add(const TFactor& f, int count = 1);
  const std::map<TFactor, int>& entries() const { return mult_; }
  int size() const;    // |m|
  int weight() const;  // w(m)
  bool empty() const { return mult_.empty(); }
  bool has_trivial_factor() const;  // contains (0, 0, Id)
  /// Factors repeated by multiplicity, ascending.
  std::vector<TFactor> factors() const;
  /// Union of multisets.
  friend TIndex operator+(const TIndex& a, const TIndex& b);

  /// [[p, q, "id" | [a, b], mult], ...]
  std::string to_string(int r) const;
  static TIndex parse(const std::string& text, int r);

  /// Graded lexicographic: (w, |m|, entries).
  friend bool operator<(const TIndex& a, const TIndex& b);
  friend bool operator==(const TIndex&, const TIndex&) = default;

 private:
  std::map<TFactor, int> mult_;
};

using TExpansion = std::map<TIndex, ParamPoly>;

/// T_n(m): average over the distinct orderings of the factor products.
SphericalElement t_basis_elem(const ContextPtr& ctx, const TIndex& m);

/// Coefficients c_m with z = sum c_m T_n(m), by leading-term elimination in
/// the (vertical degree, horizontal degree, orbit) order. Throws NotInSpan
/// if a leading orbit is not reached by its T_n(m) and DegreeBoundExceeded if
/// a coefficient has (t,k)-degree above ceil(v/2).
TExpansion expand_in_t_basis(const SphericalElement& z);

/// sum_m c_m T_n(m).
SphericalElement from_t_expansion(const ContextPtr& ctx, const TExpansion& ex);

std::string t_expansion_to_string(const TExpansion& ex, int r);

}  // namespace ddca
