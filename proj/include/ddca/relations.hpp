#pragma once

// Operator-level check of the defining relations of H_{t,k}(n, r) in any
// representation. A representation type provides
//   using Vector;
//   int n() const; int r() const; ParamPoly t() const; ParamPoly k() const;
//   Vector x(int i, const Vector&) const;  Vector y(int i, const Vector&) const;
//   Vector unit(Label l, int i, const Vector&) const;   // extended labels
//   Vector perm(const SiteArray& s, const Vector&) const;
//   Vector zero() const;
// and Vector supports +=, -=, *= ParamPoly and ==.

#include <string>
#include <vector>

#include "ddca/cherednik.hpp"

namespace ddca {

struct RelationFamilyResult {
  std::string family;
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

template <class Rep>
std::vector<RelationFamilyResult> check_relations(const Rep& rep, const std::vector<typename Rep::Vector>& vectors) {
  using V = typename Rep::Vector;
  const int n = rep.n(), r = rep.r();
  std::vector<RelationFamilyResult> out(5);
  out[0].family = "x-commute";
  out[1].family = "y-commute";
  out[2].family = "yx-commutator";
  out[3].family = "slots";
  out[4].family = "group";
  auto record = [](RelationFamilyResult& res, bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      if (res.failures == 0) res.first_failure = what;
      ++res.failures;
    }
  };
  // all r*r matrix units as extended labels
  std::vector<Label> units;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) units.push_back(unit_label(r, a, b));
  auto sigma = [&](int i, int j, const V& v) {
    V acc = rep.zero();
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) acc += rep.unit(unit_label(r, a, b), i, rep.unit(unit_label(r, b, a), j, v));
    return acc;
  };
  auto tr = [](int i, int j) { return transposition_array(i, j); };

  for (std::size_t vi = 0; vi < vectors.size(); ++vi) {
    const V& v = vectors[vi];
    const std::string where = " on vector #" + std::to_string(vi);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (i < j) {
          record(out[0], rep.x(i, rep.x(j, v)) == rep.x(j, rep.x(i, v)), "[x_i,x_j]" + ij + where);
          record(out[1], rep.y(i, rep.y(j, v)) == rep.y(j, rep.y(i, v)), "[y_i,y_j]" + ij + where);
        }
        V lhs = rep.y(i, rep.x(j, v));
        lhs -= rep.x(j, rep.y(i, v));
        V rhs = rep.zero();
        if (i == j) {
          rhs += v;
          rhs *= rep.t();
          for (int m = 0; m < n; ++m) {
            if (m == i) continue;
            V term = rep.perm(tr(i, m), sigma(i, m, v));
            term *= -rep.k();
            rhs += term;
          }
        } else {
          V term = rep.perm(tr(i, j), sigma(i, j, v));
          term *= rep.k();
          rhs += term;
        }
        record(out[2], lhs == rhs, "[y_i,x_j]" + ij + where);
      }
    // slot relations
    for (int i = 0; i < n; ++i) {
      record(out[3], rep.unit(kIdLabel, i, v) == v, "(Id)_i = 1" + where);
      for (Label g : units) {
        for (int j = 0; j < n; ++j) {
          record(out[3], rep.unit(g, i, rep.x(j, v)) == rep.x(j, rep.unit(g, i, v)), "[(g)_i,x_j]" + where);
          record(out[3], rep.unit(g, i, rep.y(j, v)) == rep.y(j, rep.unit(g, i, v)), "[(g)_i,y_j]" + where);
          for (Label h : units) {
            V lhs = rep.unit(g, i, rep.unit(h, j, v));
            lhs -= rep.unit(h, j, rep.unit(g, i, v));
            V rhs = rep.zero();
            if (i == j) {
              Label gh, hg;
              if (label_mul(r, g, h, gh)) rhs += rep.unit(gh, i, v);
              if (label_mul(r, h, g, hg)) rhs -= rep.unit(hg, i, v);
            }
            record(out[3], lhs == rhs, "[(g)_i,(h)_j]" + where);
          }
        }
      }
    }
    // semidirect product relations, generated by transpositions
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        SiteArray s = tr(a, b);
        record(out[4], rep.perm(s, rep.perm(s, v)) == v, "s^2 = 1" + where);
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            SiteArray s2 = tr(c, d);
            record(out[4], rep.perm(s, rep.perm(s2, v)) == rep.perm(perm_compose(s, s2, n), v),
                   "s s' = (s s')" + where);
          }
        for (int i = 0; i < n; ++i) {
          const int si = s[static_cast<std::size_t>(i)];
          record(out[4], rep.perm(s, rep.x(i, v)) == rep.x(si, rep.perm(s, v)), "s x_i = x_s(i) s" + where);
          record(out[4], rep.perm(s, rep.y(i, v)) == rep.y(si, rep.perm(s, v)), "s y_i = y_s(i) s" + where);
          for (Label g : units)
            record(out[4], rep.perm(s, rep.unit(g, i, v)) == rep.unit(g, si, rep.perm(s, v)),
                   "s (g)_i = (g)_s(i) s" + where);
        }
      }
  }
  return out;
}

/// Left-regular representation on H itself: applied to the unit element the
/// checks become normal-form identities between generator products.
class LeftRegularRep {
 public:
  using Vector = CherednikElement;
  explicit LeftRegularRep(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  int n() const { return ctx_->n(); }
  int r() const { return ctx_->r(); }
  ParamPoly t() const { return ctx_->t(); }
  ParamPoly k() const { return ctx_->k(); }
  Vector x(int i, const Vector& v) const { return CherednikElement::x(ctx_, i) * v; }
  Vector y(int i, const Vector& v) const { return CherednikElement::y(ctx_, i) * v; }
  Vector unit(Label l, int i, const Vector& v) const { return CherednikElement::unit(ctx_, l, i) * v; }
  Vector perm(const SiteArray& s, const Vector& v) const {
    CherednikMonomial m;
    m.perm = s;
    return CherednikElement::monomial(ctx_, m) * v;
  }
  Vector zero() const { return CherednikElement(ctx_); }

 private:
  ContextPtr ctx_;
};

}  // namespace ddca
