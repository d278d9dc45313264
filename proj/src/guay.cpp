#include "ddca/guay.hpp"

#include "ddca/errors.hpp"

namespace ddca {

namespace {

SphericalElement T(const ContextPtr& ctx, int p, int q, const Matrix& z) { return t_gen(ctx, p, q, z); }
Matrix E(int r, int a, int b) { return Matrix::unit(r, a, b); }

void require_traceless(const Matrix& z) {
  if (!z.trace().is_zero()) fail(ErrorCode::NonTraceless, "matrix " + z.to_string() + " is not traceless");
}

// psi(S(y, z)) for traceless y, z
SphericalElement S(const ContextPtr& ctx, const Matrix& y, const Matrix& z) {
  SphericalElement ty = T(ctx, 0, 0, y), tz = T(ctx, 0, 0, z);
  return ty * tz + tz * ty;
}

std::string index_params(int a, int b, int c, int d, const ContextPtr& ctx) {
  return "a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1) + " c=" + std::to_string(c + 1) +
         " d=" + std::to_string(d + 1) + " n=" + std::to_string(ctx->n()) + " r=" + std::to_string(ctx->r());
}

void check_indices(int a, int b, int c, int d, int r) {
  for (int i : {a, b, c, d})
    if (i < 0 || i >= r) fail(ErrorCode::IndexOutOfRange, "matrix index out of range");
  if (a == b || c == d || (a == d && b == c))
    fail(ErrorCode::IndexConstraintViolated, "need a != b, c != d and (a,b) != (d,c)");
}

}  // namespace

VerificationReport::VerificationReport(std::string name_, std::string params_, SphericalElement lhs_,
                                       SphericalElement rhs_)
    : name(std::move(name_)),
      params(std::move(params_)),
      lhs(std::move(lhs_)),
      rhs(std::move(rhs_)),
      difference(lhs - rhs),
      pass(difference.is_zero()) {}

SphericalElement psi(const GuayGenerator& g, const ContextPtr& ctx) {
  if (ctx->n() < 2) fail(ErrorCode::InvalidArgument, "psi needs n >= 2");
  require_traceless(g.z);
  switch (g.kind) {
    case GuayKind::Z: return T(ctx, 0, 0, g.z);
    case GuayKind::K: return T(ctx, 1, 0, g.z);
    case GuayKind::Q: return T(ctx, 0, 1, g.z);
    case GuayKind::P: return T(ctx, 1, 1, g.z);
  }
  fail(ErrorCode::InvalidArgument, "unknown generator kind");
}

SphericalElement main_relation_lhs(int a, int b, int c, int d, const ContextPtr& ctx) {
  const int r = ctx->r();
  check_indices(a, b, c, d, r);
  return spherical_commutator(T(ctx, 1, 0, E(r, a, b)), T(ctx, 0, 1, E(r, c, d)));
}

SphericalElement main_relation_rhs(int a, int b, int c, int d, const ContextPtr& ctx, GuayReading reading) {
  const int r = ctx->r();
  check_indices(a, b, c, d, r);
  const ParamPoly lambda = ctx->k();
  const ParamPoly beta = ctx->t() * Rational(-1, 2) - ctx->k() * Rational(r - 2, 4);
  const Matrix eab = E(r, a, b), ecd = E(r, c, d);

  SphericalElement out = T(ctx, 1, 1, commutator(eab, ecd));
  SphericalElement deltas(ctx);
  if (b == c) deltas += T(ctx, 0, 0, E(r, a, d));
  if (a == d) deltas += T(ctx, 0, 0, reading == GuayReading::Literal ? E(r, b, c) : E(r, c, b));
  out += deltas * (beta - lambda * Rational(1, 2));
  // The full sum over i, j includes the Cartan terms i = j. Those equal
  // (delta_ad + delta_bc - delta_ac - delta_bd) S(E_ab, E_cd), so away from
  // a = c and b = d this is the off-diagonal sum plus the separate S term.
  const bool full = reading == GuayReading::Corrected;
  if (!full) {
    const int dd = (a == d) + (c == b);
    if (dd) out += S(ctx, eab, ecd) * (lambda * Rational(dd, 4));
  }
  SphericalElement sum(ctx);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j && !full) continue;
      Matrix u = commutator(eab, E(r, i, j)), v = commutator(E(r, j, i), ecd);
      if (u.is_zero() || v.is_zero()) continue;
      sum += S(ctx, u, v);
    }
  out += sum * (lambda * Rational(1, 4));
  return out;
}

VerificationReport verify_main_relation(int a, int b, int c, int d, const ContextPtr& ctx) {
  if (ctx->r() < 4) fail(ErrorCode::InvalidArgument, "the relation is stated for r >= 4");
  if (ctx->n() < 2) fail(ErrorCode::InvalidArgument, "need n >= 2");
  VerificationReport rep("main-relation", index_params(a, b, c, d, ctx), main_relation_lhs(a, b, c, d, ctx),
                         main_relation_rhs(a, b, c, d, ctx));
  const int r = ctx->r();
  if (b != c && a != d) {
    SphericalElement disjoint = T(ctx, 0, 0, E(r, a, d)) * T(ctx, 0, 0, E(r, c, b)) * (-ctx->k());
    if (!(rep.lhs == disjoint)) {
      rep.pass = false;
      rep.name = "main-relation (disjoint form)";
      rep.difference = rep.lhs - disjoint;
    }
  }
  return rep;
}

std::vector<VerificationReport> verify_sl_current(const Matrix& z1, const Matrix& z2, const ContextPtr& ctx) {
  require_traceless(z1);
  require_traceless(z2);
  const Matrix br = commutator(z1, z2);
  const std::string params = "z1=" + z1.to_string() + " z2=" + z2.to_string() + " n=" + std::to_string(ctx->n());
  std::vector<VerificationReport> out;
  out.emplace_back("sl-current T00", params, spherical_commutator(T(ctx, 0, 0, z1), T(ctx, 0, 0, z2)),
                   T(ctx, 0, 0, br));
  out.emplace_back("sl-current T10", params, spherical_commutator(T(ctx, 1, 0, z1), T(ctx, 1, 0, z2)),
                   T(ctx, 2, 0, br));
  out.emplace_back("sl-current T01", params, spherical_commutator(T(ctx, 0, 1, z1), T(ctx, 0, 1, z2)),
                   T(ctx, 0, 2, br));
  return out;
}

std::vector<VerificationReport> verify_k_extraction(const ContextPtr& ctx) {
  const int n = ctx->n(), r = ctx->r();
  if (n < 2 || r < 2) fail(ErrorCode::InvalidArgument, "need n >= 2 and r >= 2");
  const Matrix H = E(r, 0, 0) - E(r, 1, 1);
  const Matrix H2 = E(r, 0, 0) + E(r, 1, 1);
  const SphericalElement lhs = spherical_commutator(T(ctx, 1, 0, H), T(ctx, 0, 1, H));
  const std::string params = "n=" + std::to_string(n) + " r=" + std::to_string(r);

  using CE = CherednikElement;
  CE inner(ctx);
  for (int i = 0; i < n; ++i) {
    inner += CE::unit(ctx, H2, i) * (-ctx->t());
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      CE sig = CE::sigma(ctx, i, j);
      inner += CE::unit(ctx, H, i) * CE::unit(ctx, H, j) * sig * (-ctx->k());
      inner += CE::unit(ctx, H2, i) * sig * ctx->k();
    }
  }
  std::vector<VerificationReport> out;
  out.emplace_back("k-extraction three-term", params, lhs, sandwich(inner));

  SphericalElement combo = T(ctx, 0, 0, E(r, 0, 1)) * T(ctx, 0, 0, E(r, 1, 0)) +
                           T(ctx, 0, 0, E(r, 1, 0)) * T(ctx, 0, 0, E(r, 0, 1));
  for (int a = 0; a < r; ++a) {
    if (a != 0) combo += T(ctx, 0, 0, E(r, 0, a)) * T(ctx, 0, 0, E(r, a, 0));
    if (a != 1) combo += T(ctx, 0, 0, E(r, 1, a)) * T(ctx, 0, 0, E(r, a, 1));
  }
  out.emplace_back("k-extraction combination", params, lhs - combo * ctx->k(),
                   T(ctx, 0, 0, H2) * (-(ctx->t() + ctx->k() * Rational(r))));
  return out;
}

ParamPoly identity_part(const SphericalElement& z) {
  const int n = z.n(), r = z.r();
  ParamPoly out;
  ParamPoly diag;
  for (const auto& [m, c] : z.coords()) {
    if (total_degree(m, n) != 0 || active_sites(m, n) > 1)
      fail(ErrorCode::InvalidArgument, "element is not a sum of single-site slot operators");
    if (active_sites(m, n) == 0) {
      out += c;
      continue;
    }
    auto [a, b] = label_entry(r, m.slot[0]);
    if (a == b) diag += c;
  }
  return out + diag * Rational(n, r);
}

ParamPoly fit_trace_term(int r, const std::vector<int>& ranks) {
  if (ranks.size() < 2) fail(ErrorCode::InvalidArgument, "need at least two ranks");
  std::vector<std::pair<long, ParamPoly>> samples;
  for (int n : ranks) {
    auto ctx = AlgebraContext::get(n, r);
    auto reports = verify_k_extraction(ctx);
    samples.emplace_back(n, identity_part(reports[1].lhs));
  }
  try {
    return interpolate_in_K(samples, 1);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentSamples) throw;
    fail(ErrorCode::FitValidationFailed, "identity part is not linear in n");
  }
}

}  // namespace ddca
