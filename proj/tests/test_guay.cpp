#include <random>

#include "doctest.h"
#include "ddca/errors.hpp"
#include "ddca/guay.hpp"

using namespace ddca;
using CE = CherednikElement;

namespace {

Matrix E(int r, int a, int b) { return Matrix::unit(r, a - 1, b - 1); }

Matrix random_traceless(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  Matrix z(r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) z.at(a, b) = Rational(v(rng));
  z.at(r - 1, r - 1) -= z.trace();
  return z;
}

}  // namespace

TEST_CASE("psi") {
  auto ctx = AlgebraContext::get(3, 2);
  CE sum(ctx), sym(ctx);
  for (int i = 0; i < 3; ++i) {
    sum += CE::unit(ctx, E(2, 1, 2), i);
    sym += CE::unit(ctx, E(2, 1, 2), i) * (CE::x(ctx, i) * CE::y(ctx, i) + CE::y(ctx, i) * CE::x(ctx, i)) *
           ParamPoly(Rational(1, 2));
  }
  CHECK(psi({GuayKind::Z, E(2, 1, 2)}, ctx) == sandwich(sum));
  CHECK(psi({GuayKind::P, E(2, 1, 2)}, ctx) == sandwich(sym));
  CHECK(psi({GuayKind::K, E(2, 2, 1)}, ctx) == t_gen(ctx, 1, 0, E(2, 2, 1)));
  try {
    psi({GuayKind::Z, Matrix::identity(2)}, ctx);
    FAIL("expected NonTraceless");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonTraceless);
  }
}

TEST_CASE("main relation examples") {
  auto ctx = AlgebraContext::get(4, 4);
  CHECK(verify_main_relation(0, 1, 1, 2, ctx).pass);
  auto rep = verify_main_relation(0, 1, 2, 3, ctx);
  CHECK(rep.pass);
  CHECK(rep.lhs == t_gen(ctx, 0, 0, E(4, 1, 4)) * t_gen(ctx, 0, 0, E(4, 3, 2)) * (-ParamPoly::k()));
  try {
    verify_main_relation(0, 1, 1, 0, ctx);
    FAIL("expected IndexConstraintViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexConstraintViolated);
  }
  CHECK_THROWS_AS(verify_main_relation(0, 0, 1, 2, ctx), Error);
}

TEST_CASE("readings of the right-hand side") {
  auto ctx = AlgebraContext::get(3, 4);
  // a = d, b != c: delta_ad must multiply E_cb
  auto lhs = main_relation_lhs(0, 1, 2, 0, ctx);
  CHECK(lhs == main_relation_rhs(0, 1, 2, 0, ctx, GuayReading::Corrected));
  CHECK(lhs == main_relation_rhs(0, 1, 2, 0, ctx, GuayReading::OffDiagonal));
  CHECK_FALSE(lhs == main_relation_rhs(0, 1, 2, 0, ctx, GuayReading::Literal));
  // a = c: the off-diagonal sum misses half of -k E_ad E_cb
  lhs = main_relation_lhs(0, 1, 0, 2, ctx);
  CHECK(lhs == main_relation_rhs(0, 1, 0, 2, ctx, GuayReading::Corrected));
  CHECK(lhs == t_gen(ctx, 0, 0, E(4, 1, 3)) * t_gen(ctx, 0, 0, E(4, 1, 2)) * (-ParamPoly::k()));
  auto off = main_relation_rhs(0, 1, 0, 2, ctx, GuayReading::OffDiagonal);
  CHECK(lhs - off == t_gen(ctx, 0, 0, E(4, 1, 3)) * t_gen(ctx, 0, 0, E(4, 1, 2)) * (ParamPoly::k() * Rational(-1, 2)));
  // elsewhere the two forms agree
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (a == b || c == d || (a == d && b == c) || a == c || b == d) continue;
          CHECK(main_relation_rhs(a, b, c, d, ctx, GuayReading::Corrected) ==
                main_relation_rhs(a, b, c, d, ctx, GuayReading::OffDiagonal));
        }
}

TEST_CASE("main relation, all indices at n = 3, r = 4") {
  auto ctx = AlgebraContext::get(3, 4);
  int count = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (a == b || c == d || (a == d && b == c)) continue;
          auto rep = verify_main_relation(a, b, c, d, ctx);
          CHECK_MESSAGE(rep.pass, rep.name << " " << rep.params);
          ++count;
        }
  CHECK(count == 132);
}

TEST_CASE("sl current") {
  auto c2 = AlgebraContext::get(3, 2);
  auto reps = verify_sl_current(E(2, 1, 2), E(2, 2, 1), c2);
  for (const auto& rep : reps) CHECK(rep.pass);
  CHECK(reps[0].rhs == t_gen(c2, 0, 0, E(2, 1, 1) - E(2, 2, 2)));
  for (const auto& rep : verify_sl_current(E(2, 1, 2), E(2, 1, 2), c2)) CHECK(rep.lhs.is_zero());
  auto c4 = AlgebraContext::get(3, 4);
  for (const auto& rep : verify_sl_current(E(4, 1, 2), E(4, 3, 4), c4)) CHECK(rep.lhs.is_zero());

  for (int r = 2; r <= 4; ++r)
    for (int n = 2; n <= 4; ++n) {
      auto ctx = AlgebraContext::get(n, r);
      std::vector<Matrix> elems;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          if (a != b) elems.push_back(Matrix::unit(r, a, b));
      for (int a = 0; a + 1 < r; ++a) elems.push_back(Matrix::unit(r, a, a) - Matrix::unit(r, a + 1, a + 1));
      for (const auto& z1 : elems)
        for (const auto& z2 : elems)
          for (const auto& rep : verify_sl_current(z1, z2, ctx)) CHECK_MESSAGE(rep.pass, rep.params);
    }
}

TEST_CASE("T11 is linear and adjoint-equivariant") {
  auto ctx = AlgebraContext::get(3, 3);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    Matrix y = random_traceless(3, rng), z = random_traceless(3, rng);
    Rational c(it - 7, 3);
    CHECK(t_gen(ctx, 1, 1, y + z * c) == t_gen(ctx, 1, 1, y) + t_gen(ctx, 1, 1, z) * ParamPoly(c));
    CHECK(spherical_commutator(t_gen(ctx, 0, 0, y), t_gen(ctx, 1, 1, z)) == t_gen(ctx, 1, 1, commutator(y, z)));
  }
}

TEST_CASE("k-extraction") {
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 4}, std::pair{2, 3}}) {
    auto reps = verify_k_extraction(AlgebraContext::get(n, r));
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].pass);
    CHECK(reps[1].pass);
  }
  for (int r : {2, 4}) {
    ParamPoly fit = fit_trace_term(r, {3, 4, 5});
    const ParamPoly tk = ParamPoly::t() + ParamPoly::k() * Rational(r);
    // (tr(E11+E22)/r) n times -(t + rk)
    CHECK(fit == ParamPoly::K() * tk * Rational(-2, r));
    CHECK(fit * Rational(r) == ParamPoly::K() * tk * Rational(-2));
  }
}
