#include <random>

#include "doctest.h"
#include "ddca/errors.hpp"
#include "ddca/relations.hpp"
#include "ddca/vlrep.hpp"

using namespace ddca;
using K = VlGenerator::Kind;

namespace {

VlKey vk(std::initializer_list<int> idx, std::initializer_list<int> x = {}, std::initializer_list<int> y = {}) {
  VlKey k;
  std::size_t i = 0;
  for (int v : idx) k.idx[i++] = static_cast<std::uint8_t>(v - 1);
  i = 0;
  for (int v : x) k.x[i++] = static_cast<std::uint8_t>(v);
  i = 0;
  for (int v : y) k.y[i++] = static_cast<std::uint8_t>(v);
  return k;
}

FKey fk(const VlKey& k, const SiteArray& perm = identity_perm()) {
  FKey f;
  f.x = k.x;
  f.y = k.y;
  f.idx = k.idx;
  f.perm = perm;
  return f;
}

}  // namespace

TEST_CASE("full-space generator actions") {
  VlModel m(2, 2, 4);
  FVector one = FVector::basis(fk(vk({1, 2})));
  CHECK(m.x(0, one) == FVector::basis(fk(vk({1, 2}, {1, 0}))));
  // s12 on 1 (x) e1e2 is s12 (x) e2e1, which is 1 (x) e1e2 again in V_l
  FVector s = m.perm(transposition_array(0, 1), one);
  CHECK(s == FVector::basis(fk(vk({2, 1}), transposition_array(0, 1))));
  CHECK(m.project(s) == VlVector::basis(vk({1, 2})));
  // [y1, x1] acts as t - k s12 sigma12, i.e. m (t - k s12) (x) v
  FVector comm = m.y(0, m.x(0, one)) - m.x(0, m.y(0, one));
  FVector expected = ParamPoly::t() * one;
  expected -= ParamPoly::k() * FVector::basis(fk(vk({1, 2}), transposition_array(0, 1)));
  CHECK(comm == expected);
  CHECK_THROWS_AS(VlModel(2, 2, 0).x(0, one), Error);
}

TEST_CASE("relations hold on the full space") {
  for (auto [l, r] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 3}}) {
    VlModel m(l, r, 4);
    std::vector<FVector> vs;
    auto keys = m.basis(2);
    std::mt19937_64 rng(static_cast<unsigned>(l * 10 + r));
    std::shuffle(keys.begin(), keys.end(), rng);
    for (std::size_t q = 0; q < std::min<std::size_t>(keys.size(), 12); ++q) {
      FVector v = m.f_basis_vector(keys[q]);
      // a vector with non-trivial permutation part as well
      if (q % 3 == 0) v = m.perm(transposition_array(0, 1), v);
      vs.push_back(v);
    }
    for (const auto& fam : check_relations(m, vs)) CHECK_MESSAGE(fam.pass(), fam.family << ": " << fam.first_failure);
  }
}

TEST_CASE("lift and project") {
  VlModel m(3, 2, 3);
  for (const auto& k : m.basis(1)) {
    VlVector v = VlVector::basis(k);
    FVector f = m.lift(v);
    CHECK(m.is_symmetric(f));
    CHECK(m.project(f) == v);
  }
  CHECK_FALSE(m.is_symmetric(m.f_basis_vector(vk({1, 2, 1}))));
  CHECK_THROWS_AS(m.act_spherical(SphericalElement::unit(m.outer()), m.f_basis_vector(vk({1, 2, 1}))), Error);
}

TEST_CASE("generator formulas") {
  VlModel m(2, 4, 3);
  auto v = VlVector::basis(vk({1, 1}));
  VlVector expected = VlVector::basis(vk({4, 1}, {1, 0})) + VlVector::basis(vk({1, 4}, {0, 1}));
  CHECK(m.act_generator({K::X00Plus, 0, 0}, v) == expected);
  CHECK(m.act_generator({K::H, 0, 0}, VlVector::basis(vk({1, 2}))).is_zero());
  CHECK(m.act_generator({K::H, 0, 0}, VlVector::basis(vk({1, 1}))) == ParamPoly(2) * VlVector::basis(vk({1, 1})));
  expected = VlVector::basis(vk({1, 2}, {}, {1, 0})) + VlVector::basis(vk({2, 1}, {}, {0, 1}));
  CHECK(m.act_generator({K::XPlus, 0, 1}, VlVector::basis(vk({2, 2}))) == expected);
  CHECK_THROWS_AS(m.act_generator({K::X01, 0, 1}, v), Error);
  CHECK_THROWS_AS(m.act_generator({K::XPlus, 3, 0}, v), Error);
}

TEST_CASE("spherical action") {
  VlModel m(2, 2, 4);
  auto ctx = m.outer();
  for (const auto& k : m.basis(1)) {
    VlVector v = VlVector::basis(k);
    CHECK(m.act_spherical(SphericalElement::unit(ctx), v) == v);
  }
  // T00(E12) on the symmetrization of 1 (x) e2e2
  FVector sym = m.lift(VlVector::basis(vk({2, 2})));
  FVector got = m.act_spherical(t_gen(ctx, 0, 0, unit_label(2, 0, 1)), sym);
  CHECK(got == m.lift(VlVector::basis(vk({1, 2}))) + m.lift(VlVector::basis(vk({2, 1}))));
  CHECK(m.is_symmetric(got));

  // T10(g) is sum_j m x_j (x) (g)_j v
  Matrix g = Matrix::unit(2, 1, 0) + Matrix::unit(2, 0, 0) * Rational(3);
  for (const auto& k : m.basis(1)) {
    FVector base = m.f_basis_vector(k);
    FVector direct;
    for (int j = 0; j < 2; ++j) direct += m.x(j, m.unit(g, j, base));
    CHECK(m.act_spherical(t_gen(ctx, 1, 0, g), VlVector::basis(k)) == m.project(direct));
  }
}

TEST_CASE("spherical action is multiplicative") {
  VlModel m(3, 4, 5);
  auto ctx = m.outer();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> deg(0, 1), lab(0, 15);
  auto keys = m.basis(1);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int it = 0; it < 30; ++it) {
    SphericalElement a = t_gen(ctx, deg(rng), deg(rng), static_cast<Label>(lab(rng)));
    SphericalElement b = t_gen(ctx, 0, deg(rng), static_cast<Label>(lab(rng)));
    VlVector v = VlVector::basis(keys[pick(rng)]);
    CHECK(m.act_spherical(a * b, v) == m.act_spherical(a, m.act_spherical(b, v)));
  }
}

TEST_CASE("commuting square") {
  for (int l : {2, 3}) {
    auto checks = verify_commuting_square(l, 4, l == 2 ? 2 : 1);
    REQUIRE(checks.size() == 20);
    for (const auto& c : checks) CHECK_MESSAGE(c.ok(), c.generator << ": " << c.first_failure);
    CHECK(checks.back().status.rfind("skipped", 0) == 0);
  }
}
