#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "doctest.h"
#include "ddca/errors.hpp"
#include "ddca/interp.hpp"

using namespace ddca;

namespace {

Label L(int a, int b) { return unit_label(2, a - 1, b - 1); }
TIndex single(int p, int q, Label l) { return TIndex{{TFactor{p, q, l}, 1}}; }

std::vector<TIndex> singles_up_to(int w) {
  std::vector<TIndex> out;
  for (int ww = 0; ww <= w; ++ww)
    for (int p = 0; p <= ww; ++p)
      for (Label l = 0; l < 4; ++l)
        if (ww > 0 || l != 0) out.push_back(single(p, ww - p, l));
  return out;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ddca_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("unit table") {
  auto t = structure_constants(TIndex{}, TIndex{}, 2);
  CHECK(t.entries.size() == 1);
  CHECK(t.entries.at(TIndex{}) == ParamPoly(1));
  CHECK(specialize(t, Rational(17)) == t.entries);
  auto u = structure_constants(TIndex{}, single(1, 0, L(1, 2)), 2);
  CHECK(u.entries.at(single(1, 0, L(1, 2))) == ParamPoly(1));
  CHECK_THROWS_AS(structure_constants(single(0, 0, 0), TIndex{}, 2), Error);
}

TEST_CASE("E12 * E21 table") {
  auto t = structure_constants(single(0, 0, L(1, 2)), single(0, 0, L(2, 1)), 2);
  TExpansion expected;
  expected[single(0, 0, L(1, 2)) + single(0, 0, L(2, 1))] = 1;
  expected[single(0, 0, L(1, 1))] = 1;
  expected[TIndex{}] = ParamPoly::K() * Rational(-1, 2);
  CHECK(t.entries == expected);
  // brute force at fixed ranks
  for (int n : {5, 6, 7}) {
    auto direct = product_at_rank(single(0, 0, L(1, 2)), single(0, 0, L(2, 1)), 2, n);
    CHECK(direct.at(TIndex{}) == ParamPoly(Rational(-n, 2)));
    CHECK(specialize(t, n) == direct);
  }
  CHECK(specialize(t, 6).at(TIndex{}) == ParamPoly(-3));
  for (int n : t.fit.sample_ranks)
    CHECK(specialize(t, n) == product_at_rank(single(0, 0, L(1, 2)), single(0, 0, L(2, 1)), 2, n));
}

TEST_CASE("commuting pure-x generators") {
  for (Label l : {Label(0), L(1, 2), L(2, 1)}) {
    auto t = structure_constants(single(1, 0, l), single(1, 0, l), 2);
    CHECK(t.entries.size() == 1);
    CHECK(t.entries.at(TIndex{{TFactor{1, 0, l}, 2}}) == ParamPoly(1));
  }
}

TEST_CASE("tables carry t, k and K") {
  auto t = structure_constants(single(1, 0, L(1, 2)), single(0, 1, L(2, 1)), 2);
  bool has_K = false;
  for (const auto& [m, c] : t.entries) {
    CHECK_FALSE(m.has_trivial_factor());
    CHECK(c.degree_K() <= 2);
    has_K = has_K || c.depends_on_K();
  }
  CHECK(has_K);
  // one rank past the held-out one
  const int n = t.fit.held_out_rank + 1;
  CHECK(specialize(t, n) == product_at_rank(t.m1, t.m2, 2, n));
}

TEST_CASE("polynomiality spot check on random tables") {
  auto pool = singles_up_to(2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int it = 0; it < 10; ++it) {
    TIndex a = pool[pick(rng)], b = pool[pick(rng)];
    if (a.weight() + b.weight() > 3) b = single(0, 0, L(1, 2));
    auto t = structure_constants(a, b, 2);
    CHECK(t.fit.sample_ranks.size() == static_cast<std::size_t>(t.fit.degree_bound_K + 1));
    const int n = t.fit.held_out_rank + 1;
    CHECK(specialize(t, n) == product_at_rank(a, b, 2, n));
  }
}

TEST_CASE("project_to_finite_rank") {
  auto ctx = AlgebraContext::get(3, 2);
  TExpansion g{{single(1, 0, L(1, 2)), 1}};
  CHECK(project_to_finite_rank(g, 3, 2) == t_gen(ctx, 1, 0, L(1, 2)));
  TExpansion kunit{{TIndex{}, ParamPoly::K()}};
  CHECK(project_to_finite_rank(kunit, 5, 2) == SphericalElement::unit(AlgebraContext::get(5, 2)) * ParamPoly(5));

  auto pool = singles_up_to(1);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int it = 0; it < 20; ++it) {
    TExpansion a, b;
    a[pool[pick(rng)]] = ParamPoly(coeff(rng)) + ParamPoly::K();
    b[pool[pick(rng)]] = ParamPoly(1);
    b[pool[pick(rng)]] += ParamPoly::t();
    std::erase_if(b, [](const auto& kv) { return kv.second.is_zero(); });
    auto lhs = project_to_finite_rank(a, 5, 2) * project_to_finite_rank(b, 5, 2);
    CHECK(lhs == project_to_finite_rank(d_mul(a, b, 2), 5, 2));
  }
}

TEST_CASE("associativity through tables") {
  auto pool = singles_up_to(2);
  int checked = 0;
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        if (a.weight() + b.weight() + c.weight() > 2) continue;
        TExpansion ea{{a, 1}}, eb{{b, 1}}, ec{{c, 1}};
        CHECK(d_mul(d_mul(ea, eb, 2), ec, 2) == d_mul(ea, d_mul(eb, ec, 2), 2));
        ++checked;
      }
  MESSAGE(checked << " triples");
}

TEST_CASE("serialization and cache") {
  auto dir = fresh_dir("cache");
  TableCache cache(dir);
  TIndex a = single(0, 0, L(1, 2)), b = single(0, 0, L(2, 1));
  CHECK_FALSE(cache.lookup(2, a, b).has_value());
  auto t = structure_constants(a, b, 2);
  CHECK(table_from_text(table_to_text(t)) == t);
  CHECK(table_from_text(table_to_text(t, true)) == t);
  cache.store(t);
  auto path = cache.path_for(2, a, b);
  std::ifstream f1(path);
  std::string bytes((std::istreambuf_iterator<char>(f1)), {});
  auto hit = cache.lookup(2, a, b);
  REQUIRE(hit.has_value());
  CHECK(table_to_text(*hit) == bytes);

  // tamper: change the scalar entry
  auto pos = bytes.find("-1/2*K");
  REQUIRE(pos != std::string::npos);
  std::string bad = bytes;
  bad.replace(pos, 6, "-1/3*K");
  std::ofstream(path, std::ios::trunc) << bad;
  CHECK_THROWS_AS(cache.lookup(2, a, b), Error);
  CHECK_FALSE(std::filesystem::exists(path));

  std::ofstream(path, std::ios::trunc) << "{ not json";
  try {
    cache.lookup(2, a, b);
    FAIL("expected CacheCorrupt");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CacheCorrupt);
  }
  std::ofstream(path, std::ios::trunc) << "garbage";
  InterpOptions opts;
  opts.cache_dir = dir;
  CHECK(structure_constants(a, b, 2, opts) == t);
  CHECK(cache.lookup(2, a, b).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("worker count does not change tables") {
  TIndex a = single(1, 1, L(1, 2)), b = single(0, 1, Label(0));
  InterpOptions one, three;
  three.threads = 3;
  CHECK(table_to_text(structure_constants(a, b, 2, one)) == table_to_text(structure_constants(a, b, 2, three)));
}
