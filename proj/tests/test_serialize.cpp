#include <random>

#include "doctest.h"
#include "ddca/errors.hpp"
#include "ddca/expr.hpp"
#include "ddca/serialize.hpp"
#include "ddca/suites.hpp"

using namespace ddca;
using CE = CherednikElement;

TEST_CASE("element expressions") {
  auto ctx = AlgebraContext::get(3, 2);
  CHECK(parse_element("x[1]*y[2]", ctx) == CE::x(ctx, 0) * CE::y(ctx, 1));
  CHECK(parse_element("y[1]*x[1] - x[1]*y[1]", ctx) ==
        CE::scalar(ctx, ParamPoly::t()) - ParamPoly::k() * (CE::transposition(ctx, 0, 1) * CE::sigma(ctx, 0, 1) +
                                                              CE::transposition(ctx, 0, 2) * CE::sigma(ctx, 0, 2)));
  CHECK(parse_element("(x[1] + 1)^2", ctx) == CE::x(ctx, 0) * CE::x(ctx, 0) + ParamPoly(2) * CE::x(ctx, 0) + CE::one(ctx));
  CHECK(parse_element("2/3*E[2,2][3] - -s[1,3]", ctx) ==
        ParamPoly(Rational(2, 3)) * CE::unit(ctx, Matrix::unit(2, 1, 1), 2) + CE::transposition(ctx, 0, 2));
  CHECK_THROWS_AS(parse_element("x[4]", ctx), Error);
  CHECK_THROWS_AS(parse_element("x[1] +", ctx), Error);
  CHECK_THROWS_AS(parse_element("z", ctx), Error);
  CHECK_THROWS_AS(parse_element("E[3,1][1]", ctx), Error);
  try {
    parse_element("x[1", ctx);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("element round trip") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      auto ctx = AlgebraContext::get(n, r);
      for (int q = 0; q < 5; ++q) {
        CE a = random_element(ctx, rng, 3, 4);
        auto text = dump(to_json(a), false);
        CE b = element_from_json(json::parse(text));
        CHECK(a == b);
        CHECK(dump(to_json(b), false) == text);
      }
    }
  // E_rr written out is rewritten as Id - sum of the other diagonal units
  auto ctx = AlgebraContext::get(2, 2);
  json j = to_json(CE::x(ctx, 0));
  j["terms"][0]["slots"] = json::array({json::array({2, 2, 2})});
  CHECK(element_from_json(j) == CE::x(ctx, 0) * CE::unit(ctx, Matrix::unit(2, 1, 1), 1));
  // numeric parameters survive
  auto num = AlgebraContext::get(2, 1, ParamPoly(Rational(1, 2)), ParamPoly(3));
  CE c = CE::y(num, 0) * CE::x(num, 0);
  CHECK(element_from_json(to_json(c)) == c);
  j["version"] = 7;
  CHECK_THROWS_AS(element_from_json(j), Error);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"format":"ddca-element","version":1,"n":2})")), Error);
}

TEST_CASE("spherical and expansion round trip") {
  auto ctx = AlgebraContext::get(3, 2);
  SphericalElement z = t_gen(ctx, 1, 1, unit_label(2, 0, 1)) * t_gen(ctx, 0, 1, kIdLabel);
  CHECK(spherical_from_json(to_json(z)) == z);
  json bad = to_json(z);
  bad["terms"][0]["xExp"] = json::array({0, 0, 1});
  CHECK_THROWS_AS(spherical_from_json(bad), Error);
  auto ex = expand_in_t_basis(z);
  CHECK(t_expansion_from_json(to_json(ex, 2), 2) == ex);
}

TEST_CASE("vector and report formats") {
  VlModel m(2, 3, 2);
  VlVector v = m.project(m.x(0, m.f_basis_vector(VlKey{})));
  v += ParamPoly::t() * VlVector::basis(VlKey{{}, {1}, {2, 1}});
  CHECK(vl_vector_from_json(to_json(m, v), 2) == v);
  CHECK_THROWS_AS(vl_vector_from_json(to_json(m, v), 3), Error);

  auto ctx = AlgebraContext::get(2, 1);
  VerificationReport ok("same", "n=2", SphericalElement::unit(ctx), SphericalElement::unit(ctx));
  CHECK(to_json(ok) == json{{"identity", "same"}, {"params", "n=2"}, {"pass", true}});
  VerificationReport bad("differ", "n=2", SphericalElement::unit(ctx), SphericalElement(ctx));
  CHECK(to_json(bad).at("pass") == false);
  CHECK(spherical_from_json(to_json(bad).at("difference")) == SphericalElement::unit(ctx));
  CHECK(dump(json{{"b", 1}, {"a", 2}}, false) == "{\"a\":2,\"b\":1}\n");
}
