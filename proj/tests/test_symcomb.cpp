#include <random>

#include "doctest.h"
#include "ddca/errors.hpp"
#include "ddca/symcomb.hpp"

using namespace ddca;

namespace {

long content_by_boxes(const YoungDiagram& d) {
  long s = 0;
  for (int i = 0; i < d.length(); ++i)
    for (int j = 0; j < d.rows()[static_cast<std::size_t>(i)]; ++j) s += j - i;
  return s;
}

YoungDiagram random_diagram(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5), part(1, 6);
  std::vector<int> rows;
  int l = len(rng);
  for (int i = 0; i < l; ++i) rows.push_back(part(rng));
  std::sort(rows.rbegin(), rows.rend());
  return YoungDiagram(rows);
}

}  // namespace

TEST_CASE("content") {
  CHECK(content(YoungDiagram()) == 0);
  CHECK(content(YoungDiagram({3})) == 3);
  CHECK(content(YoungDiagram({2, 1})) == 0);
  CHECK(content(YoungDiagram({4, 2, 1})) == 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto d = random_diagram(rng);
    CHECK(content(d) == content_by_boxes(d));
  }
}

TEST_CASE("pad") {
  CHECK(pad(YoungDiagram({2, 1}), 6) == YoungDiagram({3, 2, 1}));
  CHECK(pad(YoungDiagram(), 4) == YoungDiagram({4}));
  CHECK(pad(YoungDiagram({1}), 2) == YoungDiagram({1, 1}));
  CHECK_THROWS_AS(pad(YoungDiagram({2, 1}), 4), Error);
  try {
    pad(YoungDiagram({3}), 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PadTooSmall);
  }
}

TEST_CASE("interpolated omega value") {
  CHECK(interpolated_omega_value(YoungDiagram({1}), 4) == Rational(2));
  CHECK(content(YoungDiagram({3, 1})) == 2);
  for (int n = 1; n < 8; ++n)
    CHECK(interpolated_omega_value(YoungDiagram(), n) == Rational(content(YoungDiagram({n}))));
  CHECK(interpolated_omega_value(YoungDiagram({2, 1}), 7) == Rational(3));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> extra(3, 10);
  for (int i = 0; i < 200; ++i) {
    auto d = random_diagram(rng);
    int n = d.first_row() + d.size() + extra(rng);
    CHECK(interpolated_omega_value(d, n) == Rational(content_by_boxes(pad(d, n))));
  }
}

TEST_CASE("permutations") {
  auto p = Permutation::parse("[2,3,1]");
  CHECK(p(0) == 1);
  CHECK(p.to_string() == "[2,3,1]");
  CHECK((p * p.inverse()).is_identity());
  auto s = Permutation::transposition(3, 0, 1);
  // (p*s)(0) = p(s(0)) = p(1) = 2
  CHECK((p * s)(0) == 2);
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS(Permutation::parse("[1,1]"), Error);
  CHECK(YoungDiagram::parse("(3,2,1)").to_string() == "(3,2,1)");
  CHECK_THROWS_AS(YoungDiagram::parse("(1,2)"), Error);
}

TEST_CASE("omega_element and symmetrizer") {
  CHECK(omega_element(1).is_zero());
  CHECK(omega_element(2) == GroupAlgebraElement::basis(Permutation::transposition(2, 0, 1)));
  CHECK(omega_element(3).terms().size() == 3);
  CHECK(symmetrizer(1) == GroupAlgebraElement::basis(Permutation(1)));
  auto e2 = symmetrizer(2);
  CHECK(e2.coefficient(Permutation(2)) == Rational(1, 2));
  CHECK(e2.coefficient(Permutation::transposition(2, 0, 1)) == Rational(1, 2));
  auto e4 = symmetrizer(4);
  CHECK(e4 * e4 == e4);

  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    auto om = omega_element(n);
    auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int i = 0; i < 50; ++i) {
      auto g = GroupAlgebraElement::basis(perms[pick(rng)]);
      CHECK(om * g == g * om);
    }
    auto e = symmetrizer(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(e * GroupAlgebraElement::basis(Permutation::transposition(n, i, j)) == e);
  }
}
