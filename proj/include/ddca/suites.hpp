#pragma once

// Verification suites shared by the acceptance runner and the command line.
// Each suite returns a JSON artifact whose bytes depend only on the inputs,
// never on the worker count.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ddca/spherical.hpp"

namespace ddca {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string summary;
  std::string artifact;  // compact JSON
};

/// Random PBW element: `terms` monomials of degree <= maxdeg.
CherednikElement random_element(const ContextPtr& ctx, std::mt19937_64& rng, int maxdeg, int terms);

/// Rank over Q of the orbit coordinates after evaluating t, k at a point.
std::size_t rank_at_point(const std::vector<SphericalElement>& vs, const Rational& t, const Rational& k);

/// Sum of (j - i) over the boxes (i, j), computed box by box.
long content_by_boxes(const YoungDiagram& d);

/// Defining relations in the left-regular and polynomial representations,
/// n in 2..4, r in 1..3. The polynomial representation is probed on a mixed
/// vector and then on up to `vectors` basis vectors of degree <= 2 (all if <= 0).
SuiteResult relation_suite(int threads, int vectors = 0);

/// Random associativity triples at (4, 2) and the PBW monomial count with
/// its associated-graded check for n <= 3, r <= 2, degree <= 3.
SuiteResult pbw_suite(int threads, int triples = 100);

SuiteResult content_suite(int trials, std::uint64_t seed = 2024);

/// Independence of T_6(m), w <= 3, |m| <= 3 at r = 2, and generation of the
/// bidegree <= (2,2) part at n = 3, r = 2.
SuiteResult tbasis_suite(int threads);

/// Index pairs of the structure-constant sweep: w(m1)+w(m2) <= max_weight,
/// |m1|+|m2| <= max_size, both sides free of trivial factors.
std::vector<std::pair<TIndex, TIndex>> structure_constant_pairs(int r, int max_weight, int max_size);

/// Polynomiality (first result) and specialization at two fresh ranks (second).
std::vector<SuiteResult> structure_constant_suite(int threads, int max_weight = 3, int max_size = 4,
                                                  const std::optional<std::filesystem::path>& cache_dir = {});

/// Main relation for every admissible index set at r = 4, n in {3, 4}.
SuiteResult guay_suite(int threads);

SuiteResult k_extraction_suite(int threads);

/// Relations on F (up to `vectors` basis vectors of degree <= 2, all if <= 0,
/// some moved by a permutation) and the commuting square on V_l, l in {2, 3},
/// r = 4, degree <= 2.
SuiteResult vl_suite(int threads, int vectors = 0);

}  // namespace ddca
