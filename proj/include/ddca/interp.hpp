#pragma once

// The rank-free algebra as structure constants: products of T-basis
// elements are computed at several ranks n, each coefficient is fitted as a
// polynomial in K (standing for n) and checked at a held-out rank.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ddca/spherical.hpp"

namespace ddca {

struct FitMeta {
  std::vector<int> sample_ranks;
  int held_out_rank = 0;
  int degree_bound_K = 0;
  friend bool operator==(const FitMeta&, const FitMeta&) = default;
};

struct StructureConstantTable {
  int r = 1;
  TIndex m1, m2;
  TExpansion entries;  // coefficients in t, k, K
  FitMeta fit;
  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;
};

struct InterpOptions {
  std::optional<std::filesystem::path> cache_dir;
  int threads = 1;
};

/// First sampled rank for a product of m1 and m2.
int first_sample_rank(const TIndex& m1, const TIndex& m2);

/// expand_in_t_basis(T_n(m1) T_n(m2)) at a single rank, symbolic t, k.
TExpansion product_at_rank(const TIndex& m1, const TIndex& m2, int r, int n);

/// Computes (or loads from the cache) the table for T(m1) T(m2).
/// FitValidationFailed if the held-out rank disagrees with the fit.
StructureConstantTable structure_constants(const TIndex& m1, const TIndex& m2, int r,
                                           const InterpOptions& opts = {});

/// Every entry at K = nu.
TExpansion specialize(const StructureConstantTable& table, const Rational& nu);
TExpansion specialize(const TExpansion& element, const Rational& nu);

/// Product of two elements given in the T-basis, through tables.
TExpansion d_mul(const TExpansion& a, const TExpansion& b, int r, const InterpOptions& opts = {});

/// T(m) -> T_l(m), K -> l. The coefficients' t, k are replaced by the
/// context's parameter values.
SphericalElement project_to_finite_rank(const TExpansion& element, const ContextPtr& ctx);
SphericalElement project_to_finite_rank(const TExpansion& element, int l, int r);

std::string table_to_text(const StructureConstantTable& table, bool pretty = false);
StructureConstantTable table_from_text(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

/// On-disk store of tables, one JSON file per (r, m1, m2).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  std::filesystem::path path_for(int r, const TIndex& m1, const TIndex& m2) const;
  /// nullopt on a miss. A file that fails to parse, belongs to another key,
  /// or disagrees with a recomputation at one of its sample ranks is removed
  /// and reported as CacheCorrupt.
  std::optional<StructureConstantTable> lookup(int r, const TIndex& m1, const TIndex& m2) const;
  /// Write to a temporary file, then rename into place.
  void store(const StructureConstantTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ddca
