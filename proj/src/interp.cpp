#include "ddca/interp.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ddca/errors.hpp"
#include "ddca/parallel.hpp"
#include "json.hpp"

namespace ddca {

namespace {

constexpr int kFormatVersion = 1;
using nlohmann::json;

json tindex_json(const TIndex& m, int r) { return json::parse(m.to_string(r)); }
TIndex tindex_from_json(const json& j, int r) { return TIndex::parse(j.dump(), r); }

void check_no_trivial(const TIndex& m) {
  if (m.has_trivial_factor())
    fail(ErrorCode::IndexConstraintViolated, "T-indices may not contain the factor (0,0,id)");
}

}  // namespace

int first_sample_rank(const TIndex& m1, const TIndex& m2) {
  const int w = m1.weight() + m2.weight();
  const int d = m1.size() + m2.size();
  // every commutation inside a product can bring in one extra site
  return std::max(2 * w + 2, d + (w + 1) / 2 + 1);
}

TExpansion product_at_rank(const TIndex& m1, const TIndex& m2, int r, int n) {
  auto ctx = AlgebraContext::get(n, r);
  return expand_in_t_basis(t_basis_elem(ctx, m1) * t_basis_elem(ctx, m2));
}

namespace {

StructureConstantTable compute_table(const TIndex& m1, const TIndex& m2, int r, int threads) {
  StructureConstantTable table;
  table.r = r;
  table.m1 = m1;
  table.m2 = m2;
  const int d = m1.size() + m2.size();
  const int n0 = first_sample_rank(m1, m2);
  table.fit.degree_bound_K = d;
  for (int i = 0; i <= d; ++i) table.fit.sample_ranks.push_back(n0 + i);
  table.fit.held_out_rank = n0 + d + 1;

  std::vector<int> ranks = table.fit.sample_ranks;
  ranks.push_back(table.fit.held_out_rank);
  std::vector<TExpansion> data(ranks.size());
  parallel_for(ranks.size(), threads, [&](std::size_t i) { data[i] = product_at_rank(m1, m2, r, ranks[i]); });

  std::set<TIndex> keys;
  for (const auto& ex : data)
    for (const auto& [m, c] : ex) keys.insert(m);
  for (const auto& m : keys) {
    std::vector<std::pair<long, ParamPoly>> samples;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      auto it = data[i].find(m);
      samples.emplace_back(ranks[i], it == data[i].end() ? ParamPoly() : it->second);
    }
    try {
      ParamPoly fit = interpolate_in_K(samples, d);
      if (!fit.is_zero()) table.entries.emplace(m, std::move(fit));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InconsistentSamples) throw;
      fail(ErrorCode::FitValidationFailed, "coefficient of T" + m.to_string(r) + " in T" + m1.to_string(r) + " * T" +
                                               m2.to_string(r) + " is not a polynomial of degree <= " +
                                               std::to_string(d) + " in K");
    }
  }
  return table;
}

}  // namespace

StructureConstantTable structure_constants(const TIndex& m1, const TIndex& m2, int r, const InterpOptions& opts) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "r must be positive");
  check_no_trivial(m1);
  check_no_trivial(m2);
  if (m1.empty() || m2.empty()) {
    StructureConstantTable table;
    table.r = r;
    table.m1 = m1;
    table.m2 = m2;
    table.entries.emplace(m1 + m2, ParamPoly(1));
    return table;
  }
  std::optional<TableCache> cache;
  if (opts.cache_dir) {
    cache.emplace(*opts.cache_dir);
    try {
      if (auto hit = cache->lookup(r, m1, m2)) return *hit;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CacheCorrupt) throw;
      // evicted by lookup; fall through and recompute
    }
  }
  StructureConstantTable table = compute_table(m1, m2, r, opts.threads);
  if (cache) cache->store(table);
  return table;
}

TExpansion specialize(const TExpansion& element, const Rational& nu) {
  TExpansion out;
  for (const auto& [m, c] : element) {
    ParamPoly v = c.substitute_K(nu);
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  return out;
}

TExpansion specialize(const StructureConstantTable& table, const Rational& nu) { return specialize(table.entries, nu); }

TExpansion d_mul(const TExpansion& a, const TExpansion& b, int r, const InterpOptions& opts) {
  TExpansion out;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) {
      ParamPoly c = c1 * c2;
      if (c.is_zero()) continue;
      for (const auto& [m, s] : structure_constants(m1, m2, r, opts).entries) out[m].add_product(c, s);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SphericalElement project_to_finite_rank(const TExpansion& element, const ContextPtr& ctx) {
  SphericalElement out(ctx);
  const ParamPoly l(ctx->n());
  for (const auto& [m, c] : element) {
    check_no_trivial(m);
    ParamPoly v = c.compose(ctx->t(), ctx->k(), l);
    if (!v.is_zero()) out += t_basis_elem(ctx, m) * v;
  }
  return out;
}

SphericalElement project_to_finite_rank(const TExpansion& element, int l, int r) {
  if (l < 1) fail(ErrorCode::InvalidArgument, "rank must be positive");
  return project_to_finite_rank(element, AlgebraContext::get(l, r));
}

// ------------------------------------------------------------ serialization

std::string table_to_text(const StructureConstantTable& table, bool pretty) {
  json j;
  j["format"] = "ddca-structure-constants";
  j["version"] = kFormatVersion;
  j["r"] = table.r;
  j["m1"] = tindex_json(table.m1, table.r);
  j["m2"] = tindex_json(table.m2, table.r);
  json entries = json::array();
  for (const auto& [m, c] : table.entries) entries.push_back(json::array({tindex_json(m, table.r), c.to_string()}));
  j["entries"] = entries;
  j["fitMeta"] = {{"sampleRanks", table.fit.sample_ranks},
              {"heldOutRank", table.fit.held_out_rank},
              {"degreeBoundK", table.fit.degree_bound_K}};
  return j.dump(pretty ? 2 : -1) + "\n";
}

StructureConstantTable table_from_text(const std::string& text) {
  StructureConstantTable table;
  try {
    json j = json::parse(text);
    if (j.at("format") != "ddca-structure-constants" || j.at("version") != kFormatVersion)
      fail(ErrorCode::ParseError, "unknown table format");
    table.r = j.at("r").get<int>();
    if (table.r < 1) fail(ErrorCode::ParseError, "bad r");
    table.m1 = tindex_from_json(j.at("m1"), table.r);
    table.m2 = tindex_from_json(j.at("m2"), table.r);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "entries are [index, coefficient] pairs");
      TIndex m = tindex_from_json(e[0], table.r);
      if (!table.entries.emplace(m, ParamPoly::parse(e[1].get<std::string>())).second)
        fail(ErrorCode::ParseError, "duplicate entry");
    }
    const auto& fit = j.at("fitMeta");
    table.fit.sample_ranks = fit.at("sampleRanks").get<std::vector<int>>();
    table.fit.held_out_rank = fit.at("heldOutRank").get<int>();
    table.fit.degree_bound_K = fit.at("degreeBoundK").get<int>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad table: ") + e.what());
  }
  return table;
}

// ------------------------------------------------------------------- cache

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (!std::filesystem::is_directory(dir_)) fail(ErrorCode::InvalidArgument, "cannot use cache directory " + dir_.string());
}

std::filesystem::path TableCache::path_for(int r, const TIndex& m1, const TIndex& m2) const {
  std::string key = "v" + std::to_string(kFormatVersion) + "|r=" + std::to_string(r) + "|" + m1.to_string(r) + "|" +
                    m2.to_string(r);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / (std::string(buf) + ".json");
}

std::optional<StructureConstantTable> TableCache::lookup(int r, const TIndex& m1, const TIndex& m2) const {
  const auto path = path_for(r, m1, m2);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  auto corrupt = [&](const std::string& why) -> StructureConstantTable {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    fail(ErrorCode::CacheCorrupt, path.string() + ": " + why);
  };
  StructureConstantTable table;
  try {
    table = table_from_text(ss.str());
  } catch (const Error& e) {
    corrupt(e.what());
  }
  if (table.r != r || !(table.m1 == m1) || !(table.m2 == m2)) corrupt("entry belongs to another key");
  if (table.fit.sample_ranks.empty()) corrupt("no sample ranks");
  const auto& ranks = table.fit.sample_ranks;
  const int n = ranks[fnv1a(ss.str()) % ranks.size()];
  if (specialize(table, n) != product_at_rank(m1, m2, r, n))
    corrupt("disagrees with a recomputation at rank " + std::to_string(n));
  return table;
}

void TableCache::store(const StructureConstantTable& table) const {
  const auto path = path_for(table.r, table.m1, table.m2);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << table_to_text(table);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ddca
