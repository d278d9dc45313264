#include "ddca/spherical.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "ddca/errors.hpp"
#include "json.hpp"

namespace ddca {

namespace {

using Triple = std::array<std::uint8_t, 3>;

std::vector<Triple> active_triples(const CherednikMonomial& m, int n) {
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (m.x[s] || m.y[s] || m.slot[s] != kIdLabel) out.push_back({m.x[s], m.slot[s], m.y[s]});
  }
  return out;
}

void place(CherednikMonomial& m, int site, const Triple& t) {
  const auto s = static_cast<std::size_t>(site);
  m.x[s] = t[0];
  m.slot[s] = t[1];
  m.y[s] = t[2];
}

Rational multiplicity_factorials(std::vector<Triple> triples) {
  std::sort(triples.begin(), triples.end());
  Rational out(1);
  std::size_t i = 0;
  while (i < triples.size()) {
    std::size_t j = i;
    while (j < triples.size() && triples[j] == triples[i]) ++j;
    out *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

// (v, h, monomial) order used for leading terms
struct LeadKey {
  int v, h;
  const CherednikMonomial* m;
  bool operator<(const LeadKey& o) const {
    if (v != o.v) return v < o.v;
    if (h != o.h) return h < o.h;
    return *m < *o.m;
  }
};

}  // namespace

CherednikMonomial canonical_orbit_rep(const CherednikMonomial& m, int n) {
  auto triples = active_triples(m, n);
  std::sort(triples.begin(), triples.end(), std::greater<>());
  CherednikMonomial out;
  for (std::size_t i = 0; i < triples.size(); ++i) place(out, static_cast<int>(i), triples[i]);
  return out;
}

int active_sites(const CherednikMonomial& m, int n) { return static_cast<int>(active_triples(m, n).size()); }

int total_degree(const CherednikMonomial& m, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += m.x[static_cast<std::size_t>(i)] + m.y[static_cast<std::size_t>(i)];
  return d;
}

Rational stabilizer_size(const CherednikMonomial& m, int n) {
  auto triples = active_triples(m, n);
  return factorial(n - static_cast<int>(triples.size())) * multiplicity_factorials(triples);
}

Rational orbit_size(const CherednikMonomial& m, int n) { return factorial(n) / stabilizer_size(m, n); }

std::vector<CherednikMonomial> orbit(const CherednikMonomial& m, int n) {
  std::vector<Triple> all;
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    all.push_back({m.x[s], m.slot[s], m.y[s]});
  }
  std::sort(all.begin(), all.end());
  std::vector<CherednikMonomial> out;
  do {
    CherednikMonomial mm;
    for (int i = 0; i < n; ++i) place(mm, i, all[static_cast<std::size_t>(i)]);
    out.push_back(mm);
  } while (std::next_permutation(all.begin(), all.end()));
  return out;
}

// ----------------------------------------------------------- element basics

SphericalElement SphericalElement::unit(ContextPtr ctx) {
  SphericalElement e(std::move(ctx));
  e.add(CherednikMonomial{}, 1);
  return e;
}

SphericalElement SphericalElement::from_he(ContextPtr ctx, const HeMap& he) {
  const int n = ctx->n();
  std::map<CherednikMonomial, ParamPoly> acc;
  for (const auto& [m, c] : he) {
    if (c.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(canonical_orbit_rep(m, n), c);
    if (!inserted) it->second += c;
  }
  SphericalElement out(std::move(ctx));
  for (auto& [rep, c] : acc) {
    if (c.is_zero()) continue;
    out.add(rep, c * (Rational(1) / orbit_size(rep, n)));
  }
  return out;
}

ParamPoly SphericalElement::coefficient(const CherednikMonomial& rep) const {
  auto it = coords_.find(rep);
  return it == coords_.end() ? ParamPoly() : it->second;
}

void SphericalElement::add(const CherednikMonomial& rep, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(rep, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

SphericalElement& SphericalElement::operator+=(const SphericalElement& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [m, c] : o.coords_) add(m, c);
  return *this;
}

SphericalElement& SphericalElement::operator-=(const SphericalElement& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [m, c] : o.coords_) add(m, -c);
  return *this;
}

SphericalElement& SphericalElement::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [m, v] : coords_) v *= c;
  return *this;
}

bool operator==(const SphericalElement& a, const SphericalElement& b) {
  check_same_context(*a.ctx_, *b.ctx_);
  return a.coords_ == b.coords_;
}

HeMap SphericalElement::he_form() const {
  HeMap out;
  for (const auto& [rep, c] : coords_)
    for (const auto& m : orbit(rep, n())) out.emplace(m, c);
  return out;
}

CherednikElement SphericalElement::inner() const {
  const int n = this->n();
  CherednikElement out(ctx_);
  auto perms = all_permutations(n);
  const Rational inv = Rational(1) / factorial(n);
  for (const auto& [rep, c] : coords_) {
    ParamPoly cw = c * inv;
    for (const auto& m : orbit(rep, n)) {
      for (const auto& w : perms) {
        CherednikMonomial mm = m;
        SiteArray wa = to_site_array(w);
        mm.perm = wa;
        mm.y = perm_act(perm_inverse(wa, n), m.y, n);
        out.add_term(mm, cw);
      }
    }
  }
  return out;
}

int SphericalElement::v_degree() const {
  int v = 0;
  for (const auto& [m, c] : coords_) v = std::max(v, total_degree(m, n()));
  return v;
}

std::pair<int, int> SphericalElement::bidegree() const {
  if (coords_.empty()) fail(ErrorCode::ZeroElement, "bidegree of the zero element");
  int h = 0, v = 0;
  for (const auto& [m, c] : coords_) {
    h = std::max(h, active_sites(m, n()));
    v = std::max(v, total_degree(m, n()));
  }
  return {h, v};
}

SphericalElement SphericalElement::map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& f) const {
  SphericalElement out(ctx_);
  for (const auto& [m, c] : coords_) out.add(m, f(c));
  return out;
}

std::string SphericalElement::to_string() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : coords_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*O[" + monomial_to_string(m, n(), r()) + "]";
  }
  return s;
}

// ------------------------------------------------------------ multiplication

namespace {

void add_to(HeMap& out, const CherednikMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// R m e for R = x^a S y^b and m = x^c T y^d (both with trivial perm):
//   y^b x^c = sum p x^e tau_u y^f  gives  sum p x^{a+e} (S T sigma_u) y^{u.(f+d)} e.
void product_into(const AlgebraContext& ctx, const CherednikMonomial& R, const CherednikMonomial& m,
                  const ParamPoly& scale, HeMap& out) {
  const int n = ctx.n(), r = ctx.r();
  SiteArray st;
  if (!config_mul(n, r, R.slot, m.slot, st)) return;
  auto expansion = ctx.yx(R.y, m.x);
  std::map<SiteArray, long> local;
  for (const auto& term : *expansion) {
    CherednikMonomial base;
    SiteArray fd{};
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      base.x[s] = static_cast<std::uint8_t>(R.x[s] + term.key.e[s]);
      fd[s] = static_cast<std::uint8_t>(term.key.f[s] + m.y[s]);
    }
    base.y = perm_act(term.key.u, fd, n);
    local.clear();
    for (const auto& sig : *ctx.sigma(term.key.u)) {
      SiteArray full;
      if (!config_mul(n, r, st, sig, full)) continue;
      expand_rr(n, r, full, [&](const SiteArray& cfg, int sign) { local[cfg] += sign; });
    }
    ParamPoly coeff = scale * term.coeff;
    for (const auto& [cfg, cnt] : local) {
      if (cnt == 0) continue;
      base.slot = cfg;
      add_to(out, base, coeff * Rational(cnt));
    }
  }
}

struct Group {
  Triple triple;
  int count;
};

// Enumerates the orbit of Q up to relabelling of the sites outside R's
// active block 0..hR-1, with the number of orbit elements each class holds.
void enumerate_placements(const std::vector<Group>& groups, int hR, int n,
                          const std::function<void(const CherednikMonomial&, const Rational&)>& visit) {
  std::vector<unsigned> masks(groups.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t gi, unsigned used) {
    if (gi == groups.size()) {
      CherednikMonomial m;
      int off = hR;
      Rational denom(1);
      for (std::size_t q = 0; q < groups.size(); ++q) {
        int on = 0;
        for (int s = 0; s < hR; ++s)
          if (masks[q] & (1u << s)) {
            place(m, s, groups[q].triple);
            ++on;
          }
        int offs = groups[q].count - on;
        for (int z = 0; z < offs; ++z) place(m, off++, groups[q].triple);
        denom *= factorial(offs);
      }
      const int j = off - hR;
      if (off > n) return;
      // ordered choice of j free sites, unordered within each group
      Rational weight = factorial(n - hR) / factorial(n - hR - j) / denom;
      visit(m, weight);
      return;
    }
    const unsigned full = (1u << hR) - 1u;
    for (unsigned mask = 0; mask <= full; ++mask) {
      if (mask & used) continue;
      if (__builtin_popcount(mask) > groups[gi].count) continue;
      masks[gi] = mask;
      rec(gi + 1, used | mask);
    }
  };
  rec(0, 0);
}

std::vector<Group> groups_of(const CherednikMonomial& rep, int n) {
  std::vector<Group> groups;
  for (const auto& t : active_triples(rep, n)) {
    if (!groups.empty() && groups.back().triple == t)
      ++groups.back().count;
    else
      groups.push_back({t, 1});
  }
  return groups;
}

}  // namespace

SphericalElement operator*(const SphericalElement& a, const SphericalElement& b) {
  check_same_context(*a.ctx_, *b.ctx_);
  const AlgebraContext& ctx = *a.ctx_;
  const int n = ctx.n();
  std::vector<std::pair<std::vector<Group>, const ParamPoly*>> bgroups;
  for (const auto& [Q, dQ] : b.coords_) bgroups.emplace_back(groups_of(Q, n), &dQ);

  std::map<CherednikMonomial, ParamPoly> acc;
  for (const auto& [R, cR] : a.coords_) {
    const int hR = active_sites(R, n);
    const Rational stabR = stabilizer_size(R, n);
    HeMap ry;
    for (const auto& [groups, dQ] : bgroups) {
      enumerate_placements(groups, hR, n, [&](const CherednikMonomial& m, const Rational& w) {
        product_into(ctx, R, m, *dQ * w, ry);
      });
    }
    // sum over the orbit of R: each He monomial m' spreads over its orbit
    for (const auto& [m, y] : ry) {
      CherednikMonomial rep = canonical_orbit_rep(m, n);
      ParamPoly v = cR * y * (stabilizer_size(m, n) / stabR);
      auto [it, inserted] = acc.try_emplace(rep, v);
      if (!inserted) it->second += v;
    }
  }
  SphericalElement out(a.ctx_);
  for (auto& [rep, c] : acc)
    if (!c.is_zero()) out.coords_.emplace(rep, std::move(c));
  return out;
}

SphericalElement spherical_mul(const SphericalElement& a, const SphericalElement& b) { return a * b; }

SphericalElement spherical_commutator(const SphericalElement& a, const SphericalElement& b) {
  return a * b - b * a;
}

SphericalElement sandwich(const CherednikElement& a) {
  const int n = a.n();
  HeMap he;
  for (const auto& [m, c] : a.terms()) {
    CherednikMonomial mm = m;
    mm.y = perm_act(m.perm, m.y, n);
    mm.perm = identity_perm();
    add_to(he, mm, c);
  }
  return SphericalElement::from_he(a.context(), he);
}

HeMap he_from_tau(const AlgebraContext& ctx, const SiteArray& slots, const TauMap& tau) {
  const int n = ctx.n(), r = ctx.r();
  HeMap out;
  for (const auto& [key, c] : tau) {
    CherednikMonomial base;
    base.x = key.e;
    base.y = perm_act(key.u, key.f, n);
    std::map<SiteArray, long> local;
    for (const auto& sig : *ctx.sigma(key.u)) {
      SiteArray full;
      if (!config_mul(n, r, slots, sig, full)) continue;
      expand_rr(n, r, full, [&](const SiteArray& cfg, int sign) { local[cfg] += sign; });
    }
    for (const auto& [cfg, cnt] : local) {
      if (cnt == 0) continue;
      base.slot = cfg;
      add_to(out, base, c * Rational(cnt));
    }
  }
  return out;
}

// ------------------------------------------------------------- generators

namespace {

std::mutex cache_mutex;
std::map<std::tuple<const AlgebraContext*, int, int, Label>, SphericalElement> tgen_cache;
std::map<std::pair<const AlgebraContext*, TIndex>, SphericalElement> tbasis_cache;

// sum over all words with p letters x_0 and q letters y_0
TauMap shuffle_sum(const AlgebraContext& ctx, int p, int q) {
  if (p == 0 && q == 0) {
    TauMap one;
    one.emplace(TauKey{}, ParamPoly(1));
    return one;
  }
  TauMap out;
  if (p > 0) {
    TauMap x;
    TauKey k;
    k.e[0] = 1;
    x.emplace(k, ParamPoly(1));
    for (const auto& [key, c] : ctx.tau_mul(x, shuffle_sum(ctx, p - 1, q))) {
      auto [it, inserted] = out.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  if (q > 0) {
    TauMap y;
    TauKey k;
    k.f[0] = 1;
    y.emplace(k, ParamPoly(1));
    for (const auto& [key, c] : ctx.tau_mul(y, shuffle_sum(ctx, p, q - 1))) {
      auto [it, inserted] = out.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

SphericalElement t_gen(const ContextPtr& ctx, int p, int q, Label l) {
  if (p < 0 || q < 0) fail(ErrorCode::InvalidArgument, "t_gen needs p, q >= 0");
  if (!is_canonical_label(ctx->r(), l)) fail(ErrorCode::InvalidArgument, "t_gen needs a basis label");
  auto key = std::make_tuple(ctx.get(), p, q, l);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = tgen_cache.find(key);
    if (it != tgen_cache.end()) return it->second;
  }
  TauMap words = shuffle_sum(*ctx, p, q);
  Rational norm = factorial(p) * factorial(q) / factorial(p + q);
  SiteArray slots{};
  slots[0] = l;
  HeMap he = he_from_tau(*ctx, slots, words);
  SphericalElement out = SphericalElement::from_he(ctx, he);
  out *= ParamPoly(norm * Rational(ctx->n()));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return tgen_cache.emplace(key, out).first->second;
}

SphericalElement t_gen(const ContextPtr& ctx, int p, int q, const Matrix& g) {
  if (g.size() != ctx->r()) fail(ErrorCode::ParamMismatch, "matrix size differs from r");
  SphericalElement out(ctx);
  for (const auto& [l, c] : g.to_labels()) out += t_gen(ctx, p, q, l) * ParamPoly(c);
  return out;
}

// ------------------------------------------------------------------ TIndex

TIndex::TIndex(std::initializer_list<std::pair<TFactor, int>> entries) {
  for (const auto& [f, c] : entries) add(f, c);
}

void TIndex::add(const TFactor& f, int count) {
  if (count <= 0) return;
  mult_[f] += count;
}

int TIndex::size() const {
  int s = 0;
  for (const auto& [f, c] : mult_) s += c;
  return s;
}

int TIndex::weight() const {
  int w = 0;
  for (const auto& [f, c] : mult_) w += (f.p + f.q) * c;
  return w;
}

bool TIndex::has_trivial_factor() const { return mult_.count(TFactor{0, 0, kIdLabel}) > 0; }

std::vector<TFactor> TIndex::factors() const {
  std::vector<TFactor> out;
  for (const auto& [f, c] : mult_)
    for (int i = 0; i < c; ++i) out.push_back(f);
  return out;
}

TIndex operator+(const TIndex& a, const TIndex& b) {
  TIndex out = a;
  for (const auto& [f, c] : b.mult_) out.add(f, c);
  return out;
}

std::string TIndex::to_string(int r) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [f, c] : mult_) {
    j.push_back(nlohmann::json::array({f.p, f.q, label_to_string(r, f.label), c}));
  }
  return j.dump();
}

TIndex TIndex::parse(const std::string& text, int r) {
  TIndex out;
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) fail(ErrorCode::ParseError, "TIndex must be a list");
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 4) fail(ErrorCode::ParseError, "TIndex entries are [p, q, label, mult]");
      TFactor f;
      f.p = e[0].get<int>();
      f.q = e[1].get<int>();
      if (f.p < 0 || f.q < 0) fail(ErrorCode::ParseError, "negative degree in TIndex");
      f.label = parse_label(r, e[2].is_string() ? e[2].get<std::string>() : e[2].dump());
      int mult = e[3].get<int>();
      if (mult <= 0) fail(ErrorCode::ParseError, "multiplicities must be positive");
      out.add(f, mult);
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("bad TIndex: ") + ex.what());
  }
  return out;
}

bool operator<(const TIndex& a, const TIndex& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.mult_ < b.mult_;
}

SphericalElement t_basis_elem(const ContextPtr& ctx, const TIndex& m) {
  auto key = std::make_pair(ctx.get(), m);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = tbasis_cache.find(key);
    if (it != tbasis_cache.end()) return it->second;
  }
  std::vector<TFactor> fs = m.factors();
  SphericalElement out(ctx);
  if (fs.empty()) {
    out = SphericalElement::unit(ctx);
  } else {
    long orderings = 0;
    do {
      SphericalElement prod = t_gen(ctx, fs[0].p, fs[0].q, fs[0].label);
      for (std::size_t i = 1; i < fs.size(); ++i) prod = prod * t_gen(ctx, fs[i].p, fs[i].q, fs[i].label);
      out += prod;
      ++orderings;
    } while (std::next_permutation(fs.begin(), fs.end()));
    out *= ParamPoly(Rational(1, orderings));
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return tbasis_cache.emplace(key, out).first->second;
}

TExpansion expand_in_t_basis(const SphericalElement& z) {
  const ContextPtr& ctx = z.context();
  const int n = ctx->n();
  const int v = z.v_degree();
  const int bound = (v + 1) / 2;
  TExpansion out;
  SphericalElement rem = z;
  while (!rem.is_zero()) {
    const CherednikMonomial* lead = nullptr;
    LeadKey best{-1, -1, nullptr};
    for (const auto& [m, c] : rem.coords()) {
      LeadKey k{total_degree(m, n), active_sites(m, n), &m};
      if (!lead || best < k) {
        best = k;
        lead = &m;
      }
    }
    const CherednikMonomial R = *lead;
    TIndex idx;
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      if (R.x[s] || R.y[s] || R.slot[s] != kIdLabel) idx.add(TFactor{R.x[s], R.y[s], R.slot[s]});
    }
    SphericalElement t = t_basis_elem(ctx, idx);
    ParamPoly tl = t.coefficient(R);
    if (!tl.is_constant() || tl.is_zero())
      fail(ErrorCode::NotInSpan, "orbit " + monomial_to_string(R, n, ctx->r()) + " is not the leading term of T_n" +
                                     idx.to_string(ctx->r()));
    for (const auto& [m, c] : t.coords()) {
      LeadKey k{total_degree(m, n), active_sites(m, n), &m};
      if (LeadKey{best.v, best.h, &R} < k)
        fail(ErrorCode::NotInSpan, "T_n" + idx.to_string(ctx->r()) + " has a term above its expected leading orbit");
    }
    ParamPoly c = rem.coefficient(R) * (Rational(1) / tl.constant_term());
    rem -= t * c;
    out[idx] += c;
    if (out[idx].is_zero()) out.erase(idx);
  }
  for (const auto& [idx, c] : out)
    if (c.total_degree_tk() > bound)
      fail(ErrorCode::DegreeBoundExceeded, "coefficient of T" + idx.to_string(ctx->r()) + " has (t,k)-degree " +
                                               std::to_string(c.total_degree_tk()) + " > " + std::to_string(bound));
  return out;
}

SphericalElement from_t_expansion(const ContextPtr& ctx, const TExpansion& ex) {
  SphericalElement out(ctx);
  for (const auto& [idx, c] : ex) out += t_basis_elem(ctx, idx) * c;
  return out;
}

std::string t_expansion_to_string(const TExpansion& ex, int r) {
  if (ex.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : ex) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*T" + idx.to_string(r);
  }
  return s;
}

}  // namespace ddca
