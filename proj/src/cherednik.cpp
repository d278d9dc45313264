#include "ddca/cherednik.hpp"

#include <algorithm>
#include <tuple>

#include "ddca/errors.hpp"

namespace ddca {

// ------------------------------------------------------------- permutations

SiteArray identity_perm() {
  SiteArray p{};
  for (int i = 0; i < kMaxSites; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

SiteArray perm_compose(const SiteArray& a, const SiteArray& b, int n) {
  SiteArray out = identity_perm();
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a[b[static_cast<std::size_t>(i)]];
  return out;
}

SiteArray perm_inverse(const SiteArray& a, int n) {
  SiteArray out = identity_perm();
  for (int i = 0; i < n; ++i) out[a[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

SiteArray perm_act(const SiteArray& v, const SiteArray& e, int n) {
  SiteArray out{};
  for (int i = 0; i < n; ++i) out[v[static_cast<std::size_t>(i)]] = e[static_cast<std::size_t>(i)];
  return out;
}

SiteArray transposition_array(int i, int j) {
  SiteArray p = identity_perm();
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  return p;
}

SiteArray to_site_array(const Permutation& p) {
  if (p.size() > kMaxSites) fail(ErrorCode::InvalidArgument, "too many sites");
  SiteArray a = identity_perm();
  for (int i = 0; i < p.size(); ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p(i));
  return a;
}

Permutation to_permutation(const SiteArray& a, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
  return Permutation::from_images(std::move(images));
}

// ---------------------------------------------------------------- context

AlgebraContext::AlgebraContext(int n, int r, ParamPoly t, ParamPoly k)
    : n_(n), r_(r), t_(std::move(t)), k_(std::move(k)) {}

std::shared_ptr<const AlgebraContext> AlgebraContext::get(int n, int r) {
  return get(n, r, ParamPoly::t(), ParamPoly::k());
}

std::shared_ptr<const AlgebraContext> AlgebraContext::get(int n, int r, const ParamPoly& t,
                                                          const ParamPoly& k) {
  if (n < 1 || n > kMaxSites) fail(ErrorCode::InvalidArgument, "n must lie in 1.." + std::to_string(kMaxSites));
  if (r < 1 || r > 15) fail(ErrorCode::InvalidArgument, "r must lie in 1..15");
  static std::mutex registry_mutex;
  static std::map<std::tuple<int, int, std::string, std::string>, std::shared_ptr<const AlgebraContext>> registry;
  auto key = std::make_tuple(n, r, t.to_string(), k.to_string());
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto ctx = std::make_shared<const AlgebraContext>(n, r, t, k);
  registry.emplace(key, ctx);
  return ctx;
}

void check_same_context(const AlgebraContext& a, const AlgebraContext& b) {
  if (&a == &b) return;
  if (a.n() != b.n() || a.r() != b.r() || a.t() != b.t() || a.k() != b.k())
    fail(ErrorCode::ParamMismatch, "operands live in different algebras (n=" + std::to_string(a.n()) +
                                       ",r=" + std::to_string(a.r()) + " vs n=" + std::to_string(b.n()) +
                                       ",r=" + std::to_string(b.r()) + ")");
}

std::shared_ptr<const TauExpansion> AlgebraContext::yx(const SiteArray& b, const SiteArray& c) const {
  auto key = std::make_pair(b, c);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = yx_cache_.find(key);
    if (it != yx_cache_.end()) return it->second;
  }
  auto value = std::make_shared<const TauExpansion>(compute_yx(b, c));
  std::lock_guard<std::mutex> lock(mutex_);
  return yx_cache_.emplace(key, value).first->second;
}

TauExpansion AlgebraContext::compute_yx(const SiteArray& b, const SiteArray& c) const {
  int i = -1;
  for (int s = 0; s < n_; ++s)
    if (b[static_cast<std::size_t>(s)] > 0) {
      i = s;
      break;
    }
  if (i < 0) {
    TauKey key;
    key.e = c;
    return {TauTerm{key, ParamPoly(1)}};
  }
  SiteArray rest = b;
  --rest[static_cast<std::size_t>(i)];
  auto prev = yx(rest, c);

  // Left multiplication of each x^e tau_w y^f by y_i.
  TauMap acc;
  auto add = [&acc](const TauKey& key, const ParamPoly& v) {
    auto [it, inserted] = acc.try_emplace(key, v);
    if (!inserted) it->second += v;
  };
  const auto si = static_cast<std::size_t>(i);
  for (const auto& term : *prev) {
    const TauKey& k0 = term.key;
    TauKey moved = k0;
    ++moved.f[perm_inverse(k0.u, n_)[si]];
    add(moved, term.coeff);
    if (k0.e[si] > 0) {
      TauKey lowered = k0;
      --lowered.e[si];
      add(lowered, term.coeff * t_ * ParamPoly(static_cast<long>(k0.e[si])));
    }
    ParamPoly ck = term.coeff * k_;
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      const auto sj = static_cast<std::size_t>(j);
      int a = k0.e[si], bb = k0.e[sj];
      if (a == bb) continue;
      // divided difference (x^e - s_ij x^e)/(x_i - x_j)
      int lo = std::min(a, bb), hi = std::max(a, bb);
      ParamPoly coeff = a > bb ? -ck : ck;
      TauKey dd = k0;
      dd.u = perm_compose(transposition_array(i, j), k0.u, n_);
      for (int p = 0; p < hi - lo; ++p) {
        dd.e[si] = static_cast<std::uint8_t>(lo + p);
        dd.e[sj] = static_cast<std::uint8_t>(lo + (hi - lo - 1 - p));
        add(dd, coeff);
      }
    }
  }
  TauExpansion out;
  out.reserve(acc.size());
  for (auto& [key, v] : acc)
    if (!v.is_zero()) out.push_back(TauTerm{key, std::move(v)});
  return out;
}

std::shared_ptr<const std::vector<SiteArray>> AlgebraContext::sigma(const SiteArray& u) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sigma_cache_.find(u);
    if (it != sigma_cache_.end()) return it->second;
  }
  auto value = std::make_shared<const std::vector<SiteArray>>(sigma_configs(n_, r_, u));
  std::lock_guard<std::mutex> lock(mutex_);
  return sigma_cache_.emplace(u, value).first->second;
}

TauMap AlgebraContext::tau_mul(const TauMap& a, const TauMap& b) const {
  TauMap acc;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      ParamPoly cab = ca * cb;
      auto p = yx(ka.f, kb.e);
      for (const auto& term : *p) {
        TauKey key;
        SiteArray moved = perm_act(ka.u, term.key.e, n_);
        for (int i = 0; i < n_; ++i) key.e[static_cast<std::size_t>(i)] = ka.e[static_cast<std::size_t>(i)] + moved[static_cast<std::size_t>(i)];
        key.u = perm_compose(perm_compose(ka.u, term.key.u, n_), kb.u, n_);
        SiteArray f = perm_act(perm_inverse(kb.u, n_), term.key.f, n_);
        for (int i = 0; i < n_; ++i) key.f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] + kb.f[static_cast<std::size_t>(i)];
        ParamPoly v = cab * term.coeff;
        auto [it, inserted] = acc.try_emplace(key, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  return acc;
}

// ---------------------------------------------------------------- monomials

std::string monomial_to_string(const CherednikMonomial& m, int n, int r) {
  std::vector<std::string> parts;
  auto power = [](const std::string& base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  for (int i = 0; i < n; ++i)
    if (m.x[static_cast<std::size_t>(i)]) parts.push_back(power("x" + std::to_string(i + 1), m.x[static_cast<std::size_t>(i)]));
  for (int i = 0; i < n; ++i)
    if (m.slot[static_cast<std::size_t>(i)] != kIdLabel)
      parts.push_back("E" + label_to_string(r, m.slot[static_cast<std::size_t>(i)]) + "_" + std::to_string(i + 1));
  bool trivial = true;
  for (int i = 0; i < n; ++i)
    if (m.perm[static_cast<std::size_t>(i)] != i) trivial = false;
  if (!trivial) parts.push_back("s" + to_permutation(m.perm, n).to_string());
  for (int i = 0; i < n; ++i)
    if (m.y[static_cast<std::size_t>(i)]) parts.push_back(power("y" + std::to_string(i + 1), m.y[static_cast<std::size_t>(i)]));
  if (parts.empty()) return "1";
  std::string s;
  for (std::size_t q = 0; q < parts.size(); ++q) s += (q ? "*" : "") + parts[q];
  return s;
}

// ------------------------------------------------------------------ element

namespace {

void check_site(const AlgebraContext& ctx, int i) {
  if (i < 0 || i >= ctx.n())
    fail(ErrorCode::IndexOutOfRange, "site " + std::to_string(i + 1) + " outside 1.." + std::to_string(ctx.n()));
}

}  // namespace

void CherednikElement::add_term(const CherednikMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CherednikElement CherednikElement::scalar(ContextPtr ctx, const ParamPoly& c) {
  CherednikElement e(std::move(ctx));
  e.add_term(CherednikMonomial{}, c);
  return e;
}

CherednikElement CherednikElement::x(ContextPtr ctx, int i) {
  check_site(*ctx, i);
  CherednikMonomial m;
  m.x[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(ctx), m);
}

CherednikElement CherednikElement::y(ContextPtr ctx, int i) {
  check_site(*ctx, i);
  CherednikMonomial m;
  m.y[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(ctx), m);
}

CherednikElement CherednikElement::unit(ContextPtr ctx, Label l, int i) {
  check_site(*ctx, i);
  const int r = ctx->r();
  if (l > r * r) fail(ErrorCode::IndexOutOfRange, "slot label out of range");
  CherednikElement e(ctx);
  CherednikMonomial m;
  m.slot[static_cast<std::size_t>(i)] = l;
  expand_rr(ctx->n(), r, m.slot, [&](const SiteArray& cfg, int sign) {
    CherednikMonomial mm;
    mm.slot = cfg;
    e.add_term(mm, ParamPoly(sign));
  });
  return e;
}

CherednikElement CherednikElement::unit(ContextPtr ctx, const Matrix& g, int i) {
  check_site(*ctx, i);
  if (g.size() != ctx->r()) fail(ErrorCode::ParamMismatch, "matrix size differs from r");
  CherednikElement e(ctx);
  for (const auto& [l, c] : g.to_labels()) {
    CherednikMonomial m;
    m.slot[static_cast<std::size_t>(i)] = l;
    e.add_term(m, c);
  }
  return e;
}

CherednikElement CherednikElement::perm(ContextPtr ctx, const Permutation& s) {
  if (s.size() != ctx->n()) fail(ErrorCode::ParamMismatch, "permutation degree differs from n");
  CherednikMonomial m;
  m.perm = to_site_array(s);
  return monomial(std::move(ctx), m);
}

CherednikElement CherednikElement::transposition(ContextPtr ctx, int i, int j) {
  check_site(*ctx, i);
  check_site(*ctx, j);
  if (i == j) fail(ErrorCode::EqualIndices, "transposition needs i != j");
  CherednikMonomial m;
  m.perm = transposition_array(i, j);
  return monomial(std::move(ctx), m);
}

CherednikElement CherednikElement::sigma(ContextPtr ctx, int i, int j) {
  check_site(*ctx, i);
  check_site(*ctx, j);
  if (i == j) fail(ErrorCode::EqualIndices, "sigma_ij needs i != j");
  CherednikElement e(ctx);
  for (const auto& cfg : *ctx->sigma(transposition_array(i, j)))
    expand_rr(ctx->n(), ctx->r(), cfg, [&](const SiteArray& c, int sign) {
      CherednikMonomial m;
      m.slot = c;
      e.add_term(m, ParamPoly(sign));
    });
  return e;
}

CherednikElement CherednikElement::monomial(ContextPtr ctx, const CherednikMonomial& m, const ParamPoly& c) {
  CherednikElement e(std::move(ctx));
  e.add_term(m, c);
  return e;
}

CherednikElement& CherednikElement::operator+=(const CherednikElement& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CherednikElement& CherednikElement::operator-=(const CherednikElement& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CherednikElement& CherednikElement::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

CherednikElement CherednikElement::operator-() const {
  CherednikElement e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

bool operator==(const CherednikElement& a, const CherednikElement& b) {
  check_same_context(*a.ctx_, *b.ctx_);
  return a.terms_ == b.terms_;
}

CherednikElement operator*(const CherednikElement& a, const CherednikElement& b) {
  check_same_context(*a.ctx_, *b.ctx_);
  const AlgebraContext& ctx = *a.ctx_;
  const int n = ctx.n(), r = ctx.r();
  CherednikElement out(a.ctx_);
  std::map<CherednikMonomial, long> local;
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      ParamPoly c12 = c1 * c2;
      auto expansion = ctx.yx(m1.y, m2.x);
      const SiteArray s2inv = perm_inverse(m2.perm, n);
      for (const auto& term : *expansion) {
        // x^a S1 s1 (x^e u sigma_u y^f) S2 s2 y^d
        //   = x^{a + s1.e} [S1 conj_{s1 u}(sigma_u S2)] (s1 u s2) y^{s2^-1 . f + d}
        CherednikMonomial base;
        SiteArray moved = perm_act(m1.perm, term.key.e, n);
        SiteArray fy = perm_act(s2inv, term.key.f, n);
        for (int i = 0; i < n; ++i) {
          const auto s = static_cast<std::size_t>(i);
          base.x[s] = static_cast<std::uint8_t>(m1.x[s] + moved[s]);
          base.y[s] = static_cast<std::uint8_t>(fy[s] + m2.y[s]);
        }
        const SiteArray v = perm_compose(m1.perm, term.key.u, n);
        base.perm = perm_compose(v, m2.perm, n);
        local.clear();
        for (const auto& sig : *ctx.sigma(term.key.u)) {
          SiteArray prod, conj{}, full;
          if (!config_mul(n, r, sig, m2.slot, prod)) continue;
          for (int j = 0; j < n; ++j) conj[v[static_cast<std::size_t>(j)]] = prod[static_cast<std::size_t>(j)];
          if (!config_mul(n, r, m1.slot, conj, full)) continue;
          expand_rr(n, r, full, [&](const SiteArray& cfg, int sign) {
            base.slot = cfg;
            local[base] += sign;
          });
        }
        ParamPoly scale = c12 * term.coeff;
        for (const auto& [m, cnt] : local)
          if (cnt != 0) out.add_term(m, scale * Rational(cnt));
      }
    }
  }
  return out;
}

CherednikElement mul(const CherednikElement& a, const CherednikElement& b) { return a * b; }

CherednikElement commutator(const CherednikElement& a, const CherednikElement& b) { return a * b - b * a; }

std::pair<int, int> CherednikElement::bidegree() const {
  if (terms_.empty()) fail(ErrorCode::ZeroElement, "bidegree of the zero element");
  int h = 0, v = 0;
  const int n = ctx_->n();
  for (const auto& [m, c] : terms_) {
    int active = 0, deg = 0;
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      deg += m.x[s] + m.y[s];
      if (m.x[s] || m.y[s] || m.slot[s] != kIdLabel) ++active;
    }
    h = std::max(h, active);
    v = std::max(v, deg);
  }
  return {h, v};
}

int CherednikElement::v_degree() const {
  int v = 0;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (int i = 0; i < ctx_->n(); ++i) deg += m.x[static_cast<std::size_t>(i)] + m.y[static_cast<std::size_t>(i)];
    v = std::max(v, deg);
  }
  return v;
}

CherednikElement CherednikElement::map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& f) const {
  CherednikElement e(ctx_);
  for (const auto& [m, c] : terms_) e.add_term(m, f(c));
  return e;
}

std::string CherednikElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + monomial_to_string(m, ctx_->n(), ctx_->r());
  }
  return s;
}

}  // namespace ddca
