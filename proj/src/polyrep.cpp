#include "ddca/polyrep.hpp"

#include <algorithm>
#include <functional>

#include "ddca/errors.hpp"

namespace ddca {

namespace {

void check_site(const AlgebraContext& ctx, int i) {
  if (i < 0 || i >= ctx.n())
    fail(ErrorCode::IndexOutOfRange, "site " + std::to_string(i + 1) + " outside 1.." + std::to_string(ctx.n()));
}

}  // namespace

PolyTensorVector PolyTensorVector::basis(ContextPtr ctx, const PolyTensorKey& key, const ParamPoly& c) {
  PolyTensorVector v(std::move(ctx));
  v.add(key, c);
  return v;
}

void PolyTensorVector::add(const PolyTensorKey& key, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyTensorVector& PolyTensorVector::operator+=(const PolyTensorVector& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PolyTensorVector& PolyTensorVector::operator-=(const PolyTensorVector& o) {
  check_same_context(*ctx_, *o.ctx_);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

PolyTensorVector& PolyTensorVector::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string PolyTensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const int n = ctx_->n();
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*";
    std::string mono;
    for (int i = 0; i < n; ++i) {
      int e = key.x[static_cast<std::size_t>(i)];
      if (!e) continue;
      mono += (mono.empty() ? "x" : "*x") + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    s += (mono.empty() ? "1" : mono) + "@e";
    for (int i = 0; i < n; ++i) s += std::to_string(key.idx[static_cast<std::size_t>(i)] + 1);
  }
  return s;
}

std::vector<std::pair<SiteArray, long>> divided_difference(const SiteArray& e, int i, int j) {
  std::vector<std::pair<SiteArray, long>> out;
  const int a = e[static_cast<std::size_t>(i)], b = e[static_cast<std::size_t>(j)];
  if (a == b) return out;
  const int lo = std::min(a, b), hi = std::max(a, b);
  const long sign = a > b ? 1 : -1;
  SiteArray g = e;
  for (int p = 0; p < hi - lo; ++p) {
    g[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(lo + p);
    g[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(lo + (hi - lo - 1 - p));
    out.emplace_back(g, sign);
  }
  return out;
}

PolyTensorVector act_x(int i, const PolyTensorVector& v) {
  check_site(*v.context(), i);
  PolyTensorVector out(v.context());
  for (const auto& [key, c] : v.terms()) {
    PolyTensorKey k = key;
    ++k.x[static_cast<std::size_t>(i)];
    out.add(k, c);
  }
  return out;
}

PolyTensorVector act_y(int i, const PolyTensorVector& v) {
  const AlgebraContext& ctx = *v.context();
  check_site(ctx, i);
  PolyTensorVector out(v.context());
  const auto si = static_cast<std::size_t>(i);
  for (const auto& [key, c] : v.terms()) {
    if (key.x[si] > 0) {
      PolyTensorKey k = key;
      --k.x[si];
      out.add(k, c * ctx.t() * ParamPoly(static_cast<long>(key.x[si])));
    }
    ParamPoly ck = c * ctx.k();
    for (int j = 0; j < ctx.n(); ++j) {
      if (j == i) continue;
      for (const auto& [g, sign] : divided_difference(key.x, i, j)) {
        PolyTensorKey k = key;
        k.x = g;
        out.add(k, ck * Rational(-sign));
      }
    }
  }
  return out;
}

PolyTensorVector act_unit(Label g, int i, const PolyTensorVector& v) {
  const AlgebraContext& ctx = *v.context();
  check_site(ctx, i);
  const int r = ctx.r();
  if (g == kIdLabel) return v;
  auto [a, b] = label_entry(r, g);
  PolyTensorVector out(v.context());
  const auto si = static_cast<std::size_t>(i);
  for (const auto& [key, c] : v.terms()) {
    if (key.idx[si] != b) continue;
    PolyTensorKey k = key;
    k.idx[si] = static_cast<std::uint8_t>(a);
    out.add(k, c);
  }
  return out;
}

PolyTensorVector act_unit(const Matrix& g, int i, const PolyTensorVector& v) {
  const AlgebraContext& ctx = *v.context();
  check_site(ctx, i);
  if (g.size() != ctx.r()) fail(ErrorCode::ParamMismatch, "matrix size differs from r");
  PolyTensorVector out(v.context());
  const auto si = static_cast<std::size_t>(i);
  for (const auto& [key, c] : v.terms()) {
    for (int a = 0; a < ctx.r(); ++a) {
      const Rational& entry = g.at(a, key.idx[si]);
      if (entry.is_zero()) continue;
      PolyTensorKey k = key;
      k.idx[si] = static_cast<std::uint8_t>(a);
      out.add(k, c * entry);
    }
  }
  return out;
}

namespace {

PolyTensorVector act_perm_array(const SiteArray& s, const PolyTensorVector& v) {
  const int n = v.context()->n();
  PolyTensorVector out(v.context());
  for (const auto& [key, c] : v.terms()) {
    PolyTensorKey k;
    k.x = perm_act(s, key.x, n);
    k.idx = perm_act(s, key.idx, n);
    out.add(k, c);
  }
  return out;
}

}  // namespace

PolyTensorVector act_perm(const Permutation& s, const PolyTensorVector& v) {
  if (s.size() != v.context()->n()) fail(ErrorCode::ParamMismatch, "permutation degree differs from n");
  return act_perm_array(to_site_array(s), v);
}

PolyTensorVector act_element(const CherednikElement& a, const PolyTensorVector& v) {
  check_same_context(*a.context(), *v.context());
  const int n = a.n();
  PolyTensorVector out(v.context());
  for (const auto& [m, c] : a.terms()) {
    PolyTensorVector w = v;
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < m.y[static_cast<std::size_t>(i)]; ++p) w = act_y(i, w);
    w = act_perm_array(m.perm, w);
    for (int i = 0; i < n; ++i)
      if (m.slot[static_cast<std::size_t>(i)] != kIdLabel) w = act_unit(m.slot[static_cast<std::size_t>(i)], i, w);
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < m.x[static_cast<std::size_t>(i)]; ++p) w = act_x(i, w);
    w *= c;
    out += w;
  }
  return out;
}

std::vector<PolyTensorKey> polyrep_basis(int n, int r, int maxdeg) {
  std::vector<SiteArray> monomials;
  SiteArray e{};
  // exponent vectors of total degree <= maxdeg
  std::function<void(int, int)> rec = [&](int site, int left) {
    if (site == n) {
      monomials.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[static_cast<std::size_t>(site)] = static_cast<std::uint8_t>(d);
      rec(site + 1, left - d);
    }
    e[static_cast<std::size_t>(site)] = 0;
  };
  rec(0, maxdeg);
  std::vector<PolyTensorKey> out;
  long tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= r;
  for (const auto& mono : monomials)
    for (long code = 0; code < tuples; ++code) {
      PolyTensorKey key;
      key.x = mono;
      long c = code;
      for (int i = 0; i < n; ++i) {
        key.idx[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % r);
        c /= r;
      }
      out.push_back(key);
    }
  return out;
}

bool oracle_equal(const CherednikElement& a, const CherednikElement& b, int maxdeg) {
  check_same_context(*a.context(), *b.context());
  for (const auto& key : polyrep_basis(a.n(), a.r(), maxdeg)) {
    auto v = PolyTensorVector::basis(a.context(), key);
    if (!(act_element(a, v) == act_element(b, v))) return false;
  }
  return true;
}

}  // namespace ddca
