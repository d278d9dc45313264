#include "ddca/serialize.hpp"

#include "ddca/errors.hpp"

namespace ddca {

namespace {

json site_list(const SiteArray& a, int n) {
  json out = json::array();
  for (int i = 0; i < n; ++i) out.push_back(a[static_cast<std::size_t>(i)]);
  return out;
}

SiteArray read_sites(const json& j, int n, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail(ErrorCode::ParseError, std::string(field) + " must be a list of length " + std::to_string(n));
  SiteArray a{};
  for (int i = 0; i < n; ++i) {
    int v = j[static_cast<std::size_t>(i)].get<int>();
    if (v < 0 || v > 255) fail(ErrorCode::ParseError, std::string(field) + " entry out of range");
    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return a;
}

json term_json(const CherednikMonomial& m, const ParamPoly& c, int n, int r) {
  json slots = json::array();
  for (int i = 0; i < n; ++i) {
    Label l = m.slot[static_cast<std::size_t>(i)];
    if (l == kIdLabel) continue;
    auto [a, b] = label_entry(r, l);
    slots.push_back(json::array({i + 1, a + 1, b + 1}));
  }
  json perm = json::array();
  for (int i = 0; i < n; ++i) perm.push_back(m.perm[static_cast<std::size_t>(i)] + 1);
  return json{{"xExp", site_list(m.x, n)}, {"slots", slots},       {"perm", perm},
              {"yExp", site_list(m.y, n)}, {"coeff", c.to_string()}};
}

// Reads one term; `extended` is set when a slot holds E_rr.
CherednikMonomial read_term(const json& t, int n, int r, bool& extended) {
  CherednikMonomial m;
  m.x = read_sites(t.at("xExp"), n, "xExp");
  m.y = read_sites(t.at("yExp"), n, "yExp");
  SiteArray p = read_sites(t.at("perm"), n, "perm");
  std::vector<int> images;
  for (int i = 0; i < n; ++i) images.push_back(p[static_cast<std::size_t>(i)] - 1);
  m.perm = to_site_array(Permutation::from_images(images));
  for (const auto& s : t.at("slots")) {
    int site = s.at(0).get<int>(), a = s.at(1).get<int>(), b = s.at(2).get<int>();
    if (site < 1 || site > n || a < 1 || a > r || b < 1 || b > r)
      fail(ErrorCode::ParseError, "slot entry out of range");
    if (m.slot[static_cast<std::size_t>(site - 1)] != kIdLabel) fail(ErrorCode::ParseError, "two slots at one site");
    m.slot[static_cast<std::size_t>(site - 1)] = unit_label(r, a - 1, b - 1);
    if (a == r && b == r) extended = true;
  }
  return m;
}

ContextPtr read_context(const json& j) {
  int n = j.at("n").get<int>(), r = j.at("r").get<int>();
  ParamPoly t = j.contains("t") ? ParamPoly::parse(j.at("t").get<std::string>()) : ParamPoly::t();
  ParamPoly k = j.contains("k") ? ParamPoly::parse(j.at("k").get<std::string>()) : ParamPoly::k();
  return AlgebraContext::get(n, r, t, k);
}

void check_format(const json& j, const char* format) {
  if (j.value("format", std::string()) != format)
    fail(ErrorCode::ParseError, std::string("expected format \"") + format + "\"");
  if (j.value("version", 0) != kSerialVersion) fail(ErrorCode::ParseError, "unsupported version");
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& ex) {
    fail(ErrorCode::ParseError, ex.what());
  }
}

json header(const char* format, const AlgebraContext& ctx) {
  return json{{"format", format},        {"version", kSerialVersion},   {"n", ctx.n()},
              {"r", ctx.r()},            {"t", ctx.t().to_string()},    {"k", ctx.k().to_string()}};
}

}  // namespace

json to_json(const CherednikElement& a) {
  json j = header("ddca-element", *a.context());
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) terms.push_back(term_json(m, c, a.n(), a.r()));
  j["terms"] = terms;
  return j;
}

CherednikElement element_from_json(const json& j) {
  return guarded([&] {
    check_format(j, "ddca-element");
    auto ctx = read_context(j);
    const int n = ctx->n(), r = ctx->r();
    CherednikElement out(ctx);
    for (const auto& t : j.at("terms")) {
      bool extended = false;
      CherednikMonomial m = read_term(t, n, r, extended);
      ParamPoly c = ParamPoly::parse(t.at("coeff").get<std::string>());
      if (!extended) {
        out.add_term(m, c);
        continue;
      }
      // rebuild through the generators so that E_rr is expanded
      CherednikMonomial xs, rest;
      xs.x = m.x;
      rest.perm = m.perm;
      rest.y = m.y;
      CherednikElement term = CherednikElement::monomial(ctx, xs, c);
      for (int i = 0; i < n; ++i)
        if (m.slot[static_cast<std::size_t>(i)] != kIdLabel)
          term = term * CherednikElement::unit(ctx, m.slot[static_cast<std::size_t>(i)], i);
      out += term * CherednikElement::monomial(ctx, rest);
    }
    return out;
  });
}

json to_json(const SphericalElement& b) {
  json j = header("ddca-spherical", *b.context());
  json terms = json::array();
  for (const auto& [m, c] : b.coords()) terms.push_back(term_json(m, c, b.n(), b.r()));
  j["terms"] = terms;
  return j;
}

SphericalElement spherical_from_json(const json& j) {
  return guarded([&] {
    check_format(j, "ddca-spherical");
    auto ctx = read_context(j);
    SphericalElement out(ctx);
    for (const auto& t : j.at("terms")) {
      bool extended = false;
      CherednikMonomial m = read_term(t, ctx->n(), ctx->r(), extended);
      if (extended) fail(ErrorCode::ParseError, "orbit representatives use canonical labels");
      if (m.perm != identity_perm() || canonical_orbit_rep(m, ctx->n()) != m)
        fail(ErrorCode::ParseError, "term is not an orbit representative");
      out.add(m, ParamPoly::parse(t.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const PolyTensorVector& v) {
  const int n = v.context()->n();
  json j = header("ddca-polyrep-vector", *v.context());
  json terms = json::array();
  for (const auto& [key, c] : v.terms()) {
    json idx = json::array();
    for (int i = 0; i < n; ++i) idx.push_back(key.idx[static_cast<std::size_t>(i)] + 1);
    terms.push_back(json{{"xExp", site_list(key.x, n)}, {"indexTuple", idx}, {"coeff", c.to_string()}});
  }
  j["terms"] = terms;
  return j;
}

json to_json(const VlModel& model, const VlVector& v) {
  const int l = model.l();
  json j{{"format", "ddca-vl-vector"}, {"version", kSerialVersion}, {"l", l}, {"r", model.r()},
         {"maxDegree", model.max_degree()}};
  json terms = json::array();
  for (const auto& [key, c] : v.terms()) {
    json idx = json::array();
    for (int i = 0; i < l; ++i) idx.push_back(key.idx[static_cast<std::size_t>(i)] + 1);
    terms.push_back(json{{"xExp", site_list(key.x, l)},
                         {"yExp", site_list(key.y, l)},
                         {"indexTuple", idx},
                         {"coeff", c.to_string()}});
  }
  j["terms"] = terms;
  return j;
}

VlVector vl_vector_from_json(const json& j, int l) {
  return guarded([&] {
    check_format(j, "ddca-vl-vector");
    if (j.at("l").get<int>() != l) fail(ErrorCode::ParamMismatch, "vector belongs to another l");
    const int r = j.at("r").get<int>();
    VlVector v;
    for (const auto& t : j.at("terms")) {
      VlKey key;
      key.x = read_sites(t.at("xExp"), l, "xExp");
      key.y = read_sites(t.at("yExp"), l, "yExp");
      SiteArray idx = read_sites(t.at("indexTuple"), l, "indexTuple");
      for (int i = 0; i < l; ++i) {
        auto& e = idx[static_cast<std::size_t>(i)];
        if (e < 1 || e > r) fail(ErrorCode::ParseError, "index out of range");
        key.idx[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e - 1);
      }
      v.add(key, ParamPoly::parse(t.at("coeff").get<std::string>()));
    }
    return v;
  });
}

json to_json(const TExpansion& ex, int r) {
  json out = json::array();
  for (const auto& [m, c] : ex) out.push_back(json::array({json::parse(m.to_string(r)), c.to_string()}));
  return out;
}

TExpansion t_expansion_from_json(const json& j, int r) {
  return guarded([&] {
    TExpansion ex;
    for (const auto& e : j) {
      TIndex m = TIndex::parse(e.at(0).dump(), r);
      ParamPoly c = ParamPoly::parse(e.at(1).get<std::string>());
      if (!c.is_zero()) ex[m] += c;
    }
    return ex;
  });
}

json to_json(const VerificationReport& rep) {
  json j{{"identity", rep.name}, {"params", rep.params}, {"pass", rep.pass}};
  if (!rep.pass) j["difference"] = to_json(rep.difference);
  return j;
}

json to_json(const SquareCheck& c) {
  json j{{"identity", "commuting square: " + c.generator},
         {"status", c.status},
         {"pass", c.ok()},
         {"vectors", c.vectors},
         {"failures", c.failures}};
  if (c.failures > 0) j["firstFailure"] = c.first_failure;
  return j;
}

json to_json(const RelationFamilyResult& res) {
  json j{{"identity", res.family}, {"pass", res.pass()}, {"checks", res.checks}, {"failures", res.failures}};
  if (!res.pass()) j["firstFailure"] = res.first_failure;
  return j;
}

std::string dump(const json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace ddca
