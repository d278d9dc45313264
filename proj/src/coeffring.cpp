#include "ddca/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ddca/errors.hpp"

namespace ddca {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

bool Rational::is_canonical() const {
  if (value_.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, 1);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b, 1);
}

// ----------------------------------------------------------- ParamMonomial

ParamMonomial::ParamMonomial(int dt, int dk, int dK) {
  if (dt < 0 || dk < 0 || dK < 0 || dt > 255 || dk > 255 || dK > 255 || dt + dk + dK > 255)
    fail(ErrorCode::InvalidArgument, "parameter exponent out of range");
  key_ = (static_cast<std::uint32_t>(dt + dk + dK) << 24) | (static_cast<std::uint32_t>(dt) << 16) |
         (static_cast<std::uint32_t>(dk) << 8) | static_cast<std::uint32_t>(dK);
}

ParamMonomial operator*(ParamMonomial a, ParamMonomial b) {
  if (a.total() + b.total() > 255) fail(ErrorCode::InvalidArgument, "parameter exponent overflow");
  ParamMonomial r;
  r.key_ = a.key_ + b.key_;
  return r;
}

// --------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace_back(ParamMonomial(), std::move(c));
}

ParamPoly ParamPoly::monomial(int dt, int dk, int dK, Rational c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(ParamMonomial(dt, dk, dK), std::move(c));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.total() == 0) return terms_[0].second;
  return Rational(0);
}

Rational ParamPoly::coefficient(ParamMonomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, ParamMonomial v) { return t.first < v; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int ParamPoly::total_degree_tk() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dt() + m.dk());
  return d;
}

int ParamPoly::degree_K() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dK());
  return d;
}

namespace {

template <typename Combine>
std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& a,
                                         const std::vector<ParamPoly::Term>& b, Combine combine) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, combine(Rational(0), j->second));
      ++j;
    } else {
      Rational c = combine(i->second, j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  if (b.terms_.size() == 1 && b.terms_[0].first.total() == 0) return a * b.terms_[0].second;
  if (a.terms_.size() == 1 && a.terms_[0].first.total() == 0) return b * a.terms_[0].second;
  std::vector<ParamPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  std::sort(prod.begin(), prod.end(),
            [](const ParamPoly::Term& x, const ParamPoly::Term& y) { return x.first < y.first; });
  std::vector<ParamPoly::Term> out;
  out.reserve(prod.size());
  for (auto& term : prod) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return ParamPoly(std::move(out));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& term : terms_) term.second *= c;
  }
  return *this;
}

void ParamPoly::add_product(const ParamPoly& a, const ParamPoly& b) { *this += a * b; }

void ParamPoly::add_scaled(const ParamPoly& a, const Rational& c) {
  if (c.is_zero() || a.is_zero()) return;
  if (c.is_one()) {
    *this += a;
    return;
  }
  *this += a * c;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

namespace {

Rational power(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

ParamPoly power(const ParamPoly& base, int e) {
  ParamPoly r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational ParamPoly::eval(const Rational& t, const Rational& k, const Rational& K) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) sum += c * power(t, m.dt()) * power(k, m.dk()) * power(K, m.dK());
  return sum;
}

ParamPoly ParamPoly::substitute_K(const Rational& value) const {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [m, c] : terms_) {
    Rational v = c * power(value, m.dK());
    acc[ParamMonomial(m.dt(), m.dk(), 0).key()] += v;
  }
  ParamPoly r;
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    r += ParamPoly::monomial(static_cast<int>((key >> 16) & 0xff), static_cast<int>((key >> 8) & 0xff), 0, c);
  }
  return r;
}

ParamPoly ParamPoly::substitute_tk(const Rational& tv, const Rational& kv) const {
  ParamPoly r;
  for (const auto& [m, c] : terms_)
    r += ParamPoly::monomial(0, 0, m.dK(), c * power(tv, m.dt()) * power(kv, m.dk()));
  return r;
}

ParamPoly ParamPoly::compose(const ParamPoly& tv, const ParamPoly& kv, const ParamPoly& Kv) const {
  ParamPoly r;
  for (const auto& [m, c] : terms_)
    r += power(tv, m.dt()) * power(kv, m.dk()) * power(Kv, m.dK()) * c;
  return r;
}

bool ParamPoly::is_normalized() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].second.is_zero() || !terms_[i].second.is_canonical()) return false;
    if (i > 0 && !(terms_[i - 1].first < terms_[i].first)) return false;
  }
  return true;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (!mag.is_one() || m.total() == 0) factors.push_back(mag.to_string());
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    var("t", m.dt());
    var("k", m.dk());
    var("K", m.dK());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

ParamPoly ParamPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  auto bad = [&]() { fail(ErrorCode::ParseError, "malformed polynomial: '" + std::string(text) + "'"); };
  ParamPoly result;
  std::size_t pos = 0;
  auto read_uint = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) bad();
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad();
    }
    Rational coeff(sign);
    int e[3] = {0, 0, 0};
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) bad();
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = read_uint();
        std::string den = "1";
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          den = read_uint();
        }
        if (mpz_class(den) == 0) bad();
        coeff *= Rational(mpz_class(num), mpz_class(den));
      } else if (c == 't' || c == 'k' || c == 'K') {
        ++pos;
        int exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          exponent = std::stoi(read_uint());
        }
        e[c == 't' ? 0 : (c == 'k' ? 1 : 2)] += exponent;
      } else {
        bad();
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    result += ParamPoly::monomial(e[0], e[1], e[2], coeff);
  }
  return result;
}

// ----------------------------------------------------------- interpolation

ParamPoly interpolate_in_K(const std::vector<std::pair<long, ParamPoly>>& samples, int degree_bound) {
  if (degree_bound < 0) fail(ErrorCode::InvalidArgument, "negative degree bound");
  const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < need)
    fail(ErrorCode::InvalidArgument, "interpolate_in_K needs at least degreeBound+1 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second.depends_on_K())
      fail(ErrorCode::InvalidArgument, "sample values must not involve K");
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].first == samples[j].first)
        fail(ErrorCode::InvalidArgument, "interpolation nodes must be distinct");
  }

  // Lagrange basis polynomials in K, as dense coefficient vectors.
  std::vector<std::vector<Rational>> basis(need);
  for (std::size_t j = 0; j < need; ++j) {
    std::vector<Rational> poly{Rational(1)};
    Rational denom(1);
    for (std::size_t m = 0; m < need; ++m) {
      if (m == j) continue;
      Rational node(samples[m].first);
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= poly[d] * node;
      }
      poly = std::move(next);
      denom *= Rational(samples[j].first) - node;
    }
    for (auto& c : poly) c /= denom;
    basis[j] = std::move(poly);
  }

  ParamPoly fit;
  for (std::size_t j = 0; j < need; ++j) {
    for (std::size_t d = 0; d < basis[j].size(); ++d) {
      if (basis[j][d].is_zero()) continue;
      fit += samples[j].second * ParamPoly::monomial(0, 0, static_cast<int>(d), basis[j][d]);
    }
  }
  for (std::size_t i = need; i < samples.size(); ++i) {
    if (fit.substitute_K(Rational(samples[i].first)) != samples[i].second)
      fail(ErrorCode::InconsistentSamples,
           "sample at K=" + std::to_string(samples[i].first) + " disagrees with degree-" +
               std::to_string(degree_bound) + " fit");
  }
  return fit;
}

}  // namespace ddca
