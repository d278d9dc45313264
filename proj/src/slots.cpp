#include "ddca/slots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "ddca/errors.hpp"

namespace ddca {

bool label_mul(int r, Label a, Label b, Label& out) {
  if (a == kIdLabel) {
    out = b;
    return true;
  }
  if (b == kIdLabel) {
    out = a;
    return true;
  }
  auto [i, j] = label_entry(r, a);
  auto [k, l] = label_entry(r, b);
  if (j != k) return false;
  out = unit_label(r, i, l);
  return true;
}

std::string label_to_string(int r, Label l) {
  if (l == kIdLabel) return "id";
  auto [a, b] = label_entry(r, l);
  return "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
}

Label parse_label(int r, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "id" || s == "\"id\"") return kIdLabel;
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "[%d,%d]%c", &a, &b, &tail) != 2)
    fail(ErrorCode::ParseError, "bad slot label '" + text + "'");
  if (a < 1 || b < 1 || a > r || b > r) fail(ErrorCode::IndexOutOfRange, "slot label out of range: " + text);
  if (a == r && b == r) fail(ErrorCode::InvalidArgument, "E_rr is not a basis label; use id and E_aa");
  return unit_label(r, a - 1, b - 1);
}

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(int r) {
  Matrix m(r);
  for (int a = 0; a < r; ++a) m.at(a, a) = 1;
  return m;
}

Matrix Matrix::unit(int r, int a, int b) {
  if (a < 0 || b < 0 || a >= r || b >= r) fail(ErrorCode::IndexOutOfRange, "matrix unit index");
  Matrix m(r);
  m.at(a, b) = 1;
  return m;
}

Matrix Matrix::from_label(int r, Label l) {
  if (l == kIdLabel) return identity(r);
  auto [a, b] = label_entry(r, l);
  return unit(r, a, b);
}

Rational Matrix::trace() const {
  Rational s;
  for (int a = 0; a < r_; ++a) s += at(a, a);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::vector<std::pair<Label, Rational>> Matrix::to_labels() const {
  std::vector<std::pair<Label, Rational>> out;
  const Rational& last = at(r_ - 1, r_ - 1);
  if (!last.is_zero()) out.emplace_back(kIdLabel, last);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b) {
      if (a == r_ - 1 && b == r_ - 1) continue;
      Rational c = at(a, b);
      if (a == b) c -= last;
      if (!c.is_zero()) out.emplace_back(unit_label(r_, a, b), c);
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_) fail(ErrorCode::ParamMismatch, "matrix sizes differ");
  Matrix m(a.r_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.r_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.r_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (int a = 0; a < r_; ++a) {
    s += a ? ",[" : "[";
    for (int b = 0; b < r_; ++b) {
      if (b) s += ",";
      s += "\"" + at(a, b).to_string() + "\"";
    }
    s += "]";
  }
  return s + "]";
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ----------------------------------------------------------- configurations

void expand_rr(int n, int r, const SiteArray& config,
               const std::function<void(const SiteArray&, int)>& emit) {
  const Label rr = static_cast<Label>(r * r);
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (config[static_cast<std::size_t>(i)] == rr) {
      first = i;
      break;
    }
  if (first < 0) {
    emit(config, 1);
    return;
  }
  SiteArray next = config;
  next[static_cast<std::size_t>(first)] = kIdLabel;
  expand_rr(n, r, next, emit);
  for (int a = 0; a + 1 < r; ++a) {
    next[static_cast<std::size_t>(first)] = unit_label(r, a, a);
    expand_rr(n, r, next, [&](const SiteArray& c, int s) { emit(c, -s); });
  }
}

bool config_mul(int n, int r, const SiteArray& a, const SiteArray& b, SiteArray& out) {
  out = SiteArray{};
  for (int i = 0; i < n; ++i) {
    auto s = static_cast<std::size_t>(i);
    if (!label_mul(r, a[s], b[s], out[s])) return false;
  }
  return true;
}

std::vector<SiteArray> sigma_configs(int n, int r, const SiteArray& perm) {
  std::vector<int> moved;
  for (int j = 0; j < n; ++j)
    if (perm[static_cast<std::size_t>(j)] != j) moved.push_back(j);
  std::vector<SiteArray> out;
  if (moved.empty()) {
    out.push_back(SiteArray{});
    return out;
  }
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  const std::size_t m = moved.size();
  std::vector<int> digits(m, 0);
  while (true) {
    for (std::size_t q = 0; q < m; ++q) delta[static_cast<std::size_t>(moved[q])] = digits[q];
    SiteArray cfg{};
    for (int j : moved) {
      int row = delta[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      int col = delta[static_cast<std::size_t>(j)];
      cfg[static_cast<std::size_t>(j)] = unit_label(r, row, col);
    }
    out.push_back(cfg);
    std::size_t q = 0;
    while (q < m && ++digits[q] == r) digits[q++] = 0;
    if (q == m) break;
  }
  return out;
}

}  // namespace ddca
