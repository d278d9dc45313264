#include "ddca/symcomb.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ddca/errors.hpp"

namespace ddca {

namespace {

// Parses a bracketed list of integers such as "[2,1,3]" or "(3,2,1)".
std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    fail(ErrorCode::ParseError, "expected " + std::string(1, open) + "..." + std::string(1, close) +
                                    ", got '" + std::string(text) + "'");
  std::vector<int> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
        }))
      fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------- Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::InvalidArgument, "image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) fail(ErrorCode::IndexOutOfRange, "transposition index");
  if (i == j) fail(ErrorCode::EqualIndices, "transposition needs distinct points");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v = parse_int_list(text, '[', ']');
  for (int& x : v) --x;
  return from_images(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return p;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) fail(ErrorCode::ParamMismatch, "permutations of different degree");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a(b.images_[i]);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ------------------------------------------------------------ YoungDiagram

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) fail(ErrorCode::InvalidArgument, "diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) fail(ErrorCode::InvalidArgument, "diagram rows must weakly decrease");
  }
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
  return YoungDiagram(parse_int_list(text, '(', ')'));
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

long content(const YoungDiagram& lambda) {
  long total = 0;
  const auto& rows = lambda.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Row i holds boxes (i, 0..len-1): sum of j - i.
    long len = rows[i];
    total += len * (len - 1) / 2 - len * static_cast<long>(i);
  }
  return total;
}

YoungDiagram pad(const YoungDiagram& lambda, int n) {
  int size = lambda.size();
  if (n < lambda.first_row() + size)
    fail(ErrorCode::PadTooSmall, "n=" + std::to_string(n) + " too small to pad " + lambda.to_string());
  std::vector<int> rows{n - size};
  rows.insert(rows.end(), lambda.rows().begin(), lambda.rows().end());
  if (rows.front() == 0) rows.erase(rows.begin());
  return YoungDiagram(std::move(rows));
}

Rational interpolated_omega_value(const YoungDiagram& lambda, int n) {
  int size = lambda.size();
  if (n < lambda.first_row() + size)
    fail(ErrorCode::PadTooSmall, "n=" + std::to_string(n) + " too small to pad " + lambda.to_string());
  long m = n - size;
  return Rational(content(lambda) - size + m * (m - 1) / 2);
}

// ----------------------------------------------------- GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, Rational c) {
  GroupAlgebraElement g(p.size());
  g.add(p, c);
  return g;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
  if (p.size() != n_) fail(ErrorCode::ParamMismatch, "permutation degree differs from algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n_ != b.n_) fail(ErrorCode::ParamMismatch, "group algebras of different degree");
  GroupAlgebraElement out(a.n_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) out.add(p * q, c * d);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*" + p.to_string();
  }
  return s;
}

GroupAlgebraElement omega_element(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "omega_element needs n >= 1");
  GroupAlgebraElement g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add(Permutation::transposition(n, i, j), 1);
  return g;
}

GroupAlgebraElement symmetrizer(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "symmetrizer needs n >= 1");
  GroupAlgebraElement g(n);
  Rational c = Rational(1) / factorial(n);
  for (const auto& p : all_permutations(n)) g.add(p, c);
  return g;
}

}  // namespace ddca
