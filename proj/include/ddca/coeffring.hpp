#pragma once

// Exact coefficient arithmetic: big rationals, sparse polynomials in the
// formal parameters t, k, K, and univariate interpolation in K.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddca {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p", "-p", "p/q"; the result is reduced.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  /// Reduced form with positive denominator; always true for values built
  /// through this class.
  bool is_canonical() const;

  /// "num/den", denominator omitted when it is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational factorial(int n);
Rational binomial(int n, int k);

/// Exponent triple of a monomial t^dt k^dk K^dK, packed so that integer
/// comparison is graded lexicographic order on (dt, dk, dK).
class ParamMonomial {
 public:
  constexpr ParamMonomial() = default;
  ParamMonomial(int dt, int dk, int dK);

  int dt() const { return static_cast<int>((key_ >> 16) & 0xff); }
  int dk() const { return static_cast<int>((key_ >> 8) & 0xff); }
  int dK() const { return static_cast<int>(key_ & 0xff); }
  int total() const { return static_cast<int>(key_ >> 24); }
  std::uint32_t key() const { return key_; }

  friend ParamMonomial operator*(ParamMonomial a, ParamMonomial b);
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;

 private:
  std::uint32_t key_ = 0;
};

/// Sparse polynomial in t, k, K over the rationals. Terms are kept sorted
/// by ParamMonomial order with no zero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(Rational c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly monomial(int dt, int dk, int dK, Rational c = Rational(1));
  static ParamPoly t() { return monomial(1, 0, 0); }
  static ParamPoly k() { return monomial(0, 1, 0); }
  static ParamPoly K() { return monomial(0, 0, 1); }

  /// Parses the text form produced by to_string(), e.g. "3/2*t^2*k - K + 1".
  static ParamPoly parse(std::string_view text);
  /// Highest monomial first; "0" for the zero polynomial.
  std::string to_string() const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(ParamMonomial m) const;
  int total_degree_tk() const;
  int degree_K() const;
  bool depends_on_K() const { return degree_K() > 0; }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);
  /// this += a * b without a temporary for the product.
  void add_product(const ParamPoly& a, const ParamPoly& b);
  void add_scaled(const ParamPoly& a, const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  Rational eval(const Rational& t, const Rational& k, const Rational& K) const;
  /// Substitutes K := value, leaving a polynomial in t, k.
  ParamPoly substitute_K(const Rational& value) const;
  /// Substitutes t := tv, k := kv (K untouched).
  ParamPoly substitute_tk(const Rational& tv, const Rational& kv) const;
  /// General substitution of all three variables by polynomials.
  ParamPoly compose(const ParamPoly& tv, const ParamPoly& kv, const ParamPoly& Kv) const;

  /// Debug check of the representation invariants.
  bool is_normalized() const;

 private:
  explicit ParamPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

/// Exact Lagrange interpolation in K, coefficientwise in the t,k monomials.
/// The first degree_bound+1 samples define the fit; any further samples must
/// agree with it (InconsistentSamples otherwise).
ParamPoly interpolate_in_K(const std::vector<std::pair<long, ParamPoly>>& samples,
                           int degree_bound);

}  // namespace ddca
