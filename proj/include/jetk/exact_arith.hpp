/**
 * @file exact_arith.hpp
 * @brief Exact integer/rational substrate: generalized binomials, the
 * truncated series ring Z[t]/t^n and one-variable Laurent polynomials.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jetk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised on violated preconditions (negative k, mismatched moduli, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
inline BigInt binom(const BigInt& n, std::int64_t k) {
  if (k < 0) throw ArgumentError("binom: k must be nonnegative, got " + std::to_string(k));
  if (n >= 0 && n < k) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline BigInt binom(std::int64_t n, std::int64_t k) { return binom(BigInt(n), k); }

// ---------------------------------------------------------------------------
// TruncPoly: dense element of Z[t]/t^modulus_exponent.
// ---------------------------------------------------------------------------

class TruncPoly {
 public:
  explicit TruncPoly(std::size_t modulus_exponent)
      : coeffs_(check_modulus(modulus_exponent), BigInt(0)) {}

  /// Extra coefficients beyond the modulus are dropped; missing ones are zero.
  TruncPoly(std::size_t modulus_exponent, std::vector<BigInt> coeffs)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(check_modulus(modulus_exponent), BigInt(0));
  }

  static TruncPoly one(std::size_t modulus_exponent) { return constant(modulus_exponent, 1); }

  static TruncPoly constant(std::size_t modulus_exponent, const BigInt& c) {
    TruncPoly p(modulus_exponent);
    p.coeffs_[0] = c;
    return p;
  }

  /// The generator t (zero when the modulus is 1).
  static TruncPoly t(std::size_t modulus_exponent) {
    TruncPoly p(modulus_exponent);
    if (modulus_exponent > 1) p.coeffs_[1] = 1;
    return p;
  }

  std::size_t modulus_exponent() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    check_same(a, b);
    TruncPoly r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
    check_same(a, b);
    TruncPoly r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }

  friend TruncPoly operator-(const TruncPoly& a) { return TruncPoly(a.modulus_exponent()) - a; }

  friend TruncPoly operator*(const BigInt& s, const TruncPoly& a) {
    TruncPoly r(a);
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Convolution with everything at degree >= modulus discarded.
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    check_same(a, b);
    const std::size_t n = a.modulus_exponent();
    TruncPoly r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  TruncPoly& operator+=(const TruncPoly& o) { return *this = *this + o; }
  TruncPoly& operator-=(const TruncPoly& o) { return *this = *this - o; }
  TruncPoly& operator*=(const TruncPoly& o) { return *this = *this * o; }

  TruncPoly pow(std::uint64_t e) const {
    TruncPoly result = one(modulus_exponent());
    TruncPoly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      base *= base;
      e >>= 1u;
    }
    return result;
  }

  /// Human form such as "1 - 3t + 3t^2"; the zero element prints as "0".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::size_t check_modulus(std::size_t n) {
    if (n == 0) throw ArgumentError("TruncPoly: modulus exponent must be positive");
    return n;
  }
  static void check_same(const TruncPoly& a, const TruncPoly& b) {
    if (a.modulus_exponent() != b.modulus_exponent())
      throw ArgumentError("TruncPoly: mismatched moduli t^" + std::to_string(a.modulus_exponent()) +
                          " and t^" + std::to_string(b.modulus_exponent()));
  }

  std::vector<BigInt> coeffs_;
};

inline TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b) { return a * b; }

/// Inverse of a series whose constant term is a unit of Z, by the usual
/// recursion b_n = -c0 * sum_{i=1..n} a_i b_{n-i}.
inline TruncPoly trunc_inverse(const TruncPoly& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1)
    throw NotInvertibleError("trunc_inverse: constant term " + c0.str() + " is not a unit");
  const std::size_t n = a.modulus_exponent();
  std::vector<BigInt> b(n);
  b[0] = c0;  // c0^{-1} == c0 for c0 = +-1
  for (std::size_t k = 1; k < n; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -c0 * acc;
  }
  return TruncPoly(n, std::move(b));
}

// ---------------------------------------------------------------------------
// LaurentPoly: sparse exact-rational Laurent polynomial in u.
// ---------------------------------------------------------------------------

class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { set(0, c); }  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, std::int64_t e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
  }
  static LaurentPoly u_pow(std::int64_t e) { return monomial(1, e); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  std::int64_t min_degree() const {
    if (is_zero()) throw ArgumentError("min_degree of the zero Laurent polynomial");
    return terms_.begin()->first;
  }
  std::int64_t max_degree() const {
    if (is_zero()) throw ArgumentError("max_degree of the zero Laurent polynomial");
    return terms_.rbegin()->first;
  }

  Rational coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// d/du.
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e - 1, c * e);
    return r;
  }

  /// Exact division by a monomial c*u^e (the units of the Laurent ring).
  LaurentPoly divide_by_monomial(const LaurentPoly& m) const {
    if (!m.is_monomial()) throw ArgumentError("divide_by_monomial: divisor is not a monomial");
    const auto& [me, mc] = *m.terms_.begin();
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e - me, c / mc);
    return r;
  }

  /// Substitutes u -> u^{-1}.
  LaurentPoly invert_variable() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Canonical text in the ingestion format, e.g. "3*u^-2 + 1 - 1/2*u^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (e == 0) {
        out += to_decimal(mag);
        continue;
      }
      if (mag != 1) out += to_decimal(mag) + "*";
      out += "u";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  static LaurentPoly parse(std::string_view text);

 private:
  void set(std::int64_t e, const Rational& c) {
    if (c == 0)
      terms_.erase(e);
    else
      terms_[e] = c;
  }
  void add_term(std::int64_t e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace detail {

class LaurentLexer {
 public:
  explicit LaurentLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  BigInt digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  std::int64_t signed_exponent() {
    const bool neg = accept('-');
    if (!neg) accept('+');
    const std::size_t at = pos();
    BigInt v = digits();
    if (v > 1'000'000'000) throw ParseError("exponent out of range", at);
    auto e = static_cast<std::int64_t>(v);
    return neg ? -e : e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
  detail::LaurentLexer lx(text);
  LaurentPoly result;
  if (lx.at_end()) throw ParseError("empty Laurent polynomial", 0);
  bool first = true;
  while (!lx.at_end()) {
    bool neg = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      neg = true;
    } else if (!first) {
      throw ParseError(std::string("expected '+' or '-', found '") + lx.peek() + "'", lx.pos());
    }
    first = false;

    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      BigInt num = lx.digits();
      BigInt den = 1;
      if (lx.accept('/')) {
        const std::size_t at = lx.pos();
        den = lx.digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = Rational(num, den);
      have_coeff = true;
    }
    std::int64_t exponent = 0;
    const bool star = have_coeff && lx.accept('*');
    if (lx.peek() == 'u') {
      lx.accept('u');
      exponent = 1;
      if (lx.accept('^')) exponent = lx.signed_exponent();
    } else if (star || !have_coeff) {
      throw ParseError("expected 'u'", lx.pos());
    }
    result += monomial(neg ? Rational(-coeff) : coeff, exponent);
  }
  return result;
}

}  // namespace jetk
