/**
 * @file kring.hpp
 * @brief The Grothendieck ring K(P^N) = Z[t]/t^{N+1}, t = 1 - [O(-1)].
 *
 * Classes are stored in the basis {1, t, ..., t^N}. Split bundles are kept as
 * LineBundleSum (twist -> multiplicity) so that splitting-level operations
 * (Sym, Wedge, dual, degree/rank) stay available before passing to K.
 */
#pragma once

#include "jetk/exact_arith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetk {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A vector space dimension or multiset count that went negative where it must not.
struct EffectivenessError : std::domain_error {
  using std::domain_error::domain_error;
};

inline void require_ambient(std::int64_t n) {
  if (n < 1) throw ArgumentError("ambient dimension must be >= 1, got " + std::to_string(n));
}

class KClass {
 public:
  KClass(std::int64_t ambient_dim, TruncPoly value)
      : ambient_dim_(ambient_dim), value_(std::move(value)) {
    require_ambient(ambient_dim_);
    if (value_.modulus_exponent() != static_cast<std::size_t>(ambient_dim_ + 1))
      throw ArgumentError("KClass: value must live in Z[t]/t^(N+1)");
  }

  static KClass zero(std::int64_t n) {
    require_ambient(n);
    return {n, TruncPoly(static_cast<std::size_t>(n + 1))};
  }
  static KClass one(std::int64_t n) {
    require_ambient(n);
    return {n, TruncPoly::one(static_cast<std::size_t>(n + 1))};
  }
  static KClass from_coeffs(std::int64_t n, std::vector<BigInt> c) {
    require_ambient(n);
    return {n, TruncPoly(static_cast<std::size_t>(n + 1), std::move(c))};
  }

  std::int64_t ambient_dim() const noexcept { return ambient_dim_; }
  const TruncPoly& value() const noexcept { return value_; }
  /// Coefficient of t^0, the virtual rank.
  const BigInt& rank() const { return value_[0]; }

  friend bool operator==(const KClass&, const KClass&) = default;

  friend KClass operator+(const KClass& a, const KClass& b) {
    check(a, b);
    return {a.ambient_dim_, a.value_ + b.value_};
  }
  friend KClass operator-(const KClass& a, const KClass& b) {
    check(a, b);
    return {a.ambient_dim_, a.value_ - b.value_};
  }
  friend KClass operator*(const KClass& a, const KClass& b) {
    check(a, b);
    return {a.ambient_dim_, a.value_ * b.value_};
  }
  friend KClass operator*(const BigInt& s, const KClass& a) { return {a.ambient_dim_, s * a.value_}; }
  KClass& operator+=(const KClass& o) { return *this = *this + o; }
  KClass& operator-=(const KClass& o) { return *this = *this - o; }
  KClass& operator*=(const KClass& o) { return *this = *this * o; }

  std::string to_string() const { return value_.to_string(); }

 private:
  static void check(const KClass& a, const KClass& b) {
    if (a.ambient_dim_ != b.ambient_dim_)
      throw ArgumentError("KClass: mixing P^" + std::to_string(a.ambient_dim_) + " and P^" +
                          std::to_string(b.ambient_dim_));
  }

  std::int64_t ambient_dim_;
  TruncPoly value_;
};

/// Formal integer combination of twists O(d); negative multiplicities make it virtual.
class LineBundleSum {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  explicit LineBundleSum(std::int64_t ambient_dim) : ambient_dim_(ambient_dim) {
    require_ambient(ambient_dim_);
  }

  LineBundleSum(std::int64_t ambient_dim, std::initializer_list<std::pair<std::int64_t, BigInt>> terms)
      : LineBundleSum(ambient_dim) {
    for (const auto& [d, m] : terms) add(d, m);
  }

  static LineBundleSum twist(std::int64_t n, std::int64_t d, const BigInt& mult = 1) {
    LineBundleSum s(n);
    s.add(d, mult);
    return s;
  }

  /// One summand per listed degree, e.g. {l-2, l}.
  static LineBundleSum from_degrees(std::int64_t n, const std::vector<std::int64_t>& degrees) {
    LineBundleSum s(n);
    for (auto d : degrees) s.add(d, 1);
    return s;
  }

  std::int64_t ambient_dim() const noexcept { return ambient_dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  BigInt multiplicity(std::int64_t d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(std::int64_t d, const BigInt& mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(d, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt rank() const {
    BigInt r = 0;
    for (const auto& [d, m] : terms_) r += m;
    return r;
  }

  BigInt degree() const {
    BigInt r = 0;
    for (const auto& [d, m] : terms_) r += m * d;
    return r;
  }

  bool is_effective() const {
    for (const auto& [d, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  /// Degrees listed with multiplicity, descending. Requires an effective sum.
  std::vector<std::int64_t> degrees_descending() const {
    if (!is_effective()) throw EffectivenessError("degrees of a virtual sum are undefined");
    std::vector<std::int64_t> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      for (BigInt k = 0; k < it->second; ++k) out.push_back(it->first);
    return out;
  }

  friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;

  friend LineBundleSum operator+(const LineBundleSum& a, const LineBundleSum& b) {
    check(a, b);
    LineBundleSum r(a);
    for (const auto& [d, m] : b.terms_) r.add(d, m);
    return r;
  }

  friend LineBundleSum operator-(const LineBundleSum& a, const LineBundleSum& b) {
    check(a, b);
    LineBundleSum r(a);
    for (const auto& [d, m] : b.terms_) r.add(d, -m);
    return r;
  }

  /// O(a) (x) O(b) = O(a+b), extended bilinearly.
  friend LineBundleSum operator*(const LineBundleSum& a, const LineBundleSum& b) {
    check(a, b);
    LineBundleSum r(a.ambient_dim_);
    for (const auto& [da, ma] : a.terms_)
      for (const auto& [db, mb] : b.terms_) r.add(da + db, ma * mb);
    return r;
  }

  LineBundleSum dual() const {
    LineBundleSum r(ambient_dim_);
    for (const auto& [d, m] : terms_) r.add(-d, m);
    return r;
  }

  /// "O(1)^2 + O(3)"; the empty sum prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, m] : terms_) {
      if (!out.empty()) out += " + ";
      out += "O(" + std::to_string(d) + ")";
      if (m != 1) out += "^" + m.str();
    }
    return out;
  }

 private:
  static void check(const LineBundleSum& a, const LineBundleSum& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw ArgumentError("LineBundleSum: mismatched ambient dimensions");
  }

  std::int64_t ambient_dim_;
  Terms terms_;
};

/// phi([O(d)]): sum_i binom(d+i-1, i) t^i for d > 0, sum_i (-1)^i binom(|d|, i) t^i for d <= 0,
/// both summed up to i = N.
inline KClass class_of_twist(std::int64_t n, std::int64_t d) {
  require_ambient(n);
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 0; i <= n; ++i) {
    if (d > 0)
      c[i] = binom(d + i - 1, i);
    else
      c[i] = (i % 2 ? -1 : 1) * binom(-d, i);
  }
  return KClass::from_coeffs(n, std::move(c));
}

inline KClass sum_to_class(const LineBundleSum& s) {
  KClass acc = KClass::zero(s.ambient_dim());
  for (const auto& [d, m] : s.terms()) acc += m * class_of_twist(s.ambient_dim(), d);
  return acc;
}

/// (degree, rank) on P^1; these are the coordinates of the class in the basis {t, 1}.
inline std::pair<BigInt, BigInt> deg_rk(const LineBundleSum& s) {
  if (s.ambient_dim() != 1)
    throw DomainError("deg_rk is defined on P^1 only (ambient dimension " + std::to_string(s.ambient_dim()) + ")");
  return {s.degree(), s.rank()};
}

namespace detail {

// Sym^k or Wedge^k of a sum, built twist by twist:
//   S^k(A + B) = sum_j S^j(A) * S^{k-j}(B),  S^j(O(d)^m) = O(jd)^{c(m, j)}
// with c(m, j) = binom(m+j-1, j) for Sym and binom(m, j) for Wedge.
template <class PieceCount>
LineBundleSum graded_power(const LineBundleSum& s, std::int64_t k, const char* what, PieceCount count) {
  if (k < 0) throw ArgumentError(std::string(what) + ": k must be nonnegative");
  if (!s.is_effective())
    throw EffectivenessError(std::string(what) + " of a virtual sum " + s.to_string() + " is undefined");
  const std::int64_t n = s.ambient_dim();
  // graded[j] = S^j of the summands processed so far
  std::vector<LineBundleSum> graded(static_cast<std::size_t>(k + 1), LineBundleSum(n));
  graded[0] = LineBundleSum::twist(n, 0);
  for (const auto& [d, m] : s.terms()) {
    std::vector<LineBundleSum> next(static_cast<std::size_t>(k + 1), LineBundleSum(n));
    for (std::int64_t total = 0; total <= k; ++total)
      for (std::int64_t j = 0; j <= total; ++j) {
        BigInt c = count(m, j);
        if (c == 0) continue;
        next[total] = next[total] + graded[total - j] * LineBundleSum::twist(n, j * d, c);
      }
    graded = std::move(next);
  }
  return graded[k];
}

}  // namespace detail

inline LineBundleSum sym_power(const LineBundleSum& s, std::int64_t k) {
  return detail::graded_power(s, k, "sym_power",
                              [](const BigInt& m, std::int64_t j) { return binom(m + j - 1, j); });
}

inline LineBundleSum wedge_power(const LineBundleSum& s, std::int64_t k) {
  return detail::graded_power(s, k, "wedge_power", [](const BigInt& m, std::int64_t j) { return binom(m, j); });
}

/// [Sym^i Omega^1] for i = 0..k via the Euler sequence 0 -> Omega -> O(-1)^{N+1} -> O -> 0,
/// whose symmetric powers give sum_{i<=k} [Sym^i Omega] = binom(N+k, N) [O(-k)].
inline std::vector<KClass> sym_omega_table(std::int64_t n, std::int64_t k) {
  require_ambient(n);
  if (k < 0) throw ArgumentError("sym_omega: k must be nonnegative");
  std::vector<KClass> table;
  table.reserve(static_cast<std::size_t>(k + 1));
  KClass partial = KClass::zero(n);
  for (std::int64_t i = 0; i <= k; ++i) {
    KClass next = binom(n + i, n) * class_of_twist(n, -i) - partial;
    partial += next;
    table.push_back(std::move(next));
  }
  return table;
}

inline KClass sym_omega(std::int64_t n, std::int64_t k) { return sym_omega_table(n, k).back(); }

/// dim H^i(P^N, O(d)). Total: out-of-range degrees give 0.
inline BigInt cohomology_dim(std::int64_t n, std::int64_t d, std::int64_t i) {
  require_ambient(n);
  if (i == 0) return d >= 0 ? binom(n + d, n) : BigInt(0);
  if (i == n) return -d - 1 >= n ? binom(-d - 1, n) : BigInt(0);
  return 0;
}

}  // namespace jetk
