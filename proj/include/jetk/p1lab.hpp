/**
 * @file p1lab.hpp
 * @brief Explicit bundles on P^1: transition matrices, Birkhoff-Grothendieck
 * factorization, a section-counting oracle and Cech Atiyah classes.
 *
 * Chart convention: U0 has coordinate u, U1 has v = 1/u, dv = -u^{-2} du.
 * A transition matrix m(u) glues frames by F0(u) = m(u) F1(1/u), so the
 * 1x1 matrix (u^d) is O(d) and has splitting {d}.
 */
#pragma once

#include "jetk/exact_arith.hpp"
#include "jetk/jetcalc.hpp"
#include "jetk/kring.hpp"
#include "jetk/report.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jetk {

struct NotATransitionError : std::domain_error {
  using std::domain_error::domain_error;
};

class LaurentMatrix {
 public:
  explicit LaurentMatrix(std::size_t size) : size_(size), entries_(size * size) {
    if (size == 0) throw ArgumentError("LaurentMatrix: size must be positive");
  }

  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows) : LaurentMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != size_) throw ArgumentError("LaurentMatrix: rows must form a square grid");
      std::size_t j = 0;
      for (const auto& e : row) at(i, j++) = e;
      ++i;
    }
  }

  static LaurentMatrix identity(std::size_t size) {
    LaurentMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
  }

  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& d) {
    LaurentMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return entries_.at(i * size_ + j); }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i * size_ + j); }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size_ != b.size_) throw ArgumentError("LaurentMatrix: size mismatch");
    LaurentMatrix r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i)
      for (std::size_t k = 0; k < a.size_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.size_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a) {
    LaurentMatrix r(a);
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  LaurentMatrix minor(std::size_t row, std::size_t col) const {
    LaurentMatrix r(size_ - 1);
    for (std::size_t i = 0, ri = 0; i < size_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < size_; ++j) {
        if (j == col) continue;
        r.at(ri, rj++) = at(i, j);
      }
      ++ri;
    }
    return r;
  }

  /// Laplace expansion along the first row; sizes here are small.
  LaurentPoly determinant() const {
    if (size_ == 1) return at(0, 0);
    if (size_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    LaurentPoly det;
    for (std::size_t j = 0; j < size_; ++j) {
      if (at(0, j).is_zero()) continue;
      LaurentPoly term = at(0, j) * minor(0, j).determinant();
      det += (j % 2 ? -term : term);
    }
    return det;
  }

  LaurentMatrix adjugate() const {
    LaurentMatrix r(size_);
    if (size_ == 1) {
      r.at(0, 0) = 1;
      return r;
    }
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) {
        LaurentPoly c = minor(i, j).determinant();
        r.at(j, i) = (i + j) % 2 ? -c : c;
      }
    return r;
  }

  /// Smallest / largest exponent among nonzero entries.
  std::pair<std::int64_t, std::int64_t> exponent_range() const {
    std::optional<std::int64_t> lo, hi;
    for (const auto& e : entries_) {
      if (e.is_zero()) continue;
      lo = lo ? std::min(*lo, e.min_degree()) : e.min_degree();
      hi = hi ? std::max(*hi, e.max_degree()) : e.max_degree();
    }
    if (!lo) throw ArgumentError("LaurentMatrix: zero matrix has no exponents");
    return {*lo, *hi};
  }

  /// One row per line, entries separated by "; ".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        if (j) out += "; ";
        out += at(i, j).to_string();
      }
      out += "\n";
    }
    return out;
  }

  /// Parses the grid format; blank lines and lines starting with '#' are skipped.
  static LaurentMatrix parse(std::string_view text) {
    std::vector<std::vector<LaurentPoly>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::vector<LaurentPoly> row;
      std::size_t start = 0;
      std::size_t column = 1;
      while (true) {
        const auto semi = line.find(';', start);
        const std::string cell = line.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        try {
          row.push_back(LaurentPoly::parse(cell));
        } catch (const ParseError& e) {
          throw ParseError("matrix line " + std::to_string(lineno) + " entry " + std::to_string(column) + ": " +
                               e.what(),
                           start + e.position);
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
        ++column;
      }
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix file has no rows", 0);
    LaurentMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw ParseError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(rows.size()),
                         0);
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

 private:
  std::size_t size_;
  std::vector<LaurentPoly> entries_;
};

/// Birkhoff-Grothendieck degrees, stored descending.
struct SplittingType {
  std::vector<std::int64_t> degrees;

  SplittingType() = default;
  explicit SplittingType(std::vector<std::int64_t> d) : degrees(std::move(d)) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
  }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto d : degrees) s += d;
    return s;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? ", " : "") + std::to_string(degrees[i]);
    return out + "}";
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

namespace detail {

using RationalGrid = std::vector<std::vector<Rational>>;

/// Row echelon form in place; returns pivot column per pivot row.
inline std::vector<std::size_t> echelon(RationalGrid& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalGrid a, std::size_t cols) { return echelon(a, cols).size(); }

/// Some nonzero kernel vector of a square matrix, or nullopt if it is nonsingular.
inline std::optional<std::vector<Rational>> null_vector(RationalGrid a) {
  const std::size_t n = a.size();
  const auto pivots = echelon(a, n);
  if (pivots.size() == n) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  const auto free_col =
      static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
  std::vector<Rational> x(n, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free_col];
  return x;
}

inline std::pair<Rational, std::int64_t> unit_determinant(const LaurentMatrix& m) {
  const LaurentPoly det = m.determinant();
  if (!det.is_monomial())
    throw NotATransitionError("not a vector-bundle transition: determinant " + det.to_string() +
                              " is not a nonzero monomial");
  const auto& [e, c] = *det.terms().begin();
  return {c, e};
}

}  // namespace detail

/// m = left * diag(u^degrees) * right with left invertible over Q[u] and right over Q[u^{-1}].
struct BirkhoffFactorization {
  LaurentMatrix left;
  std::vector<std::int64_t> degrees;
  LaurentMatrix right;

  LaurentMatrix product() const {
    std::vector<LaurentPoly> d;
    for (auto a : degrees) d.push_back(LaurentPoly::u_pow(a));
    return left * LaurentMatrix::diagonal(d) * right;
  }
};

/// Column reduction over Q[w], w = u^{-1}.
///
/// With s the largest exponent in m, P = u^{-s} m is polynomial in w. Column
/// operations invertible over Q[w] bring P to column-reduced form: the matrix
/// of leading w-coefficients (degree delta_j in column j) is nonsingular. Then
/// L = P diag(w^{-delta}) is polynomial in u with constant determinant, and
/// m = L diag(u^{s - delta}) V^{-1}. Each step lowers sum(delta) by at least one.
inline BirkhoffFactorization birkhoff_factor(const LaurentMatrix& m) {
  detail::unit_determinant(m);
  const std::size_t r = m.size();
  const std::int64_t s = m.exponent_range().second;

  LaurentMatrix p = LaurentPoly::u_pow(-s) * m;
  LaurentMatrix v_inv = LaurentMatrix::identity(r);
  std::vector<std::int64_t> delta(r);

  while (true) {
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t dj = 0;
      bool any = false;
      for (std::size_t i = 0; i < r; ++i) {
        if (p.at(i, j).is_zero()) continue;
        dj = any ? std::max(dj, -p.at(i, j).min_degree()) : -p.at(i, j).min_degree();
        any = true;
      }
      delta[j] = dj;
    }
    detail::RationalGrid lead(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) lead[i][j] = p.at(i, j).coeff(-delta[j]);

    const auto alpha = detail::null_vector(lead);
    if (!alpha) break;

    // target: the highest-degree column in the support of alpha, lowest index on ties
    std::size_t target = r;
    for (std::size_t j = 0; j < r; ++j)
      if ((*alpha)[j] != 0 && (target == r || delta[j] > delta[target])) target = j;

    for (std::size_t i = 0; i < r; ++i) {
      if (i == target || (*alpha)[i] == 0) continue;
      const LaurentPoly c = LaurentPoly::monomial((*alpha)[i] / (*alpha)[target], -(delta[target] - delta[i]));
      for (std::size_t row = 0; row < r; ++row) p.at(row, target) += c * p.at(row, i);
      for (std::size_t col = 0; col < r; ++col) v_inv.at(i, col) -= c * v_inv.at(target, col);
    }
  }

  BirkhoffFactorization f{LaurentMatrix(r), std::vector<std::int64_t>(r), std::move(v_inv)};
  for (std::size_t j = 0; j < r; ++j) {
    f.degrees[j] = s - delta[j];
    for (std::size_t i = 0; i < r; ++i) f.left.at(i, j) = p.at(i, j) * LaurentPoly::u_pow(delta[j]);
  }
  return f;
}

inline SplittingType birkhoff_split(const LaurentMatrix& m) { return SplittingType(birkhoff_factor(m).degrees); }

/// Transition matrix of J^1(O(l)) with the given module structure, as a map
/// from (f1, df1/dv) coordinates on U1 to (f0, df0/du) coordinates on U0.
/// f0 = u^l f1  gives  df0/du = l u^{l-1} f1 - u^{l-2} df1/dv.
/// The right structure is written in the frame of the splitting s(x) = (0, x),
/// which removes the coupling term.
inline LaurentMatrix jet_transition(std::int64_t l, Side side) {
  LaurentMatrix m(2);
  m.at(0, 0) = LaurentPoly::u_pow(l);
  m.at(1, 1) = LaurentPoly::monomial(-1, l - 2);
  if (side == Side::left) m.at(1, 0) = LaurentPoly::monomial(l, l - 1);
  return m;
}

/// dim H^0 of the bundle glued by m: pairs (F0 polynomial in u, F1 polynomial
/// in 1/u) with F0 = m F1. Since F1 = adj(m) F0 / (c u^e), the 1/u-degree of F1
/// is at most e - (smallest exponent of adj(m)).
inline BigInt h0_count(const LaurentMatrix& m) {
  const auto [c, e] = detail::unit_determinant(m);
  const std::size_t r = m.size();
  const std::int64_t adj_lo = m.adjugate().exponent_range().first;
  const std::int64_t bound = std::max<std::int64_t>(0, e - adj_lo);
  const std::int64_t m_lo = m.exponent_range().first;

  const std::size_t unknowns = r * static_cast<std::size_t>(bound + 1);
  detail::RationalGrid rows;
  // (m F1)_i must have no negative u-exponents
  for (std::size_t i = 0; i < r; ++i)
    for (std::int64_t p = m_lo - bound; p < 0; ++p) {
      std::vector<Rational> row(unknowns, Rational(0));
      bool nonzero = false;
      for (std::size_t j = 0; j < r; ++j)
        for (std::int64_t k = 0; k <= bound; ++k) {
          // x_{j,k} multiplies u^{-k} in F1_j
          Rational coef = m.at(i, j).coeff(p + k);
          if (coef == 0) continue;
          row[j * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(k)] = coef;
          nonzero = true;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  return BigInt(unknowns - detail::rank(std::move(rows), unknowns));
}

/// Splitting read off from h0 of twists: h0(E(t)) - h0(E(t-1)) = #{a_i >= -t}.
inline SplittingType splitting_via_h0(const LaurentMatrix& m) {
  const auto [c, e] = detail::unit_determinant(m);
  const std::int64_t r = static_cast<std::int64_t>(m.size());
  // a_i <= max exponent of m; dually -a_i <= max exponent of m^{-1} = adj(m) / (c u^e)
  const std::int64_t hi = m.exponent_range().second;
  const std::int64_t lo = e - m.adjugate().exponent_range().second;

  auto h0_twisted = [&](std::int64_t t) { return h0_count(LaurentPoly::u_pow(t) * m); };
  auto at_least = [&](std::int64_t threshold) {
    return static_cast<std::int64_t>(h0_twisted(-threshold) - h0_twisted(-threshold - 1));
  };

  std::vector<std::int64_t> degrees;
  std::int64_t above = at_least(hi + 1);
  if (above != 0) throw std::logic_error("splitting_via_h0: degree above the entry-exponent bound");
  for (std::int64_t threshold = hi; threshold >= lo; --threshold) {
    const std::int64_t count = at_least(threshold);
    for (std::int64_t k = above; k < count; ++k) degrees.push_back(threshold);
    above = count;
  }
  if (above != r) throw std::logic_error("splitting_via_h0: counts do not reach the rank");
  return SplittingType(std::move(degrees));
}

/// A Cech 1-cochain omega(u) du on U0 n U1.
struct CechOneForm {
  LaurentPoly coefficient;

  /// Scalar in H^1(P^1, Omega^1): the u^{-1} du coefficient. Coboundaries on
  /// this cover only reach exponents >= 0 or <= -2.
  Rational cohomology_class() const { return coefficient.coeff(-1); }
};

/// dlog of a transition function.
inline CechOneForm dlog(const LaurentPoly& g) { return {g.derivative().divide_by_monomial(g)}; }

/// Atiyah class of O(l): dlog of the transition u^l, so l under our sign convention.
inline Rational atiyah_class_p1(std::int64_t l) { return dlog(LaurentPoly::u_pow(l)).cohomology_class(); }

inline Report verify_corr_p1(std::int64_t l) {
  Report r;
  r.claim = "atiyah";
  r.params = {{"N", 1}, {"l", l}};

  const CechOneForm omega = dlog(LaurentPoly::u_pow(l));
  const Rational cls = omega.cohomology_class();
  auto& s1 = r.step("Atiyah class a(O(l)) = c1(O(l)) = [dlog u^l] in H^1(P^1, Omega^1)");
  with(s1, "cocycle", omega.coefficient.to_string() + " du");
  with(s1, "class", to_decimal(cls));

  const LaurentMatrix left = jet_transition(l, Side::left);
  const SplittingType left_split = birkhoff_split(left);
  auto& s2 = r.step("left transition (f, df coordinates) and its Birkhoff splitting");
  with(s2, "matrix", left.to_string());
  with(s2, "splitting", as_vector(left_split.degrees));

  const LaurentMatrix right = jet_transition(l, Side::right);
  const SplittingType right_split = birkhoff_split(right);
  auto& s3 = r.step("right transition in the frame of s(x) = (0, x) and its Birkhoff splitting");
  with(s3, "matrix", right.to_string());
  with(s3, "splitting", as_vector(right_split.degrees));

  const bool class_zero = cls == 0;
  const bool same = left_split == right_split;
  auto& s4 = r.step("class vanishes iff the two splittings coincide");
  with(s4, "class_zero", std::string(class_zero ? "true" : "false"));
  with(s4, "splittings_equal", std::string(same ? "true" : "false"));
  r.verdict = class_zero == same ? Verdict::verified : Verdict::refuted;
  return r;
}

}  // namespace jetk
