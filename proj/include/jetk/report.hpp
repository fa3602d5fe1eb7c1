/**
 * @file report.hpp
 * @brief Structured outcome of a verification: claim, parameters, verdict
 * and the exact intermediate values that led to it.
 */
#pragma once

#include "jetk/exact_arith.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jetk {

enum class Verdict { verified, refuted, inapplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "verified") return Verdict::verified;
  if (s == "refuted") return Verdict::refuted;
  if (s == "inapplicable") return Verdict::inapplicable;
  throw ArgumentError("unknown verdict '" + s + "'");
}

/// An exact value recorded in a step: an integer, a coefficient/degree vector, or text.
using StepValue = std::variant<BigInt, std::vector<BigInt>, std::string>;

struct NamedValue {
  std::string name;
  StepValue value;
  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct ReportStep {
  std::string description;
  std::vector<NamedValue> values;
  friend bool operator==(const ReportStep&, const ReportStep&) = default;
};

struct Report {
  std::string claim;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Verdict verdict = Verdict::inapplicable;
  std::vector<ReportStep> steps;

  ReportStep& step(std::string description) {
    steps.push_back({std::move(description), {}});
    return steps.back();
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline ReportStep& with(ReportStep& s, std::string name, StepValue v) {
  s.values.push_back({std::move(name), std::move(v)});
  return s;
}

inline std::vector<BigInt> as_vector(const TruncPoly& p) { return p.coeffs(); }

inline std::vector<BigInt> as_vector(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

/// Exit status convention: 0 verified, 1 otherwise.
inline int exit_code(Verdict v) { return v == Verdict::verified ? 0 : 1; }

}  // namespace jetk
