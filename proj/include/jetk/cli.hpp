/**
 * @file cli.hpp
 * @brief The `jetk` command line, callable in-process.
 *
 * Exit codes: 0 success or verified, 1 refuted/inapplicable claim, 2 usage or
 * input error.
 */
#pragma once

#include "jetk/jetcalc.hpp"
#include "jetk/kring.hpp"
#include "jetk/p1lab.hpp"
#include "jetk/report_json.hpp"
#include "jetk/sheafdsl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace jetk {

enum class OutputMode { text, json };

struct CliConfig {
  std::int64_t ambient_dim = 1;
  OutputMode output_mode = OutputMode::text;
  std::string command;
};

/// Raised for bad user input that parsed syntactically (out-of-range flags, unreadable files).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json coeff_json(const KClass& c) {
  Json a = Json::array();
  for (const auto& x : c.value().coeffs()) a.push_back(x.str());
  return a;
}

inline Json degrees_json(const SplittingType& s) {
  Json a = Json::array();
  for (auto d : s.degrees) a.push_back(std::to_string(d));
  return a;
}

inline void require_p1(std::int64_t n, const char* command) {
  if (n != 1)
    throw UsageError(std::string(command) +
                     ": splitting types are only computed on P^1 (Birkhoff-Grothendieck); pass -N 1");
}

inline LaurentMatrix matrix_for_split(const Expr& e) {
  if (const auto* jet = e.as<ast::Jet>()) {
    if (jet->order != 1)
      throw UsageError("split: explicit transition matrices exist for first-order jets only, got J" +
                       std::to_string(jet->order));
    return jet_transition(jet->twist, jet->side);
  }
  EvaluatedSheaf v = evaluate_full(e, 1);
  if (!v.split || !v.split->is_effective() || v.split->empty())
    throw EvalError("split needs a first-order jet or an effective sum of twists", print_expr(e));
  std::vector<LaurentPoly> diag;
  for (auto d : v.split->degrees_descending()) diag.push_back(LaurentPoly::u_pow(d));
  return LaurentMatrix::diagonal(diag);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read matrix file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory and splitting calculator for jet bundles on projective space", "jetk"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");

  std::string expression;
  std::int64_t twist = 0;
  std::int64_t order = 1;
  std::int64_t lmin = 0;
  std::int64_t lmax = 0;
  std::string matrix_path;

  auto* kclass = app.add_subcommand("kclass", "K-class of a sheaf expression in the basis 1, t, ..., t^N");
  kclass->add_option("-N", cfg.ambient_dim, "Ambient dimension")->required();
  kclass->add_option("expr", expression, "Sheaf expression, e.g. \"Sym2(Omega) * O(3)\"")->required();

  auto* split = app.add_subcommand("split", "Birkhoff-Grothendieck splitting type on P^1");
  split->add_option("-N", cfg.ambient_dim, "Ambient dimension (must be 1)");
  split->add_option("expr", expression, "Jet or split expression, e.g. \"J1(O(2), right)\"")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification and print its report");
  verify->require_subcommand(1);
  auto* mainsplit = verify->add_subcommand("mainsplit", "Left and right J^1(O(l)) are not isomorphic on P^N");
  mainsplit->add_option("-N", cfg.ambient_dim)->required();
  mainsplit->add_option("-l", twist)->required();
  auto* ktheory = verify->add_subcommand("ktheory", "[J^k(O(l))^left] = [J^k(O(l))^right] in K(P^N)");
  ktheory->add_option("-N", cfg.ambient_dim)->required();
  ktheory->add_option("-k", order)->required();
  ktheory->add_option("-l", twist)->required();
  auto* atiyah = verify->add_subcommand("atiyah", "a(O(l)) = 0 iff the P^1 splittings coincide");
  atiyah->add_option("-l", twist)->required();

  auto* birkhoff = app.add_subcommand("birkhoff", "Factor a transition matrix read from a file");
  birkhoff->add_option("--matrix", matrix_path, "Grid file: one row per line, entries separated by ';'")
      ->required();

  auto* table = app.add_subcommand("table", "Tabulate families");
  table->require_subcommand(1);
  auto* jets = table->add_subcommand("jets", "Left/right splittings and classes of J^1(O(l)) on P^1");
  jets->add_option("-N", cfg.ambient_dim, "Ambient dimension (must be 1)");
  jets->add_option("--lmin", lmin)->required();
  jets->add_option("--lmax", lmax)->required();

  for (auto* sub : {kclass, split, verify, mainsplit, ktheory, atiyah, birkhoff, table, jets}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.output_mode = json ? OutputMode::json : OutputMode::text;

  auto emit_report = [&](const Report& r) {
    out << (cfg.output_mode == OutputMode::json ? emit_json(r) + "\n" : emit_text(r));
    return exit_code(r.verdict);
  };

  try {
    if (cfg.ambient_dim < 1) throw UsageError("-N must be >= 1, got " + std::to_string(cfg.ambient_dim));

    if (*kclass) {
      cfg.command = "kclass";
      const Expr e = parse(expression);
      const KClass c = evaluate(e, cfg.ambient_dim);
      if (cfg.output_mode == OutputMode::json) {
        Json j;
        j["expression"] = print_expr(e);
        j["N"] = std::to_string(cfg.ambient_dim);
        j["coefficients"] = detail::coeff_json(c);
        j["text"] = c.to_string();
        out << j.dump(2) << "\n";
      } else {
        out << c.to_string() << "\n";
      }
      return 0;
    }

    if (*split) {
      cfg.command = "split";
      detail::require_p1(cfg.ambient_dim, "split");
      const Expr e = parse(expression);
      const SplittingType s = birkhoff_split(detail::matrix_for_split(e));
      if (cfg.output_mode == OutputMode::json) {
        Json j;
        j["expression"] = print_expr(e);
        j["splitting"] = detail::degrees_json(s);
        out << j.dump(2) << "\n";
      } else {
        out << s.to_string() << "\n";
      }
      return 0;
    }

    if (*verify) {
      cfg.command = "verify";
      if (*mainsplit) return emit_report(prove_non_isomorphic(cfg.ambient_dim, twist));
      if (*ktheory) {
        if (order < 1) throw UsageError("-k must be >= 1, got " + std::to_string(order));
        return emit_report(verify_ktheory_equality(cfg.ambient_dim, order, twist));
      }
      return emit_report(verify_corr_p1(twist));
    }

    if (*birkhoff) {
      cfg.command = "birkhoff";
      const LaurentMatrix m = LaurentMatrix::parse(detail::read_file(matrix_path));
      const LaurentPoly det = m.determinant();
      const SplittingType s = birkhoff_split(m);
      const BigInt h0 = h0_count(m);
      if (cfg.output_mode == OutputMode::json) {
        Json j;
        j["size"] = std::to_string(m.size());
        j["determinant"] = det.to_string();
        j["splitting"] = detail::degrees_json(s);
        j["h0"] = h0.str();
        out << j.dump(2) << "\n";
      } else {
        out << "determinant: " << det.to_string() << "\n"
            << "splitting: " << s.to_string() << "\n"
            << "h0: " << h0.str() << "\n";
      }
      return 0;
    }

    cfg.command = "table";
    detail::require_p1(cfg.ambient_dim, "table jets");
    if (lmin > lmax) throw UsageError("--lmin must not exceed --lmax");
    Json rows = Json::array();
    std::ostringstream text;
    text << "l\tleft\tright\tclass\tatiyah\n";
    for (std::int64_t l = lmin; l <= lmax; ++l) {
      const SplittingType left = birkhoff_split(jet_transition(l, Side::left));
      const SplittingType right = birkhoff_split(jet_transition(l, Side::right));
      const KClass cls = jet_class(JetSpec{1, 1, l, Side::left});
      const Rational a = atiyah_class_p1(l);
      text << l << "\t" << left.to_string() << "\t" << right.to_string() << "\t" << cls.to_string() << "\t"
           << to_decimal(a) << "\n";
      Json row;
      row["l"] = std::to_string(l);
      row["left"] = detail::degrees_json(left);
      row["right"] = detail::degrees_json(right);
      row["class"] = detail::coeff_json(cls);
      row["atiyah"] = to_decimal(a);
      rows.push_back(std::move(row));
    }
    out << (cfg.output_mode == OutputMode::json ? rows.dump(2) + "\n" : text.str());
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace jetk
