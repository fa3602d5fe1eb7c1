/**
 * @file sheafdsl.hpp
 * @brief Expression language for sheaf classes on P^N.
 *
 *   expr   := term ('+' term)*
 *   term   := factor ('*' factor)*
 *   factor := 'O' '(' int ')' | 'O' | 'Omega' | 'dual' '(' expr ')'
 *           | 'Sym' nat '(' expr ')' | 'Wedge' nat '(' expr ')'
 *           | 'J' nat '(' 'O' '(' int ')' ',' ('left' | 'right') ')'
 *           | '(' expr ')'
 *
 * '+' is direct sum, '*' is tensor product, bare 'O' is the structure sheaf.
 */
#pragma once

#include "jetk/jetcalc.hpp"
#include "jetk/kring.hpp"

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jetk {

struct SyntaxError : ParseError {
  SyntaxError(const std::string& msg, std::size_t pos, std::vector<std::string> exp)
      : ParseError(msg, pos), expected(std::move(exp)) {}
  std::vector<std::string> expected;
};

/// Out-of-range integer parameter (Jet order 0, oversized exponent, ...).
struct RangeError : ParseError {
  using ParseError::ParseError;
};

struct EvalError : std::domain_error {
  EvalError(const std::string& msg, std::string sub)
      : std::domain_error(msg + ": " + sub), subexpression(std::move(sub)) {}
  std::string subexpression;
};

class Expr;

namespace ast {
struct Twist {
  std::int64_t degree;
};
struct Omega {};
struct Structure {};
struct Sum;
struct Tensor;
struct Dual;
struct Sym;
struct Wedge;
struct Jet {
  std::int64_t order;
  std::int64_t twist;
  Side side;
};
}  // namespace ast

/// Immutable, value-semantic syntax tree handle.
class Expr {
 public:
  struct Node;

  static Expr twist(std::int64_t d);
  static Expr omega();
  static Expr structure();
  static Expr sum(Expr a, Expr b);
  static Expr tensor(Expr a, Expr b);
  static Expr dual(Expr e);
  static Expr sym(std::int64_t k, Expr e);
  static Expr wedge(std::int64_t k, Expr e);
  static Expr jet(std::int64_t k, std::int64_t l, Side side);

  const Node& node() const { return *node_; }

  template <class T>
  const T* as() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace ast {
struct Sum {
  Expr lhs, rhs;
};
struct Tensor {
  Expr lhs, rhs;
};
struct Dual {
  Expr arg;
};
struct Sym {
  std::int64_t k;
  Expr arg;
};
struct Wedge {
  std::int64_t k;
  Expr arg;
};
}  // namespace ast

struct Expr::Node {
  std::variant<ast::Twist, ast::Omega, ast::Structure, ast::Sum, ast::Tensor, ast::Dual, ast::Sym, ast::Wedge,
               ast::Jet>
      v;
};

template <class T>
const T* Expr::as() const {
  return std::get_if<T>(&node_->v);
}

inline Expr Expr::twist(std::int64_t d) { return Expr(std::make_shared<const Node>(Node{ast::Twist{d}})); }
inline Expr Expr::omega() { return Expr(std::make_shared<const Node>(Node{ast::Omega{}})); }
inline Expr Expr::structure() { return Expr(std::make_shared<const Node>(Node{ast::Structure{}})); }
inline Expr Expr::sum(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{ast::Sum{std::move(a), std::move(b)}}));
}
inline Expr Expr::tensor(Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{ast::Tensor{std::move(a), std::move(b)}}));
}
inline Expr Expr::dual(Expr e) { return Expr(std::make_shared<const Node>(Node{ast::Dual{std::move(e)}})); }
inline Expr Expr::sym(std::int64_t k, Expr e) {
  if (k < 0) throw ArgumentError("Sym: k must be nonnegative");
  return Expr(std::make_shared<const Node>(Node{ast::Sym{k, std::move(e)}}));
}
inline Expr Expr::wedge(std::int64_t k, Expr e) {
  if (k < 0) throw ArgumentError("Wedge: k must be nonnegative");
  return Expr(std::make_shared<const Node>(Node{ast::Wedge{k, std::move(e)}}));
}
inline Expr Expr::jet(std::int64_t k, std::int64_t l, Side side) {
  if (k < 1) throw ArgumentError("J: order must be >= 1");
  return Expr(std::make_shared<const Node>(Node{ast::Jet{k, l, side}}));
}

inline bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->v.index() != b.node_->v.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node_->v);
        if constexpr (std::is_same_v<T, ast::Twist>) return x.degree == y.degree;
        else if constexpr (std::is_same_v<T, ast::Omega> || std::is_same_v<T, ast::Structure>) return true;
        else if constexpr (std::is_same_v<T, ast::Sum> || std::is_same_v<T, ast::Tensor>)
          return x.lhs == y.lhs && x.rhs == y.rhs;
        else if constexpr (std::is_same_v<T, ast::Dual>) return x.arg == y.arg;
        else if constexpr (std::is_same_v<T, ast::Sym> || std::is_same_v<T, ast::Wedge>)
          return x.k == y.k && x.arg == y.arg;
        else return x.order == y.order && x.twist == y.twist && x.side == y.side;
      },
      a.node_->v);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

inline std::string print_expr(const Expr& e) {
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Twist>) return "O(" + std::to_string(x.degree) + ")";
        else if constexpr (std::is_same_v<T, ast::Omega>) return "Omega";
        else if constexpr (std::is_same_v<T, ast::Structure>) return "O";
        else if constexpr (std::is_same_v<T, ast::Sum>) {
          std::string rhs = print_expr(x.rhs);
          return print_expr(x.lhs) + " + " + (x.rhs.template as<ast::Sum>() ? paren(rhs) : rhs);
        } else if constexpr (std::is_same_v<T, ast::Tensor>) {
          std::string lhs = print_expr(x.lhs);
          std::string rhs = print_expr(x.rhs);
          if (x.lhs.template as<ast::Sum>()) lhs = paren(lhs);
          if (x.rhs.template as<ast::Sum>() || x.rhs.template as<ast::Tensor>()) rhs = paren(rhs);
          return lhs + " * " + rhs;
        } else if constexpr (std::is_same_v<T, ast::Dual>) return "dual(" + print_expr(x.arg) + ")";
        else if constexpr (std::is_same_v<T, ast::Sym>) return "Sym" + std::to_string(x.k) + paren(print_expr(x.arg));
        else if constexpr (std::is_same_v<T, ast::Wedge>)
          return "Wedge" + std::to_string(x.k) + paren(print_expr(x.arg));
        else
          return "J" + std::to_string(x.order) + "(O(" + std::to_string(x.twist) + "), " + to_string(x.side) + ")";
      },
      e.node().v);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class SheafParser {
 public:
  explicit SheafParser(std::string_view text) : text_(text) { advance(); }

  Expr parse_all() {
    Expr e = expr();
    if (tok_.kind != Kind::end) fail({"'+'", "'*'", "end of input"});
    return e;
  }

 private:
  enum class Kind { ident, number, punct, end };
  struct Token {
    Kind kind = Kind::end;
    std::string text;
    std::size_t pos = 0;
  };

  void advance() {
    while (cursor_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[cursor_]))) ++cursor_;
    tok_ = Token{Kind::end, "", cursor_};
    if (cursor_ >= text_.size()) return;
    const char c = text_[cursor_];
    const std::size_t start = cursor_;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (cursor_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[cursor_]))) ++cursor_;
      tok_ = {Kind::ident, std::string(text_.substr(start, cursor_ - start)), start};
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (cursor_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[cursor_]))) ++cursor_;
      tok_ = {Kind::number, std::string(text_.substr(start, cursor_ - start)), start};
    } else if (std::string_view("()+*,-").find(c) != std::string_view::npos) {
      ++cursor_;
      tok_ = {Kind::punct, std::string(1, c), start};
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", start, {});
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = tok_.kind == Kind::end ? "end of input" : "'" + tok_.text + "'";
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) list += (i ? ", " : "") + expected[i];
    throw SyntaxError("unexpected " + found + ", expected one of: " + list, tok_.pos, std::move(expected));
  }

  bool is_punct(char c) const { return tok_.kind == Kind::punct && tok_.text[0] == c; }
  bool is_ident(std::string_view s) const { return tok_.kind == Kind::ident && tok_.text == s; }

  void expect_punct(char c) {
    if (!is_punct(c)) fail({std::string("'") + c + "'"});
    advance();
  }

  std::int64_t number_value() {
    if (tok_.kind != Kind::number) fail({"integer"});
    if (tok_.text.size() > 12) throw RangeError("integer " + tok_.text + " out of range", tok_.pos);
    const std::int64_t v = std::stoll(tok_.text);
    advance();
    return v;
  }

  std::int64_t integer() {
    if (is_punct('-')) {
      advance();
      return -number_value();
    }
    if (tok_.kind != Kind::number) fail({"integer", "'-'"});
    return number_value();
  }

  std::int64_t nat(std::int64_t minimum, const char* what) {
    const std::size_t at = tok_.pos;
    if (tok_.kind != Kind::number) fail({"natural number"});
    const std::int64_t v = number_value();
    if (v < minimum)
      throw RangeError(std::string(what) + " index must be >= " + std::to_string(minimum), at);
    return v;
  }

  Expr expr() {
    Expr e = term();
    while (is_punct('+')) {
      advance();
      e = Expr::sum(std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (is_punct('*')) {
      advance();
      e = Expr::tensor(std::move(e), factor());
    }
    return e;
  }

  Expr factor() {
    if (is_punct('(')) {
      advance();
      Expr e = expr();
      expect_punct(')');
      return e;
    }
    if (is_ident("O")) {
      advance();
      if (!is_punct('(')) return Expr::structure();
      advance();
      const std::int64_t d = integer();
      expect_punct(')');
      return Expr::twist(d);
    }
    if (is_ident("Omega")) {
      advance();
      return Expr::omega();
    }
    if (is_ident("dual")) {
      advance();
      expect_punct('(');
      Expr e = expr();
      expect_punct(')');
      return Expr::dual(std::move(e));
    }
    if (is_ident("Sym") || is_ident("Wedge")) {
      const bool sym = is_ident("Sym");
      advance();
      const std::int64_t k = nat(0, sym ? "Sym" : "Wedge");
      expect_punct('(');
      Expr e = expr();
      expect_punct(')');
      return sym ? Expr::sym(k, std::move(e)) : Expr::wedge(k, std::move(e));
    }
    if (is_ident("J")) {
      advance();
      const std::int64_t k = nat(1, "J");
      expect_punct('(');
      if (!is_ident("O")) fail({"'O'"});
      advance();
      expect_punct('(');
      const std::int64_t l = integer();
      expect_punct(')');
      expect_punct(',');
      Side side;
      if (is_ident("left"))
        side = Side::left;
      else if (is_ident("right"))
        side = Side::right;
      else
        fail({"'left'", "'right'"});
      advance();
      expect_punct(')');
      return Expr::jet(k, l, side);
    }
    fail({"'O'", "'Omega'", "'dual'", "'Sym'", "'Wedge'", "'J'", "'('"});
  }

  std::string_view text_;
  std::size_t cursor_ = 0;
  Token tok_;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::SheafParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// K-class of a subexpression, plus its splitting when it is a sum of twists.
struct EvaluatedSheaf {
  KClass cls;
  std::optional<LineBundleSum> split;
};

namespace detail {

inline EvaluatedSheaf from_split(LineBundleSum s) {
  KClass c = sum_to_class(s);
  return {std::move(c), std::move(s)};
}

inline EvaluatedSheaf eval_node(const Expr& e, std::int64_t n) {
  return std::visit(
      [&](const auto& x) -> EvaluatedSheaf {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Twist>) {
          return from_split(LineBundleSum::twist(n, x.degree));
        } else if constexpr (std::is_same_v<T, ast::Structure>) {
          return from_split(LineBundleSum::twist(n, 0));
        } else if constexpr (std::is_same_v<T, ast::Omega>) {
          if (n == 1) return from_split(LineBundleSum::twist(1, -2));
          return {sym_omega(n, 1), std::nullopt};
        } else if constexpr (std::is_same_v<T, ast::Sum> || std::is_same_v<T, ast::Tensor>) {
          constexpr bool is_sum = std::is_same_v<T, ast::Sum>;
          EvaluatedSheaf a = eval_node(x.lhs, n);
          EvaluatedSheaf b = eval_node(x.rhs, n);
          if (a.split && b.split) return from_split(is_sum ? *a.split + *b.split : *a.split * *b.split);
          return {is_sum ? a.cls + b.cls : a.cls * b.cls, std::nullopt};
        } else if constexpr (std::is_same_v<T, ast::Dual>) {
          EvaluatedSheaf a = eval_node(x.arg, n);
          if (!a.split) throw EvalError("dual needs a sum of twists", print_expr(x.arg));
          return from_split(a.split->dual());
        } else if constexpr (std::is_same_v<T, ast::Sym>) {
          if (x.arg.template as<ast::Omega>()) {
            if (n == 1) return from_split(LineBundleSum::twist(1, -2 * x.k));
            return {sym_omega(n, x.k), std::nullopt};
          }
          EvaluatedSheaf a = eval_node(x.arg, n);
          if (!a.split || !a.split->is_effective())
            throw EvalError("Sym needs Omega or an effective sum of twists", print_expr(x.arg));
          return from_split(sym_power(*a.split, x.k));
        } else if constexpr (std::is_same_v<T, ast::Wedge>) {
          if (x.arg.template as<ast::Omega>() && n >= 2)
            throw EvalError("Wedge of Omega is not supported for N >= 2", print_expr(x.arg));
          EvaluatedSheaf a = eval_node(x.arg, n);
          if (!a.split || !a.split->is_effective())
            throw EvalError("Wedge needs an effective sum of twists", print_expr(x.arg));
          return from_split(wedge_power(*a.split, x.k));
        } else {
          return {jet_class(JetSpec{n, x.order, x.twist, x.side}), std::nullopt};
        }
      },
      e.node().v);
}

}  // namespace detail

/// Full evaluation; split is set when the expression stays in the split fragment.
inline EvaluatedSheaf evaluate_full(const Expr& e, std::int64_t n) {
  require_ambient(n);
  return detail::eval_node(e, n);
}

inline KClass evaluate(const Expr& e, std::int64_t n) { return evaluate_full(e, n).cls; }

}  // namespace jetk
