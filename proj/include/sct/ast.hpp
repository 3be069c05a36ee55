#pragma once

// Source-level AST for the analyzed language, plus parsing, desugaring to
// the depth-one-pattern core, and static well-formedness checks.
//
// Concrete syntax (by example):
//
//   external f/1
//   #pragma sct depth=2 bound=1
//   val rec map x = match x with Nil[] -> Nil[]
//                              | Cons[a,y] -> Cons[f a, map y]
//     and aux x = ...
//
// Constructors are capitalized and always written with brackets: C[e],
// C[e1,e2] (sugar for C[(e1,e2)]), C[].  Projections are postfix: e.1, e.2.
// Application is juxtaposition with atomic arguments.  Match scrutinees and
// patterns may be bare comma lists (tuples).  A match used inside another
// match's branch must be parenthesized.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sct {

struct Pos {
  int line = 0, col = 0;
};

struct ParseError : std::runtime_error {
  Pos pos;
  ParseError(Pos p, const std::string &msg)
      : std::runtime_error(std::to_string(p.line) + ":" +
                           std::to_string(p.col) + ": " + msg),
        pos(p) {}
};

struct Pattern {
  enum class K { Ctor, Tuple, Var, Wild };
  K k = K::Wild;
  std::string name;          // Ctor / Var
  std::vector<Pattern> sub;  // Ctor: exactly one; Tuple: any length
  Pos pos;

  static Pattern wild(Pos p) { return {K::Wild, {}, {}, p}; }
  static Pattern var(std::string x, Pos p) {
    return {K::Var, std::move(x), {}, p};
  }
  static Pattern ctor(std::string c, Pattern s, Pos p) {
    return {K::Ctor, std::move(c), {std::move(s)}, p};
  }
  static Pattern tuple(std::vector<Pattern> ps, Pos p) {
    return {K::Tuple, {}, std::move(ps), p};
  }
  bool operator==(const Pattern &o) const {
    return k == o.k && name == o.name && sub == o.sub;
  }
};

struct Expr {
  enum class K { Var, Call, Ctor, Tuple, Match, Proj };
  K k = K::Var;
  std::string name;  // Var / Call / Ctor
  int index = 0;     // Proj
  // Call: args; Ctor/Proj: one child; Tuple: components;
  // Match: scrutinee followed by one body per branch
  std::vector<Expr> sub;
  std::vector<Pattern> pats;  // Match only, one per branch
  Pos pos;

  static Expr var(std::string x, Pos p) {
    return {K::Var, std::move(x), 0, {}, {}, p};
  }
  static Expr call(std::string f, std::vector<Expr> args, Pos p) {
    return {K::Call, std::move(f), 0, std::move(args), {}, p};
  }
  static Expr ctor(std::string c, Expr arg, Pos p) {
    return {K::Ctor, std::move(c), 0, {std::move(arg)}, {}, p};
  }
  static Expr tuple(std::vector<Expr> es, Pos p) {
    return {K::Tuple, {}, 0, std::move(es), {}, p};
  }
  static Expr proj(int i, Expr e, Pos p) {
    return {K::Proj, {}, i, {std::move(e)}, {}, p};
  }
  bool operator==(const Expr &o) const {
    return k == o.k && name == o.name && index == o.index && sub == o.sub &&
           pats == o.pats;
  }
};

struct Definition {
  std::string name;
  std::vector<std::string> params;
  Expr body;
  Pos pos;
};

struct Group {
  std::vector<Definition> defs;
  std::optional<int> pragma_depth;
  std::optional<int> pragma_bound;
};

struct External {
  std::string name;
  int arity = 0;
};

struct Program {
  std::vector<Group> groups;
  std::vector<External> externals;

  const External *find_external(const std::string &n) const;
};

struct Diagnostic {
  Pos pos;
  std::string message;
};

// Parse a whole source file.  Throws ParseError on syntax errors and on
// call-arity mismatches (checked once all definitions are known).
Program parse(const std::string &source);

// Compile deep and tuple patterns away: afterwards every match branch
// pattern is C[y] with y fresh, or the wildcard.
Program desugar(const Program &p);

// Shape/application sanity on a desugared program: projections of
// constructors, matches on tuples, out-of-range projections of literal
// tuples, function names used as plain values.
std::vector<Diagnostic> validate(const Program &p);

}  // namespace sct
