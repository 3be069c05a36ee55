#pragma once

// Abstract argument terms, kept in normal form.
//
// A Term is a (possibly empty) sum of simple terms; the empty sum is the
// error/impossible term 0.  Simple terms are constructor/tuple spines over
// leaves, where a leaf is a destructor branch "d x" (projections and
// constructor removals applied to a parameter, or to the unit value "()"),
// optionally under a single weighted approximation "<w>".
//
// All building operations normalize on the fly, so a Term never contains a
// redex: constructor removals have been cancelled against constructors,
// approximations have absorbed constructors on their right and destructors
// on their left, and sums are flattened, deduplicated and sorted so that
// structural equality decides equality up to associativity/commutativity/
// idempotence of + and neutrality of 0.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sct {

// ---------------------------------------------------------------- weights

struct Weight {
  bool inf = false;
  int64_t v = 0;

  Weight() = default;
  Weight(int64_t n) : v(n) {}
  static Weight infinity() {
    Weight w;
    w.inf = true;
    return w;
  }

  friend Weight operator+(Weight a, Weight b) {
    if (a.inf || b.inf) return infinity();
    return Weight(a.v + b.v);
  }
  friend bool operator==(const Weight &a, const Weight &b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  // total order with infinity on top
  friend std::strong_ordering operator<=>(const Weight &a, const Weight &b) {
    if (a.inf || b.inf) return (a.inf ? 1 : 0) <=> (b.inf ? 1 : 0);
    return a.v <=> b.v;
  }
};

std::string show(Weight w);  // "<3>", "<-1>", "<inf>" without brackets: "3"...

// ------------------------------------------------------- destructor paths

// One destructor, outermost first in a sequence: either a projection "p_i"
// or a constructor removal "C-".
struct Step {
  enum Kind { Proj, Dtor } kind;
  int index = 0;      // Proj
  std::string ctor;   // Dtor

  static Step proj(int i) { return Step{Proj, i, {}}; }
  static Step dtor(std::string c) { return Step{Dtor, 0, std::move(c)}; }

  friend bool operator==(const Step &, const Step &) = default;
  friend std::strong_ordering operator<=>(const Step &a, const Step &b) {
    if (auto c = (int)a.kind <=> (int)b.kind; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.ctor <=> b.ctor;
  }
};

// d x: a sequence of destructors (outermost first) ending in a variable, or
// the unit value "()" when `var` is empty.  Normal forms never apply a
// destructor to "()" (those reductions clash to 0), so unit implies no steps.
struct DSeq {
  std::vector<Step> steps;
  std::string var;  // "" = unit base ()

  bool is_unit() const { return var.empty(); }
  size_t len() const { return steps.size(); }

  friend bool operator==(const DSeq &, const DSeq &) = default;
  friend std::strong_ordering operator<=>(const DSeq &a, const DSeq &b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return a.steps <=> b.steps;
  }
};

// true iff `suf` is a suffix of `of` (same base variable, trailing steps)
bool is_suffix(const DSeq &suf, const DSeq &of);

// ----------------------------------------------------------- simple terms

struct Simple {
  enum class K { Ctor, Tuple, Branch, Approx };
  K k;
  std::string ctor;         // K::Ctor
  std::vector<Simple> sub;  // Ctor: exactly one; Tuple: n >= 1
  Weight w;                 // K::Approx
  DSeq d;                   // K::Branch / K::Approx

  static Simple mk_branch(DSeq d) {
    Simple s;
    s.k = K::Branch;
    s.d = std::move(d);
    return s;
  }
  static Simple mk_approx(Weight w, DSeq d) {
    Simple s;
    s.k = K::Approx;
    s.w = w;
    s.d = std::move(d);
    return s;
  }
  static Simple mk_ctor(std::string c, Simple arg) {
    Simple s;
    s.k = K::Ctor;
    s.ctor = std::move(c);
    s.sub.push_back(std::move(arg));
    return s;
  }
  static Simple mk_tuple(std::vector<Simple> parts) {
    Simple s;
    s.k = K::Tuple;
    s.sub = std::move(parts);
    return s;
  }

  friend bool operator==(const Simple &, const Simple &) = default;
  friend std::strong_ordering operator<=>(const Simple &a, const Simple &b) {
    if (auto c = (int)a.k <=> (int)b.k; c != 0) return c;
    if (auto c = a.ctor <=> b.ctor; c != 0) return c;
    if (auto c = a.w <=> b.w; c != 0) return c;
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.sub <=> b.sub;
  }
};

// A normalized sum of simple terms; empty = 0.
struct Term {
  std::vector<Simple> sum;

  bool is_zero() const { return sum.empty(); }
  friend bool operator==(const Term &, const Term &) = default;
  friend std::strong_ordering operator<=>(const Term &a, const Term &b) {
    return a.sum <=> b.sum;
  }
};

// Group-(3) reductions that fired while normalizing.  Which kind matters:
// a constructor/constructor mismatch marks a path evaluation cannot take
// (callers discard it), the three shape clashes mean the program itself is
// broken (callers abort).
struct Clashes {
  bool ctor_clash = false;   // C- D t
  bool shape_clash = false;  // p_i C t, C-(tuple), out-of-range p_i

  void merge(const Clashes &o) {
    ctor_clash |= o.ctor_clash;
    shape_clash |= o.shape_clash;
  }
};

// ------------------------------------------------- normalizing constructors

Term t_zero();
Term t_var(const std::string &x);
Term t_unit();  // the empty tuple ()
Term t_simple(Simple s);
Term t_ctor(const std::string &c, const Term &t);
Term t_tuple(const std::vector<Term> &parts);
Term t_dtor(const std::string &c, const Term &t, Clashes &cl);
Term t_proj(int i, const Term &t, Clashes &cl);
Term t_approx(Weight w, const Term &t);
Term t_sum(const std::vector<Term> &parts);

// apply one destructor step
Term t_step(const Step &s, const Term &t, Clashes &cl);
// apply a whole destructor sequence (innermost = last step first)
Term t_dseq(const std::vector<Step> &steps, const Term &t, Clashes &cl);

// ------------------------------------------------------------- raw terms

// Unrestricted term trees over the full grammar, used as normalize() input
// (random testing, and anywhere it is convenient to build first and
// normalize later).
struct Raw {
  enum class K { Var, Ctor, Tuple, Dtor, Proj, Approx, Sum, Zero };
  K k = K::Zero;
  std::string name;  // Var / Ctor / Dtor
  int index = 0;     // Proj
  Weight w;          // Approx
  std::vector<Raw> sub;

  static Raw var(std::string x) { return Raw{K::Var, std::move(x), 0, {}, {}}; }
  static Raw zero() { return Raw{}; }
  static Raw ctor(std::string c, Raw t) {
    return Raw{K::Ctor, std::move(c), 0, {}, {std::move(t)}};
  }
  static Raw tuple(std::vector<Raw> ts) {
    return Raw{K::Tuple, {}, 0, {}, std::move(ts)};
  }
  static Raw dtor(std::string c, Raw t) {
    return Raw{K::Dtor, std::move(c), 0, {}, {std::move(t)}};
  }
  static Raw proj(int i, Raw t) {
    return Raw{K::Proj, {}, i, {}, {std::move(t)}};
  }
  static Raw approx(Weight w, Raw t) {
    return Raw{K::Approx, {}, 0, w, {std::move(t)}};
  }
  static Raw sum(std::vector<Raw> ts) {
    return Raw{K::Sum, {}, 0, {}, std::move(ts)};
  }
};

Term normalize(const Raw &t, Clashes &cl);

// ---------------------------------------------------------------- depths

// constructor depth / destructor depth of a normal term (max over summands)
int depth_ctor(const Term &t);
int depth_dtor(const Term &t);

// exact values: closed terms of constructors and tuples only
bool is_exact_value(const Term &t);
int depth_value(const Term &v);  // precondition: is_exact_value

// -------------------------------------------------------------- rendering

// "A B <2> Y- Z- x", "<0>p2 Node- x", "(x, p1 Cons- y)", "S Z ()", "0"
std::string show(const Term &t);
std::string show(const Simple &s);
std::string show(const DSeq &d);

}  // namespace sct
