#pragma once

// Seeded random generators for the property suites.

#include <random>
#include <string>
#include <vector>

#include "sct/approx.hpp"
#include "sct/term.hpp"

namespace sct::gen {

struct Rng {
  std::mt19937 eng;
  explicit Rng(uint32_t seed) : eng(seed) {}
  int upto(int n) {  // uniform in [0, n]
    return std::uniform_int_distribution<int>(0, n)(eng);
  }
  int range(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  bool flip() { return upto(1) == 1; }
};

inline const std::vector<std::string> kCtors = {"A", "B", "S", "Node"};
inline const std::vector<std::string> kVars = {"x", "y", "z"};

// an arbitrary raw term tree, redexes and clashes included
inline Raw raw_term(Rng &r, int depth) {
  if (depth <= 0) {
    switch (r.upto(2)) {
      case 0: return Raw::var(kVars[r.upto((int)kVars.size() - 1)]);
      case 1: return Raw::tuple({});
      default: return Raw::zero();
    }
  }
  switch (r.upto(7)) {
    case 0: return Raw::var(kVars[r.upto((int)kVars.size() - 1)]);
    case 1: return Raw::ctor(kCtors[r.upto(3)], raw_term(r, depth - 1));
    case 2: {
      std::vector<Raw> parts;
      int n = r.range(1, 3);
      for (int i = 0; i < n; ++i) parts.push_back(raw_term(r, depth - 1));
      return Raw::tuple(std::move(parts));
    }
    case 3: return Raw::dtor(kCtors[r.upto(3)], raw_term(r, depth - 1));
    case 4: return Raw::proj(r.range(1, 3), raw_term(r, depth - 1));
    case 5: {
      Weight w = r.upto(9) == 0 ? Weight::infinity() : Weight(r.range(-2, 2));
      return Raw::approx(w, raw_term(r, depth - 1));
    }
    case 6: {
      std::vector<Raw> parts;
      int n = r.range(0, 2);
      for (int i = 0; i < n; ++i) parts.push_back(raw_term(r, depth - 1));
      return Raw::sum(std::move(parts));
    }
    default: return Raw::tuple({});
  }
}

// a random normal term (possibly 0)
inline Term term(Rng &r, int depth = 4) {
  Clashes cl;
  return normalize(raw_term(r, depth), cl);
}

// a random nonzero normal term
inline Term nonzero_term(Rng &r, int depth = 4) {
  for (;;) {
    Term t = term(r, depth);
    if (!t.is_zero()) return t;
  }
}

// a closed value: constructors and tuples only, exact depth `depth`
inline Term value(Rng &r, int depth) {
  if (depth <= 0) return t_unit();
  if (r.flip()) return t_ctor(kCtors[r.upto(3)], value(r, depth - 1));
  int n = r.range(1, 3);
  std::vector<Term> parts;
  int deep = r.upto(n - 1);  // one component realizes the full depth
  for (int i = 0; i < n; ++i)
    parts.push_back(value(r, i == deep ? depth - 1 : r.upto(depth - 1)));
  return t_tuple(parts);
}

// v with some subterms replaced by coarser ones: result is >= v
inline Term coarsen(Rng &r, const Term &v);

inline Simple coarsen_simple(Rng &r, const Simple &s, bool &grew) {
  switch (s.k) {
    case Simple::K::Ctor:
    case Simple::K::Tuple: {
      Simple c = s;
      for (Simple &p : c.sub) p = coarsen_simple(r, p, grew);
      return c;
    }
    case Simple::K::Branch:
      if (r.upto(3) == 0) {  // lift d x to <k> (suffix of d) x, k >= -drop
        grew = true;
        int keep = r.upto((int)s.d.len());
        DSeq d;
        d.var = s.d.var;
        d.steps.assign(s.d.steps.end() - keep, s.d.steps.end());
        int dropped = (int)s.d.len() - keep;
        return Simple::mk_approx(Weight(-dropped + r.upto(2)), std::move(d));
      }
      return s;
    case Simple::K::Approx:
      if (r.upto(3) == 0) {
        grew = true;
        Simple c = s;
        if (r.upto(4) == 0) {
          c.w = Weight::infinity();
        } else {
          c.w = c.w + Weight(r.range(1, 2));
        }
        return c;
      }
      if (!s.d.steps.empty() && r.upto(3) == 0) {
        // drop leading destructors, compensating in the weight
        grew = true;
        int drop = r.range(1, (int)s.d.len());
        Simple c = s;
        c.d.steps.erase(c.d.steps.begin(), c.d.steps.begin() + drop);
        c.w = s.w.inf ? s.w : Weight(s.w.v - drop + r.upto(1));
        return c;
      }
      return s;
  }
  return s;
}

inline Term coarsen(Rng &r, const Term &v) {
  Term out;
  bool grew = false;
  for (const Simple &s : v.sum) out.sum.push_back(coarsen_simple(r, s, grew));
  std::vector<Term> parts{t_zero()};
  for (const Simple &s : out.sum) parts.push_back(t_simple(s));
  if (r.upto(3) == 0) parts.push_back(term(r, 2));  // extra summand
  return t_sum(parts);
}

}  // namespace sct::gen
