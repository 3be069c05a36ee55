#include "sct/approx.hpp"

#include <algorithm>
#include <numeric>

namespace sct {

// ------------------------------------------------------------ the preorder
//
// Decided by the inductive rules for normal forms:
//   (1) C u <= C v                  from u <= v
//   (2) tuples pointwise
//   (3) u <= <w>d                   from nf(<0>u) <= <w>d
//   (4) sums: forall summand on the left, exists one on the right
//   (5) <w'>b <= <w>d               iff d suffix of b and w'+|d| <= w+|b|
//   (6) d <= d
// Working on flattened sums (sums pushed out of constructors and tuples by
// linearity), (4) becomes the top-level quantifier and components are
// single simple terms.

static bool rule5(Weight wb, const DSeq &b, Weight wd, const DSeq &d) {
  return is_suffix(d, b) &&
         wb + Weight((int64_t)d.len()) <= wd + Weight((int64_t)b.len());
}

static bool leq_in(const Simple &a, const std::vector<Simple> &B);

// rule (3)+(4): nf(<0>a) against the approximation summands of the right side
static bool leq_via_approx(const Simple &a, const std::vector<Simple> &B) {
  bool has_approx = std::any_of(B.begin(), B.end(), [](const Simple &b) {
    return b.k == Simple::K::Approx;
  });
  if (!has_approx) return false;
  Term lifted = t_approx(Weight(0), t_simple(a));  // summands all Approx
  for (const Simple &s : lifted.sum) {
    bool ok = false;
    for (const Simple &b : B)
      if (b.k == Simple::K::Approx && rule5(s.w, s.d, b.w, b.d)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

// Does the union of the same-arity tuple summands C cover the tuple a on the
// component positions idx?  Collapsing a tuple distributes the per-component
// sums into a cross product of tuple summands, so a single component of a may
// only be covered by the *union* of the matching components of several
// summands.  Split on one position: group C by that component, keep the
// groups that cover the remaining positions, and ask whether the kept
// components jointly cover a's.
static bool tuple_cover(const Simple &a, const std::vector<const Simple *> &C,
                        const std::vector<size_t> &idx) {
  if (idx.size() == 1) {
    std::vector<Simple> comps;
    for (const Simple *b : C) comps.push_back(b->sub[idx[0]]);
    return leq_in(a.sub[idx[0]], comps);
  }
  for (size_t pick = 0; pick < idx.size(); ++pick) {
    size_t j0 = idx[pick];
    std::vector<size_t> rest = idx;
    rest.erase(rest.begin() + pick);
    std::vector<Simple> heads;
    std::vector<std::vector<const Simple *>> groups;
    for (const Simple *b : C) {
      size_t k = 0;
      while (k < heads.size() && !(heads[k] == b->sub[j0])) ++k;
      if (k == heads.size()) {
        heads.push_back(b->sub[j0]);
        groups.emplace_back();
      }
      groups[k].push_back(b);
    }
    std::vector<Simple> usable;
    for (size_t k = 0; k < heads.size(); ++k)
      if (tuple_cover(a, groups[k], rest)) usable.push_back(heads[k]);
    if (!usable.empty() && leq_in(a.sub[j0], usable)) return true;
  }
  return false;
}

static bool leq_in(const Simple &a, const std::vector<Simple> &B) {
  switch (a.k) {
    case Simple::K::Branch:
      for (const Simple &b : B)
        if (b.k == Simple::K::Branch && b.d == a.d) return true;
      return leq_via_approx(a, B);
    case Simple::K::Approx:
      for (const Simple &b : B)
        if (b.k == Simple::K::Approx && rule5(a.w, a.d, b.w, b.d)) return true;
      return false;
    case Simple::K::Ctor: {
      // C u <= sum of C v_i  iff  u <= sum of v_i
      std::vector<Simple> args;
      for (const Simple &b : B)
        if (b.k == Simple::K::Ctor && b.ctor == a.ctor)
          args.push_back(b.sub[0]);
      if (!args.empty() && leq_in(a.sub[0], args)) return true;
      return leq_via_approx(a, B);
    }
    case Simple::K::Tuple: {
      std::vector<const Simple *> C;
      for (const Simple &b : B)
        if (b.k == Simple::K::Tuple && b.sub.size() == a.sub.size())
          C.push_back(&b);
      if (!C.empty() && !a.sub.empty()) {
        std::vector<size_t> idx(a.sub.size());
        std::iota(idx.begin(), idx.end(), size_t{0});
        if (tuple_cover(a, C, idx)) return true;
      }
      return leq_via_approx(a, B);
    }
  }
  return false;
}

bool leq(const Term &u, const Term &v) {
  return std::all_of(u.sum.begin(), u.sum.end(),
                     [&](const Simple &a) { return leq_in(a, v.sum); });
}

// --------------------------------------------------------- compatibility
//
// Inductive rules on the same flattened view.  Approximation branches
// compare by the either-direction suffix rule; a bare branch against an
// approximation is lifted to <0>d (a bare branch against a bare branch
// stays plain equality).  A constructor or tuple can also be compatible
// with the approximation part of the other side as a whole: C u with the
// group iff u is, a tuple iff every component is.

static bool comp_terms(const Term &u, const Term &v);

static bool comp_leafs(const Simple &a, const Simple &b) {
  // a, b in {Branch, Approx}
  if (a.k == Simple::K::Branch && b.k == Simple::K::Branch)
    return a.d == b.d;
  return is_suffix(a.d, b.d) || is_suffix(b.d, a.d);
}

// the approximation summands of one side, as a Term
static Term approx_part(const Term &t) {
  Term r;
  for (const Simple &s : t.sum)
    if (s.k == Simple::K::Approx) r.sum.push_back(s);
  return r;
}

static bool comp_vs_approx(const Simple &a, const Term &S) {
  if (S.is_zero()) return false;
  switch (a.k) {
    case Simple::K::Ctor:
      return comp_terms(t_simple(a.sub[0]), S);
    case Simple::K::Tuple:
      return std::all_of(a.sub.begin(), a.sub.end(), [&](const Simple &c) {
        return comp_terms(t_simple(c), S);
      });
    default:
      return false;
  }
}

static bool comp_terms(const Term &u, const Term &v) {
  for (const Simple &a : u.sum)
    for (const Simple &b : v.sum) {
      bool a_leaf = a.k == Simple::K::Branch || a.k == Simple::K::Approx;
      bool b_leaf = b.k == Simple::K::Branch || b.k == Simple::K::Approx;
      if (a_leaf && b_leaf) {
        if (comp_leafs(a, b)) return true;
      } else if (a.k == Simple::K::Ctor && b.k == Simple::K::Ctor) {
        if (a.ctor == b.ctor && comp_terms(t_simple(a.sub[0]), t_simple(b.sub[0])))
          return true;
      } else if (a.k == Simple::K::Tuple && b.k == Simple::K::Tuple &&
                 a.sub.size() == b.sub.size()) {
        bool ok = true;
        for (size_t i = 0; i < a.sub.size() && ok; ++i)
          ok = comp_terms(t_simple(a.sub[i]), t_simple(b.sub[i]));
        if (ok) return true;
      }
    }
  // constructor/tuple against the approximation part of the other side
  Term va = approx_part(v);
  if (!va.is_zero())
    for (const Simple &a : u.sum)
      if (comp_vs_approx(a, va)) return true;
  Term ua = approx_part(u);
  if (!ua.is_zero())
    for (const Simple &b : v.sum)
      if (comp_vs_approx(b, ua)) return true;
  return false;
}

bool compatible(const Term &u, const Term &v) { return comp_terms(u, v); }

// -------------------------------------------------------------- collapsing

Weight clamp_weight(Weight w, int B) {
  if (w.inf || w.v >= B) return Weight::infinity();
  if (w.v < -B) return Weight(-B);
  return w;
}

static Simple cw(const Simple &s, int B) {
  Simple r = s;
  switch (s.k) {
    case Simple::K::Ctor:
    case Simple::K::Tuple:
      for (Simple &c : r.sub) c = cw(c, B);
      break;
    case Simple::K::Approx:
      r.w = clamp_weight(s.w, B);
      break;
    case Simple::K::Branch:
      break;
  }
  return r;
}

Term collapse_weight(const Term &t, int B) {
  Term r;
  for (const Simple &s : t.sum) r.sum.push_back(cw(s, B));
  std::sort(r.sum.begin(), r.sum.end());
  r.sum.erase(std::unique(r.sum.begin(), r.sum.end()), r.sum.end());
  return r;
}

// fold the leading destructors of d beyond length D into a weight
static Simple fold_dseq(Weight w, const DSeq &d, int D, bool had_approx) {
  if ((int)d.len() <= D) {
    if (!had_approx) return Simple::mk_branch(d);
    return Simple::mk_approx(w, d);
  }
  int excess = (int)d.len() - D;
  DSeq suffix;
  suffix.var = d.var;
  suffix.steps.assign(d.steps.end() - D, d.steps.end());
  return Simple::mk_approx(w + Weight(-excess), std::move(suffix));
}

static Term cd(const Simple &s, int i, int D, bool arc) {
  if (i > 0) {
    switch (s.k) {
      case Simple::K::Ctor:
        return t_ctor(s.ctor, cd(s.sub[0], i - 1, D, arc));
      case Simple::K::Tuple: {
        std::vector<Term> parts;
        for (const Simple &c : s.sub) parts.push_back(cd(c, i - 1, D, arc));
        return t_tuple(parts);
      }
      case Simple::K::Approx:
        return t_simple(fold_dseq(s.w, s.d, D, true));
      case Simple::K::Branch:
        return t_simple(fold_dseq(Weight(0), s.d, D, false));
    }
  }
  // i = 0: a plain variable (or unit) stays as it is; a bare destructor
  // branch folds its excess destructors into an approximation.  On arc
  // labels a *lone* surviving destructor is folded too: it carries no
  // shape information worth keeping, only a guaranteed size decrease.
  if (s.k == Simple::K::Branch) {
    if (s.d.len() == 0) return t_simple(s);
    int strip = std::max((int)s.d.len() - D, arc && s.d.len() == 1 ? 1 : 0);
    DSeq suffix;
    suffix.var = s.d.var;
    suffix.steps.assign(s.d.steps.begin() + strip, s.d.steps.end());
    return t_simple(Simple::mk_approx(Weight(-strip), std::move(suffix)));
  }
  // remaining constructors are stripped with <0>, then the destructor
  // sequences of the resulting approximation summands are bounded
  Term stripped = t_approx(Weight(0), t_simple(s));
  Term r;
  for (const Simple &a : stripped.sum)
    r.sum.push_back(fold_dseq(a.w, a.d, D, true));
  std::sort(r.sum.begin(), r.sum.end());
  r.sum.erase(std::unique(r.sum.begin(), r.sum.end()), r.sum.end());
  return r;
}

static Term cdepth(const Term &t, int D, bool arc) {
  std::vector<Term> parts;
  for (const Simple &s : t.sum) parts.push_back(cd(s, D, D, arc));
  return t_sum(parts);
}

Term collapse_depth(const Term &t, int D) { return cdepth(t, D, false); }

Term collapse(const Term &t, Bounds b) {
  return collapse_weight(cdepth(t, b.D, false), b.B);
}

Term collapse_arc(const Term &t, Bounds b) {
  return collapse_weight(cdepth(t, b.D, true), b.B);
}

Term max_summands(const Term &t) {
  Term r;
  for (size_t i = 0; i < t.sum.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < t.sum.size() && !dominated; ++j)
      if (i != j && leq_in(t.sum[i], {t.sum[j]})) dominated = true;
    if (!dominated) r.sum.push_back(t.sum[i]);
  }
  return r;
}

}  // namespace sct
