#include "sct/subst.hpp"

#include <algorithm>

namespace sct {

const Term *Substitution::lookup(const std::string &x) const {
  for (size_t i = 0; i < params.size(); ++i)
    if (params[i] == x) return &images[i];
  return nullptr;
}

static Term apply_simple(const Simple &s, const Substitution &sub,
                         Clashes &cl) {
  switch (s.k) {
    case Simple::K::Ctor:
      return t_ctor(s.ctor, apply_simple(s.sub[0], sub, cl));
    case Simple::K::Tuple: {
      std::vector<Term> parts;
      for (const Simple &c : s.sub) parts.push_back(apply_simple(c, sub, cl));
      return t_tuple(parts);
    }
    case Simple::K::Branch:
    case Simple::K::Approx: {
      Term base;
      if (s.d.is_unit()) {
        base = t_unit();
      } else if (const Term *img = sub.lookup(s.d.var)) {
        base = *img;
      } else {
        base = t_var(s.d.var);
      }
      Term r = t_dseq(s.d.steps, base, cl);
      if (s.k == Simple::K::Approx) r = t_approx(s.w, r);
      return r;
    }
  }
  return t_zero();
}

Term apply(const Term &t, const Substitution &s, Clashes &cl) {
  std::vector<Term> parts;
  for (const Simple &sm : t.sum) parts.push_back(apply_simple(sm, s, cl));
  return t_sum(parts);
}

Substitution compose(const Substitution &tau, const Substitution &sigma,
                     Clashes &cl) {
  Substitution r;
  r.params = tau.params;
  for (const Term &img : tau.images)
    r.images.push_back(apply(img, sigma, cl));
  return r;
}

std::optional<Substitution> ccomp(const Substitution &tau,
                                  const Substitution &sigma, Bounds b) {
  Clashes cl;
  Substitution r = compose(tau, sigma, cl);
  if (cl.shape_clash)
    throw AnalysisError("shape clash while composing call arcs");
  bool dead = false;
  for (Term &img : r.images) {
    if (img.is_zero()) dead = true;  // only reachable via a ctor clash here
    img = max_summands(collapse_arc(img, b));
  }
  if (dead) return std::nullopt;
  return r;
}

bool subst_leq(const Substitution &a, const Substitution &b) {
  if (a.params != b.params) return false;
  for (size_t i = 0; i < a.images.size(); ++i)
    if (!leq(a.images[i], b.images[i])) return false;
  return true;
}

bool subst_compatible(const Substitution &a, const Substitution &b) {
  if (a.params != b.params) return false;
  for (size_t i = 0; i < a.images.size(); ++i)
    if (!compatible(a.images[i], b.images[i])) return false;
  return true;
}

std::string show(const Substitution &s) {
  std::string out = "[";
  for (size_t i = 0; i < s.params.size(); ++i) {
    if (i) out += "; ";
    out += s.params[i] + " := " + show(s.images[i]);
  }
  return out + "]";
}

}  // namespace sct
