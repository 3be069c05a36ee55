#include "sct/analysis.hpp"

#include <optional>

namespace sct {

namespace {

using Env = std::map<std::string, Term>;

// the term of an expression, when it is syntactically evident: parameters
// and match-bound variables (whose terms the Env carries), projections of
// those, and constructors/tuples of evident parts
std::optional<Term> term_of(const Expr &e, const Env &env) {
  switch (e.k) {
    case Expr::K::Var: {
      auto it = env.find(e.name);
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case Expr::K::Proj: {
      auto t = term_of(e.sub[0], env);
      if (!t) return std::nullopt;
      Clashes cl;
      Term r = t_proj(e.index, *t, cl);
      if (cl.shape_clash || cl.ctor_clash || r.is_zero()) return std::nullopt;
      return r;
    }
    case Expr::K::Ctor: {
      auto t = term_of(e.sub[0], env);
      if (!t) return std::nullopt;
      return t_ctor(e.name, *t);
    }
    case Expr::K::Tuple: {
      std::vector<Term> parts;
      for (const Expr &s : e.sub) {
        auto t = term_of(s, env);
        if (!t) return std::nullopt;
        parts.push_back(*t);
      }
      return t_tuple(parts);
    }
    case Expr::K::Call:
    case Expr::K::Match:
      return std::nullopt;
  }
  return std::nullopt;
}

struct Builder {
  const Group &g;
  const Program &prog;
  CFG out;
  int site = 0;

  bool in_group(const std::string &f) const {
    for (const Definition &d : g.defs)
      if (d.name == f) return true;
    return false;
  }

  Term unknown(const std::vector<std::string> &caller_params) const {
    std::vector<Term> parts;
    for (const std::string &x : caller_params)
      parts.push_back(t_approx(Weight::infinity(), t_var(x)));
    return t_sum(parts);
  }

  void walk(const Definition &def, const Expr &e, Env env) {
    if (e.k == Expr::K::Match) {
      walk(def, e.sub[0], env);
      auto scr = term_of(e.sub[0], env);
      for (size_t b = 0; b < e.pats.size(); ++b) {
        const Pattern &p = e.pats[b];
        Env benv = env;
        if (p.k == Pattern::K::Ctor) {
          // depth-one core pattern C[y]
          const std::string &y = p.sub[0].name;
          if (scr) {
            Clashes cl;
            Term ty = t_dtor(p.name, *scr, cl);
            if (!cl.shape_clash && !ty.is_zero()) benv[y] = ty;
          }
        }
        walk(def, e.sub[b + 1], benv);
      }
      return;
    }
    if (e.k == Expr::K::Call) {
      for (const Expr &a : e.sub) walk(def, a, env);
      if (in_group(e.name)) {
        CallArc arc;
        arc.caller = def.name;
        arc.callee = e.name;
        arc.pos = e.pos;
        arc.site = site++;
        arc.sub.params = out.params.at(e.name);
        for (const Expr &a : e.sub) {
          auto t = term_of(a, env);
          arc.sub.images.push_back(t ? *t : unknown(def.params));
        }
        out.arcs.push_back(std::move(arc));
      }
      return;
    }
    for (const Expr &s : e.sub) walk(def, s, env);
  }

  void run() {
    for (const Definition &d : g.defs) {
      out.fns.push_back(d.name);
      out.params[d.name] = d.params;
    }
    for (const Definition &d : g.defs) {
      Env env;
      for (const std::string &x : d.params) env[x] = t_var(x);
      walk(d, d.body, env);
    }
  }
};

}  // namespace

CFG build_cfg(const Group &g, const Program &p) {
  Builder b{g, p};
  b.run();
  return std::move(b.out);
}

std::string show(const CFG &g) {
  std::string out;
  for (const CallArc &a : g.arcs)
    out += a.caller + " -> " + a.callee + " : " + show(a.sub) + "\n";
  return out;
}

}  // namespace sct
