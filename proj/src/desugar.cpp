#include <algorithm>

#include "sct/ast.hpp"

namespace sct {

namespace {

bool pattern_binds(const Pattern &p, const std::string &x) {
  switch (p.k) {
    case Pattern::K::Var:
      return p.name == x;
    case Pattern::K::Ctor:
    case Pattern::K::Tuple:
      return std::any_of(p.sub.begin(), p.sub.end(), [&](const Pattern &s) {
        return pattern_binds(s, x);
      });
    case Pattern::K::Wild:
      return false;
  }
  return false;
}

// e[x := r], respecting shadowing by match patterns
Expr subst(const Expr &e, const std::string &x, const Expr &r) {
  switch (e.k) {
    case Expr::K::Var:
      return e.name == x ? r : e;
    case Expr::K::Match: {
      Expr m = e;
      m.sub[0] = subst(e.sub[0], x, r);
      for (size_t b = 0; b < e.pats.size(); ++b)
        if (!pattern_binds(e.pats[b], x))
          m.sub[b + 1] = subst(e.sub[b + 1], x, r);
      return m;
    }
    default: {
      Expr c = e;
      for (Expr &s : c.sub) s = subst(s, x, r);
      return c;
    }
  }
}

// i-th component of e; peeks through literal tuples so that matching on
// '(x1,x2)' does not duplicate the components
Expr component(const Expr &e, int i) {
  if (e.k == Expr::K::Tuple) return e.sub[i - 1];
  return Expr::proj(i, e, e.pos);
}

bool irrefutable(const Pattern &p) {
  return p.k == Pattern::K::Var || p.k == Pattern::K::Wild;
}

struct Row {
  std::vector<Pattern> ps;
  Expr body;
};

Expr desugar_expr(const Expr &e, int &fresh);

// Pattern-matrix compilation: one occurrence (an expression) per column.
// Emits core matches whose branch patterns are C[$k] or '_'.
Expr compile(std::vector<Expr> occ, std::vector<Row> rows, int &fresh,
             Pos pos) {
  if (rows.empty()) return Expr::tuple({}, pos);  // unreachable if exhaustive

  // leftmost refutable column of the first row
  size_t j = 0;
  while (j < rows[0].ps.size() && irrefutable(rows[0].ps[j])) ++j;

  if (j == rows[0].ps.size()) {
    // first row matches outright: bind its variables and take its body
    Expr body = rows[0].body;
    for (size_t c = 0; c < occ.size(); ++c)
      if (rows[0].ps[c].k == Pattern::K::Var)
        body = subst(body, rows[0].ps[c].name, occ[c]);
    return desugar_expr(body, fresh);
  }

  if (rows[0].ps[j].k == Pattern::K::Tuple) {
    // tuples are never tested at runtime: split the column into components
    size_t n = rows[0].ps[j].sub.size();
    std::vector<Expr> occ2(occ.begin(), occ.begin() + j);
    for (size_t c = 1; c <= n; ++c)
      occ2.push_back(component(occ[j], (int)c));
    occ2.insert(occ2.end(), occ.begin() + j + 1, occ.end());
    std::vector<Row> rows2;
    for (Row &row : rows) {
      const Pattern &p = row.ps[j];
      Row r2;
      r2.body = row.body;
      r2.ps.assign(row.ps.begin(), row.ps.begin() + j);
      if (p.k == Pattern::K::Tuple) {
        if (p.sub.size() != n) continue;  // ill-typed row: dead
        r2.ps.insert(r2.ps.end(), p.sub.begin(), p.sub.end());
      } else if (p.k == Pattern::K::Ctor) {
        continue;  // ill-typed row: dead
      } else {
        if (p.k == Pattern::K::Var) r2.body = subst(r2.body, p.name, occ[j]);
        for (size_t c = 0; c < n; ++c) r2.ps.push_back(Pattern::wild(p.pos));
      }
      r2.ps.insert(r2.ps.end(), row.ps.begin() + j + 1, row.ps.end());
      rows2.push_back(std::move(r2));
    }
    return compile(std::move(occ2), std::move(rows2), fresh, pos);
  }

  // constructor column: group by constructor, in order of first occurrence
  std::vector<std::string> ctors;
  bool has_default = false;
  for (const Row &row : rows) {
    const Pattern &p = row.ps[j];
    if (p.k == Pattern::K::Ctor) {
      if (std::find(ctors.begin(), ctors.end(), p.name) == ctors.end())
        ctors.push_back(p.name);
    } else if (irrefutable(p)) {
      has_default = true;
    }
  }

  Expr m;
  m.k = Expr::K::Match;
  m.pos = pos;
  m.sub.push_back(desugar_expr(occ[j], fresh));
  for (const std::string &c : ctors) {
    std::string y = "$" + std::to_string(fresh++);
    std::vector<Expr> occ2 = occ;
    occ2[j] = Expr::var(y, pos);
    std::vector<Row> rows2;
    for (const Row &row : rows) {
      const Pattern &p = row.ps[j];
      if (p.k == Pattern::K::Ctor) {
        if (p.name != c) continue;
        Row r2 = row;
        r2.ps[j] = p.sub[0];
        rows2.push_back(std::move(r2));
      } else if (irrefutable(p)) {
        Row r2 = row;
        if (p.k == Pattern::K::Var) {
          r2.body = subst(r2.body, p.name, occ[j]);
          r2.ps[j] = Pattern::wild(p.pos);
        }
        rows2.push_back(std::move(r2));
      }
    }
    m.pats.push_back(
        Pattern::ctor(c, Pattern::var(y, pos), pos));
    m.sub.push_back(compile(std::move(occ2), std::move(rows2), fresh, pos));
  }
  if (has_default) {
    std::vector<Row> rows2;
    for (const Row &row : rows)
      if (irrefutable(row.ps[j])) rows2.push_back(row);
    m.pats.push_back(Pattern::wild(pos));
    m.sub.push_back(compile(occ, std::move(rows2), fresh, pos));
  }
  return m;
}

Expr desugar_expr(const Expr &e, int &fresh) {
  if (e.k == Expr::K::Match) {
    std::vector<Row> rows;
    for (size_t b = 0; b < e.pats.size(); ++b)
      rows.push_back(Row{{e.pats[b]}, e.sub[b + 1]});
    return compile({e.sub[0]}, std::move(rows), fresh, e.pos);
  }
  Expr c = e;
  for (Expr &s : c.sub) s = desugar_expr(s, fresh);
  return c;
}

}  // namespace

Program desugar(const Program &p) {
  Program out = p;
  for (Group &g : out.groups)
    for (Definition &d : g.defs) {
      int fresh = 0;
      d.body = desugar_expr(d.body, fresh);
    }
  return out;
}

// ------------------------------------------------------------- validation

namespace {

void check_expr(const Expr &e, const std::vector<std::string> &fns,
                std::vector<Diagnostic> &out) {
  switch (e.k) {
    case Expr::K::Var:
      if (std::find(fns.begin(), fns.end(), e.name) != fns.end())
        out.push_back({e.pos, "function '" + e.name +
                                  "' used as a value (not fully applied)"});
      return;
    case Expr::K::Proj:
      if (e.sub[0].k == Expr::K::Ctor)
        out.push_back({e.pos, "projection of a constructor"});
      if (e.sub[0].k == Expr::K::Tuple &&
          (size_t)e.index > e.sub[0].sub.size())
        out.push_back({e.pos, "projection ." + std::to_string(e.index) +
                                  " out of range for a " +
                                  std::to_string(e.sub[0].sub.size()) +
                                  "-tuple"});
      break;
    case Expr::K::Match:
      if (e.sub[0].k == Expr::K::Tuple)
        out.push_back({e.pos, "match on a tuple expression"});
      break;
    default:
      break;
  }
  for (const Expr &s : e.sub) check_expr(s, fns, out);
}

}  // namespace

std::vector<Diagnostic> validate(const Program &p) {
  std::vector<Diagnostic> out;
  for (const Group &g : p.groups) {
    std::vector<std::string> fns;
    for (const External &e : p.externals) fns.push_back(e.name);
    for (const Definition &d : g.defs) fns.push_back(d.name);
    for (const Definition &d : g.defs) check_expr(d.body, fns, out);
  }
  return out;
}

}  // namespace sct
