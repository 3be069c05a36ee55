#include "sct/term.hpp"

#include <algorithm>

namespace sct {

std::string show(Weight w) {
  if (w.inf) return "inf";
  return std::to_string(w.v);
}

bool is_suffix(const DSeq &suf, const DSeq &of) {
  if (suf.var != of.var) return false;
  if (suf.len() > of.len()) return false;
  return std::equal(suf.steps.rbegin(), suf.steps.rend(), of.steps.rbegin());
}

// ----------------------------------------------------------- construction

Term t_zero() { return {}; }

Term t_simple(Simple s) {
  Term t;
  t.sum.push_back(std::move(s));
  return t;
}

Term t_var(const std::string &x) {
  return t_simple(Simple::mk_branch(DSeq{{}, x}));
}

Term t_unit() { return t_simple(Simple::mk_branch(DSeq{})); }

static void canon(Term &t) {
  std::sort(t.sum.begin(), t.sum.end());
  t.sum.erase(std::unique(t.sum.begin(), t.sum.end()), t.sum.end());
}

Term t_sum(const std::vector<Term> &parts) {
  Term r;
  for (const Term &p : parts)
    r.sum.insert(r.sum.end(), p.sum.begin(), p.sum.end());
  canon(r);
  return r;
}

Term t_ctor(const std::string &c, const Term &t) {
  Term r;  // C 0 = 0 and C(t1+t2) = C t1 + C t2
  for (const Simple &s : t.sum) r.sum.push_back(Simple::mk_ctor(c, s));
  canon(r);
  return r;
}

Term t_tuple(const std::vector<Term> &parts) {
  if (parts.empty()) return t_unit();
  // n-linearity: distribute the sum in every component
  std::vector<std::vector<Simple>> picked{{}};
  for (const Term &p : parts) {
    if (p.is_zero()) return t_zero();  // (...,0,...) = 0
    std::vector<std::vector<Simple>> next;
    for (const auto &acc : picked)
      for (const Simple &s : p.sum) {
        auto row = acc;
        row.push_back(s);
        next.push_back(std::move(row));
      }
    picked = std::move(next);
  }
  Term r;
  for (auto &row : picked) r.sum.push_back(Simple::mk_tuple(std::move(row)));
  canon(r);
  return r;
}

Term t_approx(Weight w, const Term &t) {
  Term r;
  for (const Simple &s : t.sum) {
    switch (s.k) {
      case Simple::K::Ctor:  // <w> C t -> <w+1> t
        r = t_sum({r, t_approx(w + Weight(1), t_simple(s.sub[0]))});
        break;
      case Simple::K::Tuple: {  // <w>(t1,..,tn) -> sum <w+1> ti   (n>0)
        for (const Simple &c : s.sub)
          r = t_sum({r, t_approx(w + Weight(1), t_simple(c))});
        break;
      }
      case Simple::K::Branch:
        r.sum.push_back(Simple::mk_approx(w, s.d));
        break;
      case Simple::K::Approx:  // <w><v> t -> <w+v> t
        r.sum.push_back(Simple::mk_approx(w + s.w, s.d));
        break;
    }
  }
  canon(r);
  return r;
}

Term t_dtor(const std::string &c, const Term &t, Clashes &cl) {
  Term r;
  for (const Simple &s : t.sum) {
    switch (s.k) {
      case Simple::K::Ctor:
        if (s.ctor == c) {
          r = t_sum({r, t_simple(s.sub[0])});  // C- C t -> t
        } else {
          cl.ctor_clash = true;  // C- D t -> 0
        }
        break;
      case Simple::K::Tuple:
        cl.shape_clash = true;  // C-(t1,..,tn) -> 0
        break;
      case Simple::K::Branch:
        if (s.d.is_unit()) {
          cl.shape_clash = true;  // C- () -> 0
        } else {
          DSeq d = s.d;
          d.steps.insert(d.steps.begin(), Step::dtor(c));
          r.sum.push_back(Simple::mk_branch(std::move(d)));
        }
        break;
      case Simple::K::Approx:  // C- <w> t -> <w-1> t
        r.sum.push_back(Simple::mk_approx(s.w + Weight(-1), s.d));
        break;
    }
  }
  canon(r);
  return r;
}

Term t_proj(int i, const Term &t, Clashes &cl) {
  Term r;
  for (const Simple &s : t.sum) {
    switch (s.k) {
      case Simple::K::Ctor:
        cl.shape_clash = true;  // p_i C t -> 0
        break;
      case Simple::K::Tuple:
        if (i >= 1 && (size_t)i <= s.sub.size()) {
          r = t_sum({r, t_simple(s.sub[i - 1])});  // p_i(t1,..,tn) -> t_i
        } else {
          cl.shape_clash = true;  // out of range
        }
        break;
      case Simple::K::Branch:
        if (s.d.is_unit()) {
          cl.shape_clash = true;  // p_i () -> 0
        } else {
          DSeq d = s.d;
          d.steps.insert(d.steps.begin(), Step::proj(i));
          r.sum.push_back(Simple::mk_branch(std::move(d)));
        }
        break;
      case Simple::K::Approx:  // p_i <w> t -> <w-1> t
        r.sum.push_back(Simple::mk_approx(s.w + Weight(-1), s.d));
        break;
    }
  }
  canon(r);
  return r;
}

Term t_step(const Step &s, const Term &t, Clashes &cl) {
  return s.kind == Step::Proj ? t_proj(s.index, t, cl) : t_dtor(s.ctor, t, cl);
}

Term t_dseq(const std::vector<Step> &steps, const Term &t, Clashes &cl) {
  Term r = t;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    r = t_step(*it, r, cl);
  return r;
}

Term normalize(const Raw &t, Clashes &cl) {
  switch (t.k) {
    case Raw::K::Var:
      return t_var(t.name);
    case Raw::K::Zero:
      return t_zero();
    case Raw::K::Ctor:
      return t_ctor(t.name, normalize(t.sub[0], cl));
    case Raw::K::Tuple: {
      std::vector<Term> parts;
      for (const Raw &s : t.sub) parts.push_back(normalize(s, cl));
      return t_tuple(parts);
    }
    case Raw::K::Dtor:
      return t_dtor(t.name, normalize(t.sub[0], cl), cl);
    case Raw::K::Proj:
      return t_proj(t.index, normalize(t.sub[0], cl), cl);
    case Raw::K::Approx:
      return t_approx(t.w, normalize(t.sub[0], cl));
    case Raw::K::Sum: {
      std::vector<Term> parts;
      for (const Raw &s : t.sub) parts.push_back(normalize(s, cl));
      return t_sum(parts);
    }
  }
  return t_zero();
}

// ---------------------------------------------------------------- depths

static int depth_ctor(const Simple &s) {
  switch (s.k) {
    case Simple::K::Ctor:
      return 1 + depth_ctor(s.sub[0]);
    case Simple::K::Tuple: {
      int m = 0;
      for (const Simple &c : s.sub) m = std::max(m, 1 + depth_ctor(c));
      return m;
    }
    default:
      return 0;
  }
}

static int depth_dtor(const Simple &s) {
  switch (s.k) {
    case Simple::K::Ctor:
      return depth_dtor(s.sub[0]);
    case Simple::K::Tuple: {
      int m = 0;
      for (const Simple &c : s.sub) m = std::max(m, depth_dtor(c));
      return m;
    }
    default:
      return (int)s.d.len();
  }
}

int depth_ctor(const Term &t) {
  int m = 0;
  for (const Simple &s : t.sum) m = std::max(m, depth_ctor(s));
  return m;
}

int depth_dtor(const Term &t) {
  int m = 0;
  for (const Simple &s : t.sum) m = std::max(m, depth_dtor(s));
  return m;
}

static bool is_exact_value(const Simple &s) {
  switch (s.k) {
    case Simple::K::Ctor:
      return is_exact_value(s.sub[0]);
    case Simple::K::Tuple:
      return std::all_of(s.sub.begin(), s.sub.end(),
                         [](const Simple &c) { return is_exact_value(c); });
    case Simple::K::Branch:
      return s.d.is_unit();  // () only; variables/destructors are not values
    case Simple::K::Approx:
      return false;
  }
  return false;
}

bool is_exact_value(const Term &t) {
  return t.sum.size() == 1 && is_exact_value(t.sum[0]);
}

static int depth_value(const Simple &s) {
  switch (s.k) {
    case Simple::K::Ctor:
      return 1 + depth_value(s.sub[0]);
    case Simple::K::Tuple: {
      int m = 0;  // empty max = 0 (cannot occur: () is a Branch)
      for (const Simple &c : s.sub) m = std::max(m, 1 + depth_value(c));
      return m;
    }
    default:
      return 0;  // ()
  }
}

int depth_value(const Term &v) { return depth_value(v.sum[0]); }

// -------------------------------------------------------------- rendering

std::string show(const DSeq &d) {
  std::string out;
  for (const Step &s : d.steps) {
    if (s.kind == Step::Proj)
      out += "p" + std::to_string(s.index) + " ";
    else
      out += s.ctor + "- ";
  }
  out += d.is_unit() ? "()" : d.var;
  return out;
}

std::string show(const Simple &s) {
  switch (s.k) {
    case Simple::K::Ctor:
      return s.ctor + " " + show(s.sub[0]);
    case Simple::K::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < s.sub.size(); ++i) {
        if (i) out += ", ";
        out += show(s.sub[i]);
      }
      return out + ")";
    }
    case Simple::K::Branch:
      return show(s.d);
    case Simple::K::Approx:
      return "<" + show(s.w) + ">" + show(s.d);
  }
  return "?";
}

std::string show(const Term &t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < t.sum.size(); ++i) {
    if (i) out += " + ";
    out += show(t.sum[i]);
  }
  return out;
}

}  // namespace sct
