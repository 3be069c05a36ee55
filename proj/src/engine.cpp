#include "sct/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sct {

namespace {

bool same_arc(const Arc &a, const Arc &b) {
  return a.src == b.src && a.dst == b.dst && a.sub == b.sub;
}

}  // namespace

std::vector<Arc> saturate(const CFG &g, Bounds b, Subsumption mode) {
  std::vector<Arc> arcs;
  for (const CallArc &a : g.arcs) arcs.push_back({a.caller, a.callee, a.sub});
  const size_t n_orig = arcs.size();

  std::deque<size_t> todo;
  for (size_t i = 0; i < arcs.size(); ++i) todo.push_back(i);
  std::vector<bool> live(arcs.size(), true);

  while (!todo.empty()) {
    size_t ti = todo.front();
    todo.pop_front();
    if (!live[ti]) continue;
    // extend the path arcs[ti] by every original arc leaving its endpoint
    for (size_t oi = 0; oi < n_orig; ++oi) {
      if (arcs[oi].src != arcs[ti].dst) continue;
      if (!live[ti]) break;  // evicted by an arc added in this loop
      auto composed = ccomp(arcs[oi].sub, arcs[ti].sub, b);
      if (!composed) continue;  // crosses an impossible constructor test
      Arc cand{arcs[ti].src, arcs[oi].dst, std::move(*composed)};

      bool skip = false;
      for (size_t k = 0; k < arcs.size() && !skip; ++k) {
        if (!live[k] || arcs[k].src != cand.src || arcs[k].dst != cand.dst)
          continue;
        if (mode == Subsumption::Off) {
          skip = same_arc(arcs[k], cand);
        } else if (subst_leq(cand.sub, arcs[k].sub)) {
          skip = true;  // dominated by (or equal to) a retained arc
        }
      }
      if (skip) continue;
      if (mode == Subsumption::Full) {
        // evict retained path arcs strictly below the newcomer
        for (size_t k = n_orig; k < arcs.size(); ++k)
          if (live[k] && arcs[k].src == cand.src &&
              arcs[k].dst == cand.dst && subst_leq(arcs[k].sub, cand.sub))
            live[k] = false;
      }
      arcs.push_back(std::move(cand));
      live.push_back(true);
      todo.push_back(arcs.size() - 1);
    }
  }

  std::vector<Arc> out;
  for (size_t i = 0; i < arcs.size(); ++i)
    if (live[i]) out.push_back(std::move(arcs[i]));
  return out;
}

bool coherent(const Arc &loop, Bounds b) {
  auto twice = ccomp(loop.sub, loop.sub, b);
  if (!twice) return false;
  return subst_compatible(loop.sub, *twice);
}

namespace {

// all candidate destructor branches for one parameter: the empty branch
// plus every suffix of a destructor sequence occurring in the image
std::vector<std::vector<Step>> candidates(const Term &image) {
  std::vector<std::vector<Step>> out{{}};
  for (const Simple &s : image.sum) {
    // leaves of the constructor/tuple spine
    std::vector<const Simple *> stack{&s};
    while (!stack.empty()) {
      const Simple *cur = stack.back();
      stack.pop_back();
      switch (cur->k) {
        case Simple::K::Ctor:
        case Simple::K::Tuple:
          for (const Simple &c : cur->sub) stack.push_back(&c);
          break;
        case Simple::K::Branch:
        case Simple::K::Approx:
          for (size_t l = 1; l <= cur->d.steps.size(); ++l)
            out.push_back({cur->d.steps.end() - l, cur->d.steps.end()});
          break;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Step> &a, const std::vector<Step> &b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.begin(), a.end(),
                                                  b.begin(), b.end(),
                                                  std::less<Step>());
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// best (smallest) w with <0>d x [tau] <= <w> <0>d x, if any
std::optional<Weight> decrease_of(const std::vector<Step> &d,
                                  const std::string &x, const Term &image) {
  Clashes cl;  // exploratory: clashes just annihilate summands
  Term lhs = t_approx(Weight(0), t_dseq(d, image, cl));
  if (lhs.is_zero()) return std::nullopt;
  Weight best(std::numeric_limits<int64_t>::min());
  for (const Simple &s : lhs.sum) {
    // every summand is <w'>b after the <0> lift
    if (s.d.var != x || s.w.inf) return std::nullopt;
    DSeq dx{d, x};
    if (!is_suffix(dx, s.d)) return std::nullopt;
    Weight need(s.w.v + (int64_t)d.size() - (int64_t)s.d.len());
    best = std::max(best, need);
  }
  if (best >= Weight(0)) return std::nullopt;
  return best;
}

}  // namespace

std::optional<Decrease> find_decreasing(const Arc &loop, Bounds b) {
  for (size_t i = 0; i < loop.sub.params.size(); ++i) {
    const std::string &x = loop.sub.params[i];
    const Term &image = loop.sub.images[i];
    // the candidate set is closed under suffixes and ordered by length,
    // so the first branch that passes is minimal
    for (const std::vector<Step> &d : candidates(image)) {
      auto w = decrease_of(d, x, image);
      if (w) return Decrease{x, d, std::max(*w, Weight(-2 * (int64_t)b.B))};
    }
  }
  return std::nullopt;
}

GroupReport check(const CFG &g, Bounds b, Subsumption mode) {
  GroupReport r;
  r.fns = g.fns;
  r.bounds = b;
  for (const CallArc &a : g.arcs) r.initial.push_back({a.caller, a.callee, a.sub});
  r.paths = saturate(g, b, mode);
  r.verdict = Verdict::Terminating;
  for (const Arc &a : r.paths) {
    if (a.src != a.dst || !coherent(a, b)) continue;
    LoopReport lr;
    lr.fn = a.src;
    lr.sub = a.sub;
    lr.witness = find_decreasing(a, b);
    if (!lr.witness) r.verdict = Verdict::Unknown;
    r.loops.push_back(std::move(lr));
  }
  return r;
}

std::vector<SweepEntry> sweep(const CFG &g, const std::vector<Bounds> &grid,
                              Subsumption mode) {
  std::vector<SweepEntry> out;
  for (Bounds b : grid) out.push_back({b, check(g, b, mode).verdict});
  return out;
}

std::string show(Verdict v) {
  return v == Verdict::Terminating ? "Terminating" : "Unknown";
}

}  // namespace sct
