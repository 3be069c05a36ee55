#pragma once

// Classic size-change graphs (arcs labeled "decreases" / "does not
// increase" per parameter) with a brute-force closure oracle, used to
// cross-check the checker at D=0, B=1.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gen.hpp"
#include "sct/analysis.hpp"

namespace sct::classic {

// entry for one target parameter: source parameter index + strictness
using Entry = std::optional<std::pair<int, bool>>;

struct Edge {
  int src = 0, dst = 0;
  std::vector<Entry> entries;  // one per dst parameter

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct Graph {
  std::vector<int> arity;  // per function
  std::vector<Edge> edges;
};

inline Graph random_graph(gen::Rng &r) {
  Graph g;
  int n = r.range(1, 3);
  for (int i = 0; i < n; ++i) g.arity.push_back(r.range(1, 3));
  int m = r.range(1, 5);
  for (int e = 0; e < m; ++e) {
    Edge ed;
    ed.src = r.upto(n - 1);
    ed.dst = r.upto(n - 1);
    for (int i = 0; i < g.arity[ed.dst]; ++i) {
      int roll = r.upto(9);
      if (roll < 4) {
        ed.entries.push_back(std::nullopt);
      } else {
        ed.entries.push_back(
            std::make_pair(r.upto(g.arity[ed.src] - 1), roll >= 7));
      }
    }
    g.edges.push_back(std::move(ed));
  }
  return g;
}

// b after a: follow a's edge, then b's
inline std::optional<Edge> compose(const Graph &g, const Edge &a,
                                   const Edge &b) {
  if (a.dst != b.src) return std::nullopt;
  Edge r;
  r.src = a.src;
  r.dst = b.dst;
  for (const Entry &e : b.entries) {
    if (!e) {
      r.entries.push_back(std::nullopt);
      continue;
    }
    const Entry &back = a.entries[e->first];
    if (!back) {
      r.entries.push_back(std::nullopt);
    } else {
      r.entries.push_back(
          std::make_pair(back->first, back->second || e->second));
    }
  }
  return r;
}

// Lee–Jones–Ben-Amram: terminating iff every idempotent loop in the
// composition closure strictly decreases some parameter of itself
inline bool oracle_terminating(const Graph &g) {
  std::vector<Edge> closure = g.edges;
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Edge> add;
    for (const Edge &a : closure)
      for (const Edge &b : closure)
        if (auto c = compose(g, a, b))
          if (!std::binary_search(closure.begin(), closure.end(), *c))
            add.push_back(std::move(*c));
    if (!add.empty()) {
      grew = true;
      closure.insert(closure.end(), add.begin(), add.end());
      std::sort(closure.begin(), closure.end());
      closure.erase(std::unique(closure.begin(), closure.end()),
                    closure.end());
    }
  }
  for (const Edge &e : closure) {
    if (e.src != e.dst) continue;
    auto sq = compose(g, e, e);
    if (!sq || !(*sq == e)) continue;  // not idempotent
    bool dec = false;
    for (size_t i = 0; i < e.entries.size() && !dec; ++i)
      dec = e.entries[i] && e.entries[i]->first == (int)i &&
            e.entries[i]->second;
    if (!dec) return false;
  }
  return true;
}

inline std::string fn_name(int i) { return "f" + std::to_string(i); }
inline std::string param_name(int i) { return "x" + std::to_string(i + 1); }

// the same graph as a CFG for the checker
inline CFG to_cfg(const Graph &g) {
  CFG cfg;
  for (size_t i = 0; i < g.arity.size(); ++i) {
    cfg.fns.push_back(fn_name((int)i));
    std::vector<std::string> ps;
    for (int j = 0; j < g.arity[i]; ++j) ps.push_back(param_name(j));
    cfg.params[fn_name((int)i)] = ps;
  }
  for (const Edge &e : g.edges) {
    CallArc a;
    a.caller = fn_name(e.src);
    a.callee = fn_name(e.dst);
    a.sub.params = cfg.params[a.callee];
    for (const Entry &en : e.entries) {
      if (en) {
        a.sub.images.push_back(t_approx(Weight(en->second ? -1 : 0),
                                        t_var(param_name(en->first))));
      } else {
        std::vector<Term> parts;
        for (int j = 0; j < g.arity[e.src]; ++j)
          parts.push_back(t_approx(Weight::infinity(), t_var(param_name(j))));
        a.sub.images.push_back(t_sum(parts));
      }
    }
    cfg.arcs.push_back(std::move(a));
  }
  return cfg;
}

}  // namespace sct::classic
