#pragma once

// The size-change criterion: saturate the control-flow graph into its
// graph of paths, find the coherent loops, and require a strictly
// decreasing parameter on each.

#include <optional>
#include <string>
#include <vector>

#include "sct/analysis.hpp"
#include "sct/subst.hpp"

namespace sct {

enum class Verdict { Terminating, Unknown };

// Whether saturation keeps only maximal arcs (sound, smaller graphs) or
// every distinct arc (matches hand-computed closures arc for arc).  The
// verdict is the same either way.
enum class Subsumption { Off, Full };

struct Arc {
  std::string src, dst;
  Substitution sub;
};

struct Decrease {
  std::string param;
  std::vector<Step> steps;  // destructor branch applied to the parameter
  Weight drop;              // < 0
};

struct LoopReport {
  std::string fn;
  Substitution sub;
  std::optional<Decrease> witness;  // empty: loop is not decreasing
};

struct GroupReport {
  std::vector<std::string> fns;
  Bounds bounds;
  std::vector<Arc> initial;  // the control-flow graph
  std::vector<Arc> paths;    // its saturation
  std::vector<LoopReport> loops;  // the coherent loops
  Verdict verdict = Verdict::Unknown;
};

// graph of paths: close the arc set under (original arc) o (path),
// collapsing every composite into T_{D,B}; compositions that cross an
// impossible constructor test are dropped
std::vector<Arc> saturate(const CFG &g, Bounds b, Subsumption mode);

// a self-loop tau is coherent when tau is compatible with tau o tau
bool coherent(const Arc &loop, Bounds b);

// smallest decreasing parameter of a loop: the first parameter (in
// order), with the shortest (then lexicographically least) destructor
// branch d such that 0 != <0>d x [tau] <= <w> <0>d x for some w < 0.
// The reported drop is the best such w, floored at -2B.
std::optional<Decrease> find_decreasing(const Arc &loop, Bounds b);

GroupReport check(const CFG &g, Bounds b,
                  Subsumption mode = Subsumption::Full);

struct SweepEntry {
  Bounds bounds;
  Verdict verdict;
};

// run check over a grid of bounds
std::vector<SweepEntry> sweep(const CFG &g, const std::vector<Bounds> &grid,
                              Subsumption mode = Subsumption::Full);

std::string show(Verdict v);

}  // namespace sct
