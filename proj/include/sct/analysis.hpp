#pragma once

// Static analysis: turn a desugared recursive group into a control-flow
// graph whose arcs are labeled by substitutions over the caller's
// parameters.  Purely syntactic: it records pattern matching and
// projections along the path to each call site.

#include <map>
#include <string>
#include <vector>

#include "sct/ast.hpp"
#include "sct/subst.hpp"

namespace sct {

struct CallArc {
  std::string caller, callee;
  Substitution sub;  // callee parameters := terms over caller parameters
  Pos pos;           // call site, for reporting
  int site = 0;      // index of the call site within the group
};

struct CFG {
  std::vector<std::string> fns;  // in definition order
  std::map<std::string, std::vector<std::string>> params;
  std::vector<CallArc> arcs;
};

// One vertex per definition, one arc per syntactic call site targeting an
// in-group function; external calls contribute no arcs but their argument
// expressions are still traversed.  Arguments whose value is not evident
// from the pattern-matching context become "sum of <inf> x_i" over the
// caller's parameters.
CFG build_cfg(const Group &g, const Program &p);

// "f -> g : [x := t]" lines, one per arc
std::string show(const CFG &g);

}  // namespace sct
