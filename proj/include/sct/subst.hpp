#pragma once

// Substitutions from callee parameters to terms over caller parameters:
// the labels on call-graph arcs, and the objects the saturation loop
// composes and compares.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sct/approx.hpp"
#include "sct/term.hpp"

namespace sct {

// Raised when normalization hits a shape clash (projection of a
// constructor, constructor removal on a tuple, out-of-range projection):
// the program under analysis is ill-formed.
struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Substitution {
  std::vector<std::string> params;  // domain, in callee parameter order
  std::vector<Term> images;

  const Term *lookup(const std::string &x) const;
  friend bool operator==(const Substitution &, const Substitution &) = default;
};

// t[s]: replace each parameter occurrence, renormalizing on the fly.
// Free variables not in s's domain are left alone.
Term apply(const Term &t, const Substitution &s, Clashes &cl);

// tau after sigma: x := tau(x)[sigma]  (plain composition, no collapsing)
Substitution compose(const Substitution &tau, const Substitution &sigma,
                     Clashes &cl);

// Collapsed composition: compose, then per-image collapse into T_{D,B} and
// drop dominated summands.  Empty result = the composition traverses an
// impossible constructor test; such arcs are discarded by the caller.
// Shape clashes throw AnalysisError.
std::optional<Substitution> ccomp(const Substitution &tau,
                                  const Substitution &sigma, Bounds b);

// pointwise preorder / compatibility (same domain expected)
bool subst_leq(const Substitution &a, const Substitution &b);
bool subst_compatible(const Substitution &a, const Substitution &b);

// "[x1 := t1; x2 := t2]"
std::string show(const Substitution &s);

}  // namespace sct
