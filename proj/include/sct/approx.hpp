#pragma once

// The approximation preorder, the compatibility relation, and the two
// collapsing maps that squeeze terms into the finite domain T_{D,B}
// (constructor/destructor depth at most D, weights clamped into
// {-B,...,B-1,inf}).

#include "sct/term.hpp"

namespace sct {

struct Bounds {
  int D = 2;  // depth bound, >= 0
  int B = 1;  // weight bound, >= 1
};

// u approximated by v (u finer than v)
bool leq(const Term &u, const Term &v);

// some nonzero term is finer than both
bool compatible(const Term &u, const Term &v);

Weight clamp_weight(Weight w, int B);

// clamp every weight; structure unchanged
Term collapse_weight(const Term &t, int B);

// bound constructor and destructor depth by D
Term collapse_depth(const Term &t, int D);

// collapse_weight(collapse_depth(t, D), B); lands in T_{D,B}
Term collapse(const Term &t, Bounds b);

// the collapse used on arc labels during saturation: as collapse, except a
// bare destructor branch reached at constructor depth D folds at least one
// destructor into its weight (so composing with a destructor-only arc
// leaves a negative-weight trace instead of a weightless branch)
Term collapse_arc(const Term &t, Bounds b);

// drop summands approximated by another summand
Term max_summands(const Term &t);

}  // namespace sct
