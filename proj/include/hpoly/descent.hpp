#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hpoly/intpoly.hpp"
#include "hpoly/weyl.hpp"

namespace hpoly {

// Descent system of a proper subset J: the reflections S^J = union over
// s outside J of the classes S^J_s = (W_J s W_J) intersected with W^J, each
// obtained by projecting {u*s : u in W_J} to minimal coset representatives.
// delta(s) weights a class by 1 + the size of the unique component of J not
// commuting with s (1 when J centralizes s).  Building fails with
// delta_undefined_error when some s touches two or more components.
struct DescentSystem {
  RootSystem rs;
  NodeSet J;
  ParabolicQuotient quotient;               // W^J
  std::map<int, std::vector<WeylElt>> classes;  // s -> S^J_s, sorted
  std::map<int, int> delta;                 // s -> delta(s)
  std::unordered_map<WeylElt, int, WeylEltHash> class_of;  // r -> s

  std::size_t reflection_count() const;  // |S^J|
};

DescentSystem build_descent_system(const RootSystem& rs, const NodeSet& J,
                                   const EnumLimits& limits = {});

enum class Step { ascent, descent };

// w < w*r is decided through the projection: descent iff the minimal coset
// representative of w*r is shorter than w.  The two lengths never tie for
// r in S^J, so the comparison is total.
Step ascent_or_descent(const DescentSystem& ds, const WeylElt& w,
                       const WeylElt& r);

// Ascent statistics nu over W^J, tabulated in the element order of
// ds.quotient.elements.
struct AugmentedPoset {
  // Per element: for each class s, the count nu_s(w) of ascents in S^J_s.
  std::vector<std::map<int, int>> nu_s;
  std::vector<int> nu_plain;     // sum over s of nu_s(w)
  std::vector<int> nu_weighted;  // sum over s of delta(s) * nu_s(w)
  // Per element: the ascent set as (class node, index into the class).
  std::vector<std::vector<std::pair<int, int>>> ascents;
};

AugmentedPoset nu_stats(const DescentSystem& ds);

// Two-variable ascent generating function, defined when S minus J has exactly
// two nodes: t1 tracks the smaller node's class, t2 the larger one's.
IntPoly2 two_variable_euler(const DescentSystem& ds);

}  // namespace hpoly
