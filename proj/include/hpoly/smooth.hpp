#pragma once

#include <string>
#include <vector>

#include "hpoly/root_system.hpp"

namespace hpoly {

// One structural reason a subset J fails the smoothness test.
struct SmoothnessViolation {
  enum class Kind {
    // Some s outside J fails to commute with two or more nodes of J
    // (equivalently, with two or more components).
    nonunique_noncommuting_node,
    // The component met by s is not a simply-laced chain.
    component_not_a_chain,
    // The unique node of J not commuting with s is interior to its chain.
    attachment_not_terminal,
    // A component of J is met by two or more nodes outside J.
    component_multiply_attached,
    // A component of J is met by no node outside J.
    component_unattached,
  };
  Kind kind;
  int s = 0;          // the outside node involved, when applicable
  NodeSet component;  // the component involved, when applicable
  std::string message;
};

struct SmoothnessVerdict {
  bool smooth = false;
  std::vector<SmoothnessViolation> violations;
  std::string summary() const;  // one line per violation
};

// Diagram-combinatorial smoothness test for a proper subset J:
//  (a) every s outside J that fails to centralize J meets a unique node t,
//      lying at the end of a component that is a simply-laced chain;
//  (b) every component of J is met by exactly one s outside J.
// The empty set passes vacuously.
SmoothnessVerdict is_combinatorially_smooth(const RootSystem& rs,
                                            const NodeSet& J);

// All proper subsets J with a positive verdict, sorted by size then
// lexicographically.
std::vector<NodeSet> enumerate_smooth_subsets(const RootSystem& rs);

}  // namespace hpoly
