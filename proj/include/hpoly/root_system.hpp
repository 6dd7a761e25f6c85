#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hpoly/bigint.hpp"
#include "hpoly/errors.hpp"

namespace hpoly {

// Simple reflections are named s1..sn; a NodeSet holds their 1-based indices.
using NodeSet = std::set<int>;
using RootVec = std::vector<int>;  // coordinates in the simple-root basis
using IntMatrix = std::vector<std::vector<int>>;

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

// A finite crystallographic type "Xn".  Admissible ranks: A n>=1, B n>=2,
// C n>=3 (C2 would duplicate B2), D n>=4, E n in {6,7,8}, F n=4, G n=2.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  static CartanType parse(const std::string& text);  // "A5", "E7", ...
  bool admissible() const;
  void validate() const;  // throws invalid_input_error when inadmissible
  std::string str() const;

  BigInt group_order() const;        // |W|
  int positive_root_count() const;   // |Phi^+|

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

// Edge of the Coxeter-Dynkin graph.  multiplicity is 1 (single), 2 (double)
// or 3 (triple); short_node is the end carrying the shorter root for
// multiplicity >= 2, and 0 for simply-laced edges.
struct DynkinEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
  int short_node = 0;
};

class DynkinGraph {
 public:
  DynkinGraph() = default;
  DynkinGraph(int rank, std::vector<DynkinEdge> edges);

  int rank() const { return rank_; }
  const std::vector<DynkinEdge>& edges() const { return edges_; }
  int bond(int i, int j) const;  // multiplicity, 0 when not adjacent
  bool adjacent(int i, int j) const { return bond(i, j) != 0; }
  std::vector<int> neighbors(int i) const;

 private:
  int rank_ = 0;
  std::vector<DynkinEdge> edges_;
  std::vector<int> bond_;  // rank x rank multiplicity table
};

// Immutable root-system context shared by Weyl-group elements.  Cheap to copy
// (shared handle).  Construction is deterministic, so two instances of the
// same type are structurally identical.
class RootSystem {
 public:
  RootSystem() = default;

  const CartanType& type() const { return d_->type; }
  int rank() const { return d_->type.rank; }
  const IntMatrix& cartan() const { return d_->cartan; }
  const std::vector<RootVec>& positive_roots() const { return d_->positive; }
  const DynkinGraph& dynkin() const { return d_->graph; }
  NodeSet all_nodes() const;

  // Image of a root (simple-root coordinates) under the reflection s_i.
  RootVec reflect(int s, const RootVec& root) const;

  bool same_as(const RootSystem& other) const {
    return d_ && other.d_ && type() == other.type();
  }
  bool valid() const { return static_cast<bool>(d_); }

 private:
  struct Data {
    CartanType type;
    IntMatrix cartan;
    std::vector<RootVec> positive;  // sorted by height, then lexicographic
    DynkinGraph graph;
  };
  std::shared_ptr<const Data> d_;
  friend RootSystem build_root_system(CartanType);
};

// Builds the Cartan matrix for the type, closes the simple roots under the
// simple reflections, and verifies the positive-root count against the
// classical value.
RootSystem build_root_system(CartanType type);

// Connected component of the subdiagram spanned by J, with its induced type.
struct Component {
  NodeSet nodes;
  CartanType type;
};

// Partition of J into connected components of the induced subdiagram,
// ordered by smallest node.
std::vector<Component> components(const DynkinGraph& g, const NodeSet& J);

// |W_J| = product of the component group orders.
BigInt parabolic_order(const DynkinGraph& g, const NodeSet& J);

// Parses "s1,s3,s4" (empty string -> empty set); validates against the rank.
NodeSet parse_node_set(const std::string& text, int rank);
std::string node_set_str(const NodeSet& J);  // "{s1,s3}"

}  // namespace hpoly
