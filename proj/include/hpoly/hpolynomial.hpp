#pragma once

#include <utility>
#include <vector>

#include "hpoly/descent.hpp"
#include "hpoly/intpoly.hpp"
#include "hpoly/smooth.hpp"

namespace hpoly {

// Result of an H-polynomial computation that factors as
// (cell-dimension generating factor) * (length generating factor).
struct HPolyReport {
  IntPoly h;
  IntPoly poincare;       // h with t -> t^2
  IntPoly factor_cells;   // sum over cells of t^{codim + weighted ascents}
  IntPoly factor_base;    // length generating polynomial of the base quotient
  BigInt euler_characteristic = 0;  // h(1)
  int dimension = 0;                // deg h
  bool has_negative_coefficient = false;
};

// Length generating polynomial of W^J (the whole group when J is empty).
IntPoly length_poly(const RootSystem& rs, const NodeSet& J = {},
                    const EnumLimits& limits = {});

// Ascent generating polynomial over all permutations of {1..n}.
IntPoly eulerian(int n, int max_n = 12);

// h-polynomial of the (n-1)-permutahedron, assembled by enumerating every
// pair (permutation, subset of its ascent set) and summing (t-1)^{|subset|}.
IntPoly permutahedron_h(int n, int max_n = 10);

// Poincare polynomial sum over W^J of t^{2 nu(w)}; requires a
// combinatorially smooth J.
IntPoly toric_poincare(const RootSystem& rs, const NodeSet& J,
                       const EnumLimits& limits = {});

// H-polynomial of the simple embedding attached to a combinatorially smooth
// proper subset J:
//   [ sum over w in W^J of t^{l(w0)-l(w)+weighted nu(w)} ] * [ length poly ].
HPolyReport simple_embedding_h(const RootSystem& rs, const NodeSet& J,
                               const EnumLimits& limits = {});

// H-polynomial of the wonderful compactification:
//   [ sum over u in W of t^{l(w0)-l(u)+|right ascent set of u|} ] *
//   [ length poly of W ].
HPolyReport wonderful_h(const RootSystem& rs, const EnumLimits& limits = {});

// Closed forms for embeddings of a rank-two group, indexed by the shape of
// the closed-orbit fan.  longest_length N is 3, 4 or 6 (the rank-two types);
// closed_orbits k counts the closed orbits (k >= 1 for case I, k >= 0 else).
enum class RankTwoCase { I, II, III };
HPolyReport rank2_h(RankTwoCase c, int longest_length, int closed_orbits);

// Sum over cells of (t-1)^a t^b for the given (a, b) list.
IntPoly hpoly_from_cells(const std::vector<std::pair<int, int>>& cells);

// Uniform entry point used by the CLI.
struct EmbeddingSpec {
  enum class Kind { simple, wonderful, rank_two };
  Kind kind = Kind::wonderful;
  CartanType type;         // simple, wonderful
  NodeSet J;               // simple
  RankTwoCase rt_case = RankTwoCase::I;
  int longest_length = 3;  // rank_two
  int closed_orbits = 1;   // rank_two
};
HPolyReport embedding_h(const EmbeddingSpec& spec,
                        const EnumLimits& limits = {});
// The rank-two type implied by the longest length (3 -> A2, 4 -> B2, 6 -> G2).
CartanType rank_two_type(int longest_length);

}  // namespace hpoly
