#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpoly/root_system.hpp"

namespace hpoly {

// Caps for explicit enumeration.  Sizes are known in closed form before any
// breadth-first search starts, so a cap violation is reported up front.
struct EnumLimits {
  std::uint64_t max_elements = 10'000'000;
};

// Element of the Weyl group, stored as its action on the root lattice: the
// matrix column j holds the simple-root coordinates of w(a_j).  Length (the
// number of positive roots sent negative) is cached.  Equality and ordering
// look only at the matrix and type, never at identity of the context object.
class WeylElt {
 public:
  WeylElt() = default;

  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int s);  // s is 1-based

  // Group product acting as composition: (u*v)(x) = u(v(x)).  Length is
  // recomputed from the action.  Both factors must share a root system type.
  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;

  int length() const { return len_; }
  int rank() const { return rank_; }
  const RootSystem& root_system() const { return rs_; }
  bool is_identity() const { return len_ == 0; }

  RootVec apply(const RootVec& root) const;
  RootVec image_of_simple(int s) const;  // column s
  // True when w(a_s) is a negative root, i.e. s is a right descent.
  bool sends_simple_negative(int s) const;
  // True when w(a_j) > 0 for every j in J, i.e. w is the minimal-length
  // representative of its coset w W_J.
  bool in_quotient(const NodeSet& J) const;

  // Canonical reduced word, built by stripping the smallest right descent.
  std::vector<int> reduced_word() const;
  std::string word_str() const;  // "s2.s1"; identity prints "1"

  bool operator==(const WeylElt& o) const {
    return rank_ == o.rank_ && m_ == o.m_ &&
           (!rs_.valid() || !o.rs_.valid() || rs_.type() == o.rs_.type());
  }
  bool operator<(const WeylElt& o) const { return m_ < o.m_; }

  const std::vector<std::int8_t>& raw() const { return m_; }

 private:
  RootSystem rs_;
  std::vector<std::int8_t> m_;  // column-major rank x rank
  int rank_ = 0;
  int len_ = 0;
  friend struct WeylEltOps;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int8_t b : w.raw()) {
      h ^= static_cast<unsigned char>(b);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Minimal-length coset representatives W^J = {w : w(a_j) > 0 for all j in J},
// sorted by length and then by matrix bytes; the last element is the unique
// longest representative.
struct ParabolicQuotient {
  NodeSet J;
  std::vector<WeylElt> elements;
  std::vector<std::size_t> length_histogram;  // index = length

  std::size_t size() const { return elements.size(); }
  const WeylElt& longest() const { return elements.back(); }
};

// Breadth-first enumeration by left multiplication; every representative of
// length k+1 is s*v for a representative v of length k, so the layers are the
// length fibers.  The expected size |W|/|W_J| is checked against the cap
// before the search starts and against the actual count after it ends.
ParabolicQuotient enumerate_quotient(const RootSystem& rs, const NodeSet& J,
                                     const EnumLimits& limits = {});
// Whole group (J empty).
ParabolicQuotient enumerate_group(const RootSystem& rs,
                                  const EnumLimits& limits = {});
// The standard parabolic subgroup W_J as elements of W, sorted by length.
std::vector<WeylElt> enumerate_parabolic_subgroup(const RootSystem& rs,
                                                  const NodeSet& J,
                                                  const EnumLimits& limits = {});

// Minimal-length representative of the coset w W_J, reached by stripping
// right descents lying in J.
WeylElt min_coset_rep(const WeylElt& w, const NodeSet& J);

// Bruhat order on W, decided with the right-descent lifting property.
// Capped at rank 8: this is an oracle for cross-checks, not a bulk tool.
bool bruhat_leq(const WeylElt& u, const WeylElt& v);

// Product of simple reflections given by a word such as {2,1} for s2.s1.
WeylElt word_element(const RootSystem& rs, const std::vector<int>& word);

}  // namespace hpoly
