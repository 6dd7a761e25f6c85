#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hpoly/intpoly.hpp"

namespace hpoly {

// 0/1 matrix with at most one 1 in every row and every column (a partial
// permutation matrix).  These index the double cosets of the invertible
// upper-triangular group acting on both sides of the full matrix monoid.
struct RookMatrix {
  int n = 0;
  std::vector<std::int8_t> a;  // row-major

  static RookMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  int rank() const;            // number of ones
  std::string str() const;     // "[[0,1],[0,0]]"

  bool operator==(const RookMatrix& o) const { return n == o.n && a == o.a; }
};

// All rook matrices of size n (n <= 4), sorted by decreasing rank and then
// by decreasing entry list, so the identity comes first and zero last.
std::vector<RookMatrix> enumerate_rook_matrices(int n);

// Size of the two-sided orbit B x B over the field with q elements, where B
// is the group of invertible upper-triangular matrices.  Supports n <= 3 and
// q in {2, 3}.
std::uint64_t orbit_size(const RookMatrix& x, int q);

// Orbit sizes of one representative, with the exponents (a, b) of the unique
// fit size = (q-1)^a * q^b when both q = 2 and q = 3 were requested.
struct OrbitProfile {
  RookMatrix rep;
  int rank = 0;
  std::map<int, std::uint64_t> orbit_size;  // q -> |B rep B|
  int a = -1;
  int b = -1;
};

std::vector<OrbitProfile> orbit_profiles(int n, std::vector<int> qs);

// Recover (a, b) with size(q) = (q-1)^a * q^b from sizes at q = 2 and q = 3,
// verifying the fit against every provided size.
std::pair<int, int> fit_ab(const std::map<int, std::uint64_t>& size_by_q);

// Full orbit census at q = 2 and q = 3: per-representative profiles plus the
// polynomial sum over orbits of (t-1)^a t^b.  Verifies that the orbits are
// disjoint and cover all q^(n^2) matrices before returning.
struct MonoidOrbitReport {
  int n = 0;
  std::vector<OrbitProfile> profiles;
  IntPoly h;
};

MonoidOrbitReport monoid_orbits(int n);
IntPoly monoid_h(int n);

}  // namespace hpoly
