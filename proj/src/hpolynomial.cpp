#include "hpoly/hpolynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/errors.hpp"
#include "hpoly/weyl.hpp"

namespace hpoly {

namespace {

IntPoly poly_from_histogram(const std::vector<std::size_t>& hist) {
  IntPoly p;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (hist[k] != 0) p += IntPoly::monomial(hist[k], static_cast<int>(k));
  }
  return p;
}

HPolyReport make_report(IntPoly factor_cells, IntPoly factor_base) {
  HPolyReport rep;
  rep.factor_cells = std::move(factor_cells);
  rep.factor_base = std::move(factor_base);
  rep.h = rep.factor_cells * rep.factor_base;
  rep.poincare = rep.h.substitute_square();
  rep.euler_characteristic = rep.h.eval(1);
  rep.dimension = rep.h.degree() == IntPoly::kZeroDegree ? 0 : rep.h.degree();
  rep.has_negative_coefficient = rep.h.has_negative_coeff();
  return rep;
}

void require_smooth(const RootSystem& rs, const NodeSet& J) {
  SmoothnessVerdict verdict = is_combinatorially_smooth(rs, J);
  if (!verdict.smooth) throw not_smooth_error(verdict.summary());
}

}  // namespace

IntPoly length_poly(const RootSystem& rs, const NodeSet& J,
                    const EnumLimits& limits) {
  ParabolicQuotient q = enumerate_quotient(rs, J, limits);
  return poly_from_histogram(q.length_histogram);
}

IntPoly eulerian(int n, int max_n) {
  if (n < 1) throw invalid_input_error("eulerian: n must be >= 1");
  if (n > max_n)
    throw cap_exceeded_error("eulerian: n = " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(max_n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  IntPoly::CoeffMap counts;
  do {
    int ascents = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[static_cast<std::size_t>(i)] <
          perm[static_cast<std::size_t>(i) + 1])
        ++ascents;
    counts[ascents] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return IntPoly(std::move(counts));
}

IntPoly permutahedron_h(int n, int max_n) {
  if (n < 1) throw invalid_input_error("permutahedron_h: n must be >= 1");
  if (n > max_n)
    throw cap_exceeded_error("permutahedron_h: n = " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(max_n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  // counts[k] = number of pairs (permutation, k-subset of its ascent set);
  // these are the face counts of the permutahedron by codimension class.
  std::vector<BigInt> counts(static_cast<std::size_t>(n), 0);
  do {
    unsigned mask = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[static_cast<std::size_t>(i)] <
          perm[static_cast<std::size_t>(i) + 1])
        mask |= 1u << i;
    unsigned sub = mask;
    while (true) {
      counts[static_cast<std::size_t>(std::popcount(sub))] += 1;
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  IntPoly h;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0)
      h += orbit_term(static_cast<int>(k), 0) * IntPoly::monomial(counts[k], 0);
  }
  return h;
}

IntPoly toric_poincare(const RootSystem& rs, const NodeSet& J,
                       const EnumLimits& limits) {
  require_smooth(rs, J);
  DescentSystem ds = build_descent_system(rs, J, limits);
  AugmentedPoset poset = nu_stats(ds);
  IntPoly::CoeffMap coeffs;
  for (int nu : poset.nu_plain) coeffs[2 * nu] += 1;
  return IntPoly(std::move(coeffs));
}

HPolyReport simple_embedding_h(const RootSystem& rs, const NodeSet& J,
                               const EnumLimits& limits) {
  require_smooth(rs, J);
  DescentSystem ds = build_descent_system(rs, J, limits);
  AugmentedPoset poset = nu_stats(ds);
  const int top_length = ds.quotient.longest().length();
  IntPoly::CoeffMap cells;
  for (std::size_t i = 0; i < ds.quotient.elements.size(); ++i) {
    int exp =
        top_length - ds.quotient.elements[i].length() + poset.nu_weighted[i];
    cells[exp] += 1;
  }
  return make_report(IntPoly(std::move(cells)),
                     poly_from_histogram(ds.quotient.length_histogram));
}

HPolyReport wonderful_h(const RootSystem& rs, const EnumLimits& limits) {
  ParabolicQuotient group = enumerate_group(rs, limits);
  const int top_length = group.longest().length();
  const int n = rs.rank();
  IntPoly::CoeffMap cells;
  for (const WeylElt& u : group.elements) {
    int ascents = 0;
    for (int s = 1; s <= n; ++s)
      if (!u.sends_simple_negative(s)) ++ascents;
    cells[top_length - u.length() + ascents] += 1;
  }
  return make_report(IntPoly(std::move(cells)),
                     poly_from_histogram(group.length_histogram));
}

HPolyReport rank2_h(RankTwoCase c, int longest_length, int closed_orbits) {
  const int N = longest_length;
  const BigInt k = closed_orbits;
  if (N != 3 && N != 4 && N != 6)
    throw invalid_input_error(
        "rank2_h: longest_length must be 3, 4 or 6, got " + std::to_string(N));
  const int k_min = (c == RankTwoCase::I) ? 1 : 0;
  if (closed_orbits < k_min)
    throw invalid_input_error("rank2_h: closed_orbits must be >= " +
                              std::to_string(k_min) + " for this case, got " +
                              std::to_string(closed_orbits));
  IntPoly cells;
  IntPoly base = geometric_range(0, N - 1);
  switch (c) {
    case RankTwoCase::I:
      cells += IntPoly::monomial(1, 0);
      cells += IntPoly::monomial(k - 1, 1);
      cells += geometric_range(2, N) * IntPoly::monomial(2 * k, 0);
      cells += IntPoly::monomial(k - 1, N + 1);
      cells += IntPoly::monomial(1, N + 2);
      base *= IntPoly::one() + IntPoly::variable();
      break;
    case RankTwoCase::II:
      cells += IntPoly::monomial(1, 0);
      cells += IntPoly::monomial(k, 1);
      cells += IntPoly::monomial(3 * k, 2);
      cells += geometric_range(3, N) * IntPoly::monomial(4 * k + 1, 0);
      cells += IntPoly::monomial(3 * k, N + 1);
      cells += IntPoly::monomial(k, N + 2);
      cells += IntPoly::monomial(1, N + 3);
      break;
    case RankTwoCase::III:
      cells += IntPoly::monomial(1, 0);
      cells += IntPoly::monomial(k, 1);
      cells += IntPoly::monomial(3 * k + 1, 2);
      cells += geometric_range(3, N) * IntPoly::monomial(4 * k + 2, 0);
      cells += IntPoly::monomial(3 * k + 1, N + 1);
      cells += IntPoly::monomial(k, N + 2);
      cells += IntPoly::monomial(1, N + 3);
      break;
  }
  return make_report(std::move(cells), std::move(base));
}

IntPoly hpoly_from_cells(const std::vector<std::pair<int, int>>& cells) {
  IntPoly h;
  for (const auto& [a, b] : cells) {
    if (a < 0 || b < 0)
      throw invalid_input_error("hpoly_from_cells: exponents must be >= 0");
    h += orbit_term(a, b);
  }
  return h;
}

CartanType rank_two_type(int longest_length) {
  switch (longest_length) {
    case 3:
      return CartanType{Family::A, 2};
    case 4:
      return CartanType{Family::B, 2};
    case 6:
      return CartanType{Family::G, 2};
    default:
      throw invalid_input_error(
          "rank_two_type: longest_length must be 3, 4 or 6, got " +
          std::to_string(longest_length));
  }
}

HPolyReport embedding_h(const EmbeddingSpec& spec, const EnumLimits& limits) {
  switch (spec.kind) {
    case EmbeddingSpec::Kind::simple: {
      RootSystem rs = build_root_system(spec.type);
      return simple_embedding_h(rs, spec.J, limits);
    }
    case EmbeddingSpec::Kind::wonderful: {
      RootSystem rs = build_root_system(spec.type);
      return wonderful_h(rs, limits);
    }
    case EmbeddingSpec::Kind::rank_two:
      return rank2_h(spec.rt_case, spec.longest_length, spec.closed_orbits);
  }
  throw internal_error("embedding_h: unreachable");
}

}  // namespace hpoly
