#include "hpoly/oracle.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "hpoly/errors.hpp"

namespace hpoly {

namespace {

using Mat = std::vector<std::int8_t>;  // row-major n x n over F_q

void check_matrix_side(int n, int hi, const char* what) {
  if (n < 1)
    throw invalid_input_error(std::string(what) + ": n must be >= 1");
  if (n > hi)
    throw cap_exceeded_error(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(hi));
}

void check_field(int q) {
  if (q != 2 && q != 3)
    throw invalid_input_error(
        "only the fields with q = 2 and q = 3 elements are supported, got "
        "q = " +
        std::to_string(q));
}

// All invertible upper-triangular n x n matrices over F_q, generated by a
// mixed-radix counter over the on-or-above-diagonal entries.
std::vector<Mat> borel_group(int n, int q) {
  std::vector<int> positions;  // flat indices of the free entries
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) positions.push_back(i * n + j);
  std::vector<int> digits(positions.size(), 0);
  std::vector<Mat> out;
  while (true) {
    Mat m(static_cast<std::size_t>(n * n), 0);
    bool unit_diagonal = true;
    for (std::size_t p = 0; p < positions.size(); ++p) {
      const int flat = positions[p];
      if (flat / n == flat % n && digits[p] == 0) {
        unit_diagonal = false;  // diagonal entries must be invertible
        break;
      }
      m[static_cast<std::size_t>(flat)] = static_cast<std::int8_t>(digits[p]);
    }
    if (unit_diagonal) out.push_back(std::move(m));
    std::size_t p = 0;
    for (; p < digits.size(); ++p) {
      if (++digits[p] < q) break;
      digits[p] = 0;
    }
    if (p == digits.size()) break;
  }
  return out;
}

Mat multiply(const Mat& x, const Mat& y, int n, int q) {
  Mat r(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int xv = x[static_cast<std::size_t>(i * n + k)];
      if (xv == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& rv = r[static_cast<std::size_t>(i * n + j)];
        rv = static_cast<std::int8_t>(
            (rv + xv * y[static_cast<std::size_t>(k * n + j)]) % q);
      }
    }
  return r;
}

std::uint32_t encode(const Mat& m, int q) {
  std::uint32_t code = 0;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    code = code * static_cast<std::uint32_t>(q) +
           static_cast<std::uint32_t>(*it);
  return code;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Bitmap over all n x n matrices (indexed by base-q codes) marking the orbit
// B x B of one representative.
std::vector<bool> orbit_bitmap(const RookMatrix& x, int q,
                               const std::vector<Mat>& borel) {
  const int n = x.n;
  Mat xm(x.a.begin(), x.a.end());
  std::vector<bool> seen(pow_u64(static_cast<std::uint64_t>(q), n * n), false);
  for (const Mat& u : borel) {
    const Mat ux = multiply(u, xm, n, q);
    for (const Mat& v : borel) seen[encode(multiply(ux, v, n, q), q)] = true;
  }
  return seen;
}

std::uint64_t count_bits(const std::vector<bool>& bits) {
  std::uint64_t c = 0;
  for (bool b : bits) c += b ? 1 : 0;
  return c;
}

void enumerate_rows(int n, int row, unsigned used_cols, Mat& acc,
                    std::vector<RookMatrix>& out) {
  if (row == n) {
    out.push_back(RookMatrix{n, acc});
    return;
  }
  enumerate_rows(n, row + 1, used_cols, acc, out);  // zero row
  for (int j = 0; j < n; ++j) {
    if (used_cols & (1u << j)) continue;
    acc[static_cast<std::size_t>(row * n + j)] = 1;
    enumerate_rows(n, row + 1, used_cols | (1u << j), acc, out);
    acc[static_cast<std::size_t>(row * n + j)] = 0;
  }
}

}  // namespace

RookMatrix RookMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw invalid_input_error("rook matrix must be nonempty");
  RookMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw invalid_input_error("rook matrix rows must all have length " +
                                std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0 && v != 1)
        throw invalid_input_error("rook matrix entries must be 0 or 1");
      m.a[static_cast<std::size_t>(i * n + j)] = static_cast<std::int8_t>(v);
    }
  }
  for (int i = 0; i < n; ++i) {
    int row_sum = 0, col_sum = 0;
    for (int j = 0; j < n; ++j) {
      row_sum += m.at(i, j);
      col_sum += m.at(j, i);
    }
    if (row_sum > 1 || col_sum > 1)
      throw invalid_input_error(
          "rook matrix needs at most one 1 per row and column");
  }
  return m;
}

int RookMatrix::rank() const {
  int r = 0;
  for (std::int8_t v : a) r += v;
  return r;
}

std::string RookMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < n; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < n; ++j) {
      if (j) out += ",";
      out += std::to_string(at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::vector<RookMatrix> enumerate_rook_matrices(int n) {
  check_matrix_side(n, 4, "enumerate_rook_matrices");
  Mat acc(static_cast<std::size_t>(n * n), 0);
  std::vector<RookMatrix> out;
  enumerate_rows(n, 0, 0u, acc, out);
  std::sort(out.begin(), out.end(),
            [](const RookMatrix& x, const RookMatrix& y) {
              const int rx = x.rank(), ry = y.rank();
              if (rx != ry) return rx > ry;
              return x.a > y.a;
            });
  return out;
}

std::uint64_t orbit_size(const RookMatrix& x, int q) {
  check_matrix_side(x.n, 3, "orbit_size");
  check_field(q);
  return count_bits(orbit_bitmap(x, q, borel_group(x.n, q)));
}

std::pair<int, int> fit_ab(const std::map<int, std::uint64_t>& size_by_q) {
  const auto it2 = size_by_q.find(2);
  const auto it3 = size_by_q.find(3);
  if (it2 == size_by_q.end() || it3 == size_by_q.end())
    throw invalid_input_error("fit_ab needs sizes at both q = 2 and q = 3");
  const auto log_exact = [](std::uint64_t value, std::uint64_t base) {
    int e = 0;
    while (value % base == 0) {
      value /= base;
      ++e;
    }
    return value == 1 ? e : -1;
  };
  const int b = log_exact(it2->second, 2);  // at q = 2 the size is 2^b
  if (b < 0)
    throw orbit_fit_error("orbit size " + std::to_string(it2->second) +
                          " at q = 2 is not a power of 2");
  const std::uint64_t p3 = pow_u64(3, b);
  if (it3->second % p3 != 0)
    throw orbit_fit_error("orbit size " + std::to_string(it3->second) +
                          " at q = 3 is not divisible by 3^" +
                          std::to_string(b));
  const int a = log_exact(it3->second / p3, 2);
  if (a < 0)
    throw orbit_fit_error("orbit size " + std::to_string(it3->second) +
                          " at q = 3 does not fit 2^a * 3^" +
                          std::to_string(b));
  for (const auto& [q, size] : size_by_q) {
    if (pow_u64(static_cast<std::uint64_t>(q) - 1, a) *
            pow_u64(static_cast<std::uint64_t>(q), b) !=
        size)
      throw orbit_fit_error("orbit size " + std::to_string(size) + " at q = " +
                            std::to_string(q) + " does not match (q-1)^" +
                            std::to_string(a) + " * q^" + std::to_string(b));
  }
  return {a, b};
}

std::vector<OrbitProfile> orbit_profiles(int n, std::vector<int> qs) {
  check_matrix_side(n, 3, "orbit_profiles");
  if (qs.empty())
    throw invalid_input_error("orbit_profiles needs at least one field size");
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (int q : qs) check_field(q);
  std::vector<OrbitProfile> out;
  for (const RookMatrix& rep : enumerate_rook_matrices(n)) {
    OrbitProfile p;
    p.rep = rep;
    p.rank = rep.rank();
    for (int q : qs) p.orbit_size[q] = orbit_size(rep, q);
    if (p.orbit_size.count(2) && p.orbit_size.count(3))
      std::tie(p.a, p.b) = fit_ab(p.orbit_size);
    out.push_back(std::move(p));
  }
  return out;
}

MonoidOrbitReport monoid_orbits(int n) {
  check_matrix_side(n, 3, "monoid_orbits");
  const std::vector<RookMatrix> reps = enumerate_rook_matrices(n);
  MonoidOrbitReport report;
  report.n = n;
  report.profiles.resize(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    report.profiles[i].rep = reps[i];
    report.profiles[i].rank = reps[i].rank();
  }
  for (int q : {2, 3}) {
    const std::vector<Mat> borel = borel_group(n, q);
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), n * n);
    std::vector<bool> covered(total, false);
    std::uint64_t covered_count = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::vector<bool> orbit = orbit_bitmap(reps[i], q, borel);
      std::uint64_t size = 0;
      for (std::uint64_t c = 0; c < total; ++c) {
        if (!orbit[c]) continue;
        ++size;
        if (covered[c])
          throw partition_error(
              "orbits overlap over the field with " + std::to_string(q) +
              " elements: representative " + reps[i].str() +
              " meets an earlier orbit");
        covered[c] = true;
        ++covered_count;
      }
      report.profiles[i].orbit_size[q] = size;
    }
    if (covered_count != total)
      throw partition_error("orbits cover only " +
                            std::to_string(covered_count) + " of the " +
                            std::to_string(total) + " matrices over the field "
                            "with " + std::to_string(q) + " elements");
  }
  IntPoly h;
  for (OrbitProfile& p : report.profiles) {
    std::tie(p.a, p.b) = fit_ab(p.orbit_size);
    h += orbit_term(p.a, p.b);
  }
  report.h = h;
  return report;
}

IntPoly monoid_h(int n) { return monoid_orbits(n).h; }

}  // namespace hpoly
