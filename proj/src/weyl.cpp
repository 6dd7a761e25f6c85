#include "hpoly/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace hpoly {

namespace {

// Sign of a root vector: roots never mix signs, so the first nonzero entry
// decides.
int first_nonzero_sign(const std::int8_t* col, int n) {
  for (int i = 0; i < n; ++i)
    if (col[i] != 0) return col[i] > 0 ? 1 : -1;
  return 0;
}

}  // namespace

// Internal helpers needing access to WeylElt private state.
struct WeylEltOps {
  // w * s_j with the new length supplied by the caller (descent bookkeeping).
  static WeylElt mul_simple_right(const WeylElt& w, int s, int new_len) {
    const IntMatrix& A = w.rs_.cartan();
    const int n = w.rank_;
    const int s0 = s - 1;
    WeylElt r = w;
    // (M * M_s) col j = col j - A[s][j] * col s.
    std::vector<std::int8_t> cs(w.m_.begin() + s0 * n,
                                w.m_.begin() + (s0 + 1) * n);
    for (int j = 0; j < n; ++j) {
      int a = A[s0][j];
      if (a == 0) continue;
      for (int i = 0; i < n; ++i)
        r.m_[j * n + i] = static_cast<std::int8_t>(r.m_[j * n + i] -
                                                   a * cs[i]);
    }
    r.len_ = new_len;
    return r;
  }

  // s_j * w with the new length supplied by the caller.
  static WeylElt mul_simple_left(const WeylElt& w, int s, int new_len) {
    const IntMatrix& A = w.rs_.cartan();
    const int n = w.rank_;
    const int s0 = s - 1;
    WeylElt r = w;
    // (M_s * M)(s0, j) = M(s0, j) - sum_k A[s0][k] M(k, j); other rows keep.
    for (int j = 0; j < n; ++j) {
      int p = 0;
      for (int k = 0; k < n; ++k) p += A[s0][k] * w.m_[j * n + k];
      r.m_[j * n + s0] = static_cast<std::int8_t>(w.m_[j * n + s0] - p);
    }
    r.len_ = new_len;
    return r;
  }

  static int count_inversions(const WeylElt& w) {
    const auto& pos = w.rs_.positive_roots();
    const int n = w.rank_;
    int count = 0;
    std::vector<int> img(n);
    for (const RootVec& p : pos) {
      std::fill(img.begin(), img.end(), 0);
      for (int j = 0; j < n; ++j) {
        int c = p[j];
        if (c == 0) continue;
        for (int i = 0; i < n; ++i) img[i] += c * w.m_[j * n + i];
      }
      for (int i = 0; i < n; ++i) {
        if (img[i] > 0) break;
        if (img[i] < 0) {
          ++count;
          break;
        }
      }
    }
    return count;
  }

  static void set_length(WeylElt& w, int len) { w.len_ = len; }
};

// ------------------------------------------------------------------ WeylElt

WeylElt WeylElt::identity(const RootSystem& rs) {
  WeylElt w;
  w.rs_ = rs;
  w.rank_ = rs.rank();
  w.m_.assign(static_cast<std::size_t>(w.rank_) * w.rank_, 0);
  for (int i = 0; i < w.rank_; ++i) w.m_[i * w.rank_ + i] = 1;
  w.len_ = 0;
  return w;
}

WeylElt WeylElt::simple(const RootSystem& rs, int s) {
  if (s < 1 || s > rs.rank())
    throw invalid_input_error("simple reflection s" + std::to_string(s) +
                              " outside the diagram (valid: s1..s" +
                              std::to_string(rs.rank()) + ")");
  WeylElt w = identity(rs);
  const IntMatrix& A = rs.cartan();
  const int n = rs.rank();
  const int s0 = s - 1;
  // s_i(a_j) = a_j - A[i][j] a_i.
  for (int j = 0; j < n; ++j)
    w.m_[j * n + s0] = static_cast<std::int8_t>(w.m_[j * n + s0] - A[s0][j]);
  w.len_ = 1;
  return w;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  if (!rs_.valid() || !o.rs_.valid() || !rs_.same_as(o.rs_))
    throw invalid_input_error("cannot multiply elements of different types");
  const int n = rank_;
  WeylElt r;
  r.rs_ = rs_;
  r.rank_ = n;
  r.m_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int acc = 0;
      for (int k = 0; k < n; ++k) acc += m_[k * n + i] * o.m_[j * n + k];
      r.m_[j * n + i] = static_cast<std::int8_t>(acc);
    }
  r.len_ = WeylEltOps::count_inversions(r);
  return r;
}

WeylElt WeylElt::inverse() const {
  std::vector<int> word = reduced_word();
  WeylElt r = identity(rs_);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = r * simple(rs_, *it);
  return r;
}

RootVec WeylElt::apply(const RootVec& root) const {
  const int n = rank_;
  RootVec img(n, 0);
  for (int j = 0; j < n; ++j) {
    int c = root[j];
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) img[i] += c * m_[j * n + i];
  }
  return img;
}

RootVec WeylElt::image_of_simple(int s) const {
  const int n = rank_;
  RootVec out(n);
  for (int i = 0; i < n; ++i) out[i] = m_[(s - 1) * n + i];
  return out;
}

bool WeylElt::sends_simple_negative(int s) const {
  return first_nonzero_sign(m_.data() + (s - 1) * rank_, rank_) < 0;
}

bool WeylElt::in_quotient(const NodeSet& J) const {
  for (int j : J)
    if (sends_simple_negative(j)) return false;
  return true;
}

std::vector<int> WeylElt::reduced_word() const {
  std::vector<int> word;
  WeylElt w = *this;
  while (w.len_ > 0) {
    int s = 0;
    for (int i = 1; i <= rank_; ++i)
      if (w.sends_simple_negative(i)) {
        s = i;
        break;
      }
    word.push_back(s);
    w = WeylEltOps::mul_simple_right(w, s, w.len_ - 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string WeylElt::word_str() const {
  std::vector<int> word = reduced_word();
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ".";
    out += "s" + std::to_string(word[i]);
  }
  return out;
}

// -------------------------------------------------------------- enumeration

namespace {

void check_cap(const BigInt& expected, const EnumLimits& limits,
               const std::string& what) {
  if (expected > limits.max_elements)
    throw cap_exceeded_error(
        what + " needs " + expected.str() +
        " elements, exceeding the cap max_elements=" +
        std::to_string(limits.max_elements) +
        " (raise it via HPOLY_MAX_ELEMENTS or a config file)");
}

void validate_nodes(const RootSystem& rs, const NodeSet& J) {
  for (int j : J)
    if (j < 1 || j > rs.rank())
      throw invalid_input_error("node s" + std::to_string(j) +
                                " outside the diagram (valid: s1..s" +
                                std::to_string(rs.rank()) + ")");
}

// Layered BFS producing either W^J (left multiplication, quotient filter) or
// W_J (left multiplication by generators in J, no filter).
std::vector<std::vector<WeylElt>> bfs_layers(const RootSystem& rs,
                                             const std::vector<int>& gens,
                                             const NodeSet& filter,
                                             std::size_t expected) {
  std::unordered_set<WeylElt, WeylEltHash> seen;
  seen.reserve(expected * 2);
  std::vector<std::vector<WeylElt>> layers;
  layers.push_back({WeylElt::identity(rs)});
  seen.insert(layers.back().front());
  while (true) {
    const std::vector<WeylElt>& prev = layers.back();
    std::vector<WeylElt> next;
    for (const WeylElt& v : prev)
      for (int s : gens) {
        WeylElt w = WeylEltOps::mul_simple_left(v, s, v.length() + 1);
        // A shorter product is already in an earlier layer, so anything
        // unseen here genuinely has length |layer|+1.
        if (!w.in_quotient(filter)) continue;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

ParabolicQuotient quotient_from_layers(const RootSystem& rs, NodeSet J,
                                       std::vector<std::vector<WeylElt>> layers,
                                       const BigInt& expected) {
  ParabolicQuotient q;
  q.J = std::move(J);
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  if (BigInt(total) != expected)
    throw internal_error("enumeration found " + std::to_string(total) +
                         " elements, expected " + expected.str());
  if (layers.back().size() != 1)
    throw internal_error("longest element is not unique");
  q.elements.reserve(total);
  q.length_histogram.reserve(layers.size());
  for (auto& layer : layers) {
    q.length_histogram.push_back(layer.size());
    for (auto& w : layer) q.elements.push_back(std::move(w));
  }
  return q;
}

}  // namespace

ParabolicQuotient enumerate_quotient(const RootSystem& rs, const NodeSet& J,
                                     const EnumLimits& limits) {
  validate_nodes(rs, J);
  BigInt expected =
      rs.type().group_order() / parabolic_order(rs.dynkin(), J);
  check_cap(expected, limits,
            "enumerating W^J for " + rs.type().str() + ", J=" +
                node_set_str(J));
  std::vector<int> gens;
  for (int s = 1; s <= rs.rank(); ++s) gens.push_back(s);
  auto layers =
      bfs_layers(rs, gens, J, expected.convert_to<std::size_t>());
  return quotient_from_layers(rs, J, std::move(layers), expected);
}

ParabolicQuotient enumerate_group(const RootSystem& rs,
                                  const EnumLimits& limits) {
  return enumerate_quotient(rs, {}, limits);
}

std::vector<WeylElt> enumerate_parabolic_subgroup(const RootSystem& rs,
                                                  const NodeSet& J,
                                                  const EnumLimits& limits) {
  validate_nodes(rs, J);
  BigInt expected = parabolic_order(rs.dynkin(), J);
  check_cap(expected, limits,
            "enumerating W_J for " + rs.type().str() + ", J=" +
                node_set_str(J));
  std::vector<int> gens(J.begin(), J.end());
  auto layers =
      bfs_layers(rs, gens, {}, expected.convert_to<std::size_t>());
  std::vector<WeylElt> out;
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  if (BigInt(total) != expected)
    throw internal_error("subgroup enumeration found " +
                         std::to_string(total) + " elements, expected " +
                         expected.str());
  out.reserve(total);
  for (auto& layer : layers)
    for (auto& w : layer) out.push_back(std::move(w));
  return out;
}

WeylElt min_coset_rep(const WeylElt& w, const NodeSet& J) {
  WeylElt r = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J)
      if (r.sends_simple_negative(j)) {
        r = WeylEltOps::mul_simple_right(r, j, r.length() - 1);
        moved = true;
        break;
      }
  }
  return r;
}

bool bruhat_leq(const WeylElt& u0, const WeylElt& v0) {
  if (!u0.root_system().same_as(v0.root_system()))
    throw invalid_input_error("Bruhat comparison across different types");
  constexpr int kMaxRank = 8;
  if (u0.rank() > kMaxRank)
    throw cap_exceeded_error("bruhat_leq is capped at rank " +
                             std::to_string(kMaxRank));
  WeylElt u = u0, v = v0;
  // Lifting property: for a right descent s of v,
  // u <= v iff (us <= vs when l(us) < l(u)) and (u <= vs otherwise).
  while (true) {
    if (u.length() > v.length()) return false;
    if (v.length() == 0) return u.length() == 0;
    if (u == v) return true;
    int s = 0;
    for (int i = 1; i <= v.rank(); ++i)
      if (v.sends_simple_negative(i)) {
        s = i;
        break;
      }
    if (u.sends_simple_negative(s))
      u = WeylEltOps::mul_simple_right(u, s, u.length() - 1);
    v = WeylEltOps::mul_simple_right(v, s, v.length() - 1);
  }
}

WeylElt word_element(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = WeylElt::identity(rs);
  for (int s : word) w = w * WeylElt::simple(rs, s);
  return w;
}

}  // namespace hpoly
