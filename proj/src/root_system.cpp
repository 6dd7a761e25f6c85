#include "hpoly/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace hpoly {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int n) {
  BigInt r = 1;
  r <<= n;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- CartanType

CartanType CartanType::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2)
    throw invalid_input_error("type string '" + text +
                              "' is not of the form A5, B3, E7, ...");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'E' && f != 'F' &&
      f != 'G')
    throw invalid_input_error("unknown family '" + std::string(1, t[0]) +
                              "' in type string '" + text + "'");
  int rank = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw invalid_input_error("bad rank in type string '" + text + "'");
    rank = rank * 10 + (t[i] - '0');
    if (rank > 1000)
      throw invalid_input_error("rank in type string '" + text +
                                "' is absurdly large");
  }
  CartanType ct{static_cast<Family>(f), rank};
  ct.validate();
  return ct;
}

bool CartanType::admissible() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank == 6 || rank == 7 || rank == 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void CartanType::validate() const {
  if (!admissible())
    throw invalid_input_error(
        "inadmissible type " + str() +
        " (admissible: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F4, G2)");
}

std::string CartanType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

BigInt CartanType::group_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return pow2(rank) * factorial(rank);
    case Family::D: return pow2(rank - 1) * factorial(rank);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int CartanType::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E:
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      return 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// --------------------------------------------------------------- DynkinGraph

DynkinGraph::DynkinGraph(int rank, std::vector<DynkinEdge> edges)
    : rank_(rank), edges_(std::move(edges)), bond_(rank * rank, 0) {
  for (const auto& e : edges_) {
    bond_[(e.a - 1) * rank_ + (e.b - 1)] = e.multiplicity;
    bond_[(e.b - 1) * rank_ + (e.a - 1)] = e.multiplicity;
  }
}

int DynkinGraph::bond(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_ || i == j) return 0;
  return bond_[(i - 1) * rank_ + (j - 1)];
}

std::vector<int> DynkinGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= rank_; ++j)
    if (bond(i, j) != 0) out.push_back(j);
  return out;
}

// --------------------------------------------------------------- RootSystem

namespace {

// Cartan matrix convention: A[i][j] = 2(a_i,a_j)/(a_i,a_i), so the row of the
// shorter root carries the -2/-3 entry and s_i(a_j) = a_j - A[i][j] a_i.
IntMatrix cartan_matrix_for(const CartanType& t) {
  const int n = t.rank;
  IntMatrix A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto single = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      break;
    case Family::B:  // a_n short
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      A[n - 2][n - 1] = -1;
      A[n - 1][n - 2] = -2;
      break;
    case Family::C:  // a_n long
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      A[n - 2][n - 1] = -2;
      A[n - 1][n - 2] = -1;
      break;
    case Family::D:  // end nodes s1, s_{n-1}, s_n; both forks meet s_{n-2}
      for (int i = 0; i + 1 < n - 2; ++i) single(i, i + 1);
      single(n - 3, n - 2);
      single(n - 3, n - 1);
      break;
    case Family::E:  // s1..s_{n-1} is the A_{n-1} chain; s_n hangs off it
      for (int i = 0; i + 1 < n - 1; ++i) single(i, i + 1);
      single(n - 1, n == 6 ? 2 : (n == 7 ? 3 : 4));
      break;
    case Family::F:  // s1,s2 long; s3,s4 short; double bond in the middle
      single(0, 1);
      A[1][2] = -1;
      A[2][1] = -2;
      single(2, 3);
      break;
    case Family::G:  // s1 short, s2 long
      A[0][1] = -3;
      A[1][0] = -1;
      break;
  }
  return A;
}

DynkinGraph graph_from_cartan(const IntMatrix& A) {
  const int n = static_cast<int>(A.size());
  std::vector<DynkinEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = A[i][j] * A[j][i];
      if (m == 0) continue;
      DynkinEdge e;
      e.a = i + 1;
      e.b = j + 1;
      e.multiplicity = m;
      if (m > 1) e.short_node = (A[i][j] < -1) ? i + 1 : j + 1;
      edges.push_back(e);
    }
  return DynkinGraph(n, std::move(edges));
}

int root_height(const RootVec& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

bool uniformly_nonneg(const RootVec& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

bool uniformly_nonpos(const RootVec& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
}

}  // namespace

NodeSet RootSystem::all_nodes() const {
  NodeSet s;
  for (int i = 1; i <= rank(); ++i) s.insert(i);
  return s;
}

RootVec RootSystem::reflect(int s, const RootVec& root) const {
  const IntMatrix& A = cartan();
  const int i = s - 1;
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += A[i][j] * root[j];
  RootVec out = root;
  out[i] -= pairing;
  return out;
}

RootSystem build_root_system(CartanType type) {
  type.validate();
  auto data = std::make_shared<RootSystem::Data>();
  data->type = type;
  data->cartan = cartan_matrix_for(type);
  data->graph = graph_from_cartan(data->cartan);

  const int n = type.rank;
  // Close the simple roots under all simple reflections.
  std::set<RootVec> all;
  std::queue<RootVec> work;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    all.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    RootVec r = work.front();
    work.pop();
    for (int s = 0; s < n; ++s) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += data->cartan[s][j] * r[j];
      RootVec r2 = r;
      r2[s] -= pairing;
      if (all.insert(r2).second) work.push(r2);
    }
  }

  for (const RootVec& r : all) {
    if (!uniformly_nonneg(r) && !uniformly_nonpos(r))
      throw internal_error("root closure produced a mixed-sign vector for " +
                           type.str());
    if (uniformly_nonneg(r)) data->positive.push_back(r);
  }
  std::sort(data->positive.begin(), data->positive.end(),
            [](const RootVec& x, const RootVec& y) {
              int hx = root_height(x), hy = root_height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  if (static_cast<int>(data->positive.size()) != type.positive_root_count())
    throw internal_error("positive root count for " + type.str() + " is " +
                         std::to_string(data->positive.size()) +
                         ", expected " +
                         std::to_string(type.positive_root_count()));

  RootSystem rs;
  rs.d_ = std::move(data);
  return rs;
}

// --------------------------------------------------------------- components

namespace {

// Induced type of a connected subdiagram.  Only shapes that occur inside the
// admissible ambient diagrams are recognized.
CartanType classify_component(const DynkinGraph& g, const NodeSet& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {Family::A, 1};

  std::map<int, std::vector<int>> adj;  // within the component
  std::vector<const DynkinEdge*> multi;
  for (const auto& e : g.edges()) {
    if (!nodes.count(e.a) || !nodes.count(e.b)) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
    if (e.multiplicity > 1) multi.push_back(&e);
  }
  int max_deg = 0, branch = 0;
  for (int v : nodes) {
    int d = static_cast<int>(adj[v].size());
    if (d > max_deg) {
      max_deg = d;
      branch = v;
    }
  }

  if (max_deg <= 2) {  // path
    if (multi.empty()) return {Family::A, k};
    if (multi.size() > 1)
      throw internal_error("path component with several multiple bonds");
    const DynkinEdge& e = *multi.front();
    if (e.multiplicity == 3) {
      if (k != 2) throw internal_error("triple bond inside a larger path");
      return {Family::G, 2};
    }
    if (k == 2) return {Family::B, 2};
    // Double bond: at an end of the path, the terminal node's length decides
    // between the B and C shapes; in the middle it is the F4 shape.
    auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
    int terminal = 0;
    if (deg(e.a) == 1) terminal = e.a;
    else if (deg(e.b) == 1) terminal = e.b;
    if (terminal == 0) {
      if (k == 4) return {Family::F, 4};
      throw internal_error("interior double bond in a non-F4 path");
    }
    return {terminal == e.short_node ? Family::B : Family::C, k};
  }

  if (max_deg != 3 || !multi.empty())
    throw internal_error("unrecognized branching component shape");
  // Leg lengths from the branch node decide between the D and E shapes.
  std::vector<int> legs;
  for (int start : adj[branch]) {
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      int next = 0;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() == 3 && legs[0] == 1) {
    if (legs[1] == 1) return {Family::D, k};
    if (legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
      return {Family::E, k};
  }
  throw internal_error("unrecognized branching component shape");
}

}  // namespace

std::vector<Component> components(const DynkinGraph& g, const NodeSet& J) {
  for (int v : J)
    if (v < 1 || v > g.rank())
      throw invalid_input_error("node s" + std::to_string(v) +
                                " outside the diagram (valid: s1..s" +
                                std::to_string(g.rank()) + ")");
  std::vector<Component> out;
  NodeSet todo = J;
  while (!todo.empty()) {
    int start = *todo.begin();
    NodeSet comp;
    std::queue<int> work;
    work.push(start);
    todo.erase(start);
    comp.insert(start);
    while (!work.empty()) {
      int v = work.front();
      work.pop();
      for (int w : g.neighbors(v))
        if (todo.count(w)) {
          todo.erase(w);
          comp.insert(w);
          work.push(w);
        }
    }
    Component c;
    c.type = classify_component(g, comp);
    c.nodes = std::move(comp);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    return *x.nodes.begin() < *y.nodes.begin();
  });
  return out;
}

BigInt parabolic_order(const DynkinGraph& g, const NodeSet& J) {
  BigInt order = 1;
  for (const Component& c : components(g, J)) order *= c.type.group_order();
  return order;
}

// ------------------------------------------------------------- node parsing

NodeSet parse_node_set(const std::string& text, int rank) {
  NodeSet out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::string name = cur;
    cur.clear();
    if (name[0] != 's' && name[0] != 'S')
      throw invalid_input_error("bad node name '" + name +
                                "' (expected s1..s" + std::to_string(rank) +
                                ")");
    int v = 0;
    if (name.size() < 2)
      throw invalid_input_error("bad node name '" + name + "'");
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw invalid_input_error("bad node name '" + name + "'");
      v = v * 10 + (name[i] - '0');
    }
    if (v < 1 || v > rank)
      throw invalid_input_error("node '" + name + "' outside the diagram " +
                                "(valid: s1..s" + std::to_string(rank) + ")");
    out.insert(v);
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  return out;
}

std::string node_set_str(const NodeSet& J) {
  std::string s = "{";
  bool first = true;
  for (int v : J) {
    if (!first) s += ",";
    first = false;
    s += "s" + std::to_string(v);
  }
  return s + "}";
}

}  // namespace hpoly
