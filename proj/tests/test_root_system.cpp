#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hpoly/errors.hpp"
#include "hpoly/root_system.hpp"

using namespace hpoly;

namespace {

RootSystem rs(const std::string& t) {
  return build_root_system(CartanType::parse(t));
}

bool is_positive(const RootVec& r) {
  bool any = false;
  for (int c : r) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

RootVec negate(RootVec r) {
  for (int& c : r) c = -c;
  return r;
}

}  // namespace

TEST_CASE("type parsing accepts exactly the admissible ranks") {
  const char* good[] = {"A1", "A2", "A9", "A12", "B2",  "B3", "B10", "C3",
                       "C4", "D4", "D5", "E6",  "E7",  "E8", "F4",  "G2"};
  for (const char* t : good) {
    CartanType ct = CartanType::parse(t);
    CHECK(ct.admissible());
    CHECK(ct.str() == t);
  }
  const char* bad[] = {"",   "A",  "A0", "B1", "C2",  "C1", "D3", "D2",
                       "E5", "E9", "F3", "F5", "G3",  "G1", "H3", "X2",
                       "a2x", "A-1", "s1", "4A"};
  for (const char* t : bad)
    CHECK_THROWS_AS((void)CartanType::parse(t), invalid_input_error);
  // Whitespace and case are tolerated.
  CHECK(CartanType::parse("A 2").str() == "A2");
  CHECK(CartanType::parse("e6").str() == "E6");
}

TEST_CASE("group orders and positive root counts match the classical values") {
  struct Row {
    const char* type;
    long long order;
    int positives;
  };
  const Row rows[] = {
      {"A1", 2, 1},          {"A2", 6, 3},         {"A3", 24, 6},
      {"A4", 120, 10},       {"A5", 720, 15},      {"B2", 8, 4},
      {"B3", 48, 9},         {"B4", 384, 16},      {"B5", 3840, 25},
      {"C3", 48, 9},         {"C4", 384, 16},      {"C5", 3840, 25},
      {"D4", 192, 12},       {"D5", 1920, 20},     {"D6", 23040, 30},
      {"E6", 51840, 36},     {"E7", 2903040, 63},  {"E8", 696729600, 120},
      {"F4", 1152, 24},      {"G2", 12, 6},
  };
  for (const Row& r : rows) {
    CartanType ct = CartanType::parse(r.type);
    CHECK(ct.group_order() == BigInt(r.order));
    CHECK(ct.positive_root_count() == r.positives);
  }
}

TEST_CASE("building a root system yields the full positive system") {
  for (const char* t : {"A1", "A3", "B2", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    RootSystem r = rs(t);
    const int n = r.rank();
    REQUIRE(static_cast<int>(r.positive_roots().size()) ==
            r.type().positive_root_count());

    // The height-one roots are exactly the simple roots.
    std::set<RootVec> simples;
    for (const RootVec& root : r.positive_roots()) {
      int height = 0;
      for (int c : root) height += c;
      if (height == 1) simples.insert(root);
    }
    CHECK(static_cast<int>(simples.size()) == n);
    for (int i = 0; i < n; ++i) {
      RootVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      CHECK(simples.count(e) == 1);
    }

    // No duplicates.
    std::set<RootVec> uniq(r.positive_roots().begin(),
                           r.positive_roots().end());
    CHECK(uniq.size() == r.positive_roots().size());
  }
}

TEST_CASE("each simple reflection permutes the other positive roots") {
  for (const char* t : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    RootSystem r = rs(t);
    const std::set<RootVec> pos(r.positive_roots().begin(),
                                r.positive_roots().end());
    for (int s = 1; s <= r.rank(); ++s) {
      RootVec alpha(static_cast<std::size_t>(r.rank()), 0);
      alpha[static_cast<std::size_t>(s - 1)] = 1;
      CHECK(r.reflect(s, alpha) == negate(alpha));
      std::set<RootVec> images;
      for (const RootVec& root : r.positive_roots()) {
        if (root == alpha) continue;
        RootVec img = r.reflect(s, root);
        CHECK(is_positive(img));
        CHECK(pos.count(img) == 1);
        images.insert(std::move(img));
      }
      CHECK(images.size() == pos.size() - 1);  // injective
      // Involution.
      for (const RootVec& root : r.positive_roots())
        CHECK(r.reflect(s, r.reflect(s, root)) == root);
    }
  }
}

TEST_CASE("Cartan matrix rows of short roots carry the -2/-3 entries") {
  // Convention: A[i][j] = 2(a_i,a_j)/(a_i,a_i), zero-based storage.
  SUBCASE("B4: a_4 short") {
    RootSystem r_ = rs("B4");
    const IntMatrix& A = r_.cartan();
    CHECK(A[2][3] == -1);
    CHECK(A[3][2] == -2);
  }
  SUBCASE("C4: a_4 long") {
    RootSystem r_ = rs("C4");
    const IntMatrix& A = r_.cartan();
    CHECK(A[2][3] == -2);
    CHECK(A[3][2] == -1);
  }
  SUBCASE("F4: double bond in the middle, s3 short") {
    RootSystem r_ = rs("F4");
    const IntMatrix& A = r_.cartan();
    CHECK(A[1][2] == -1);
    CHECK(A[2][1] == -2);
    CHECK(A[0][1] == -1);
    CHECK(A[2][3] == -1);
  }
  SUBCASE("G2: s1 short") {
    RootSystem r_ = rs("G2");
    const IntMatrix& A = r_.cartan();
    CHECK(A[0][1] == -3);
    CHECK(A[1][0] == -1);
  }
}

TEST_CASE("Dynkin graphs have the expected bonds and short ends") {
  SUBCASE("B4") {
    RootSystem r_ = rs("B4");
    const DynkinGraph& g = r_.dynkin();
    CHECK(g.bond(3, 4) == 2);
    CHECK(g.bond(4, 3) == 2);
    CHECK(g.bond(1, 2) == 1);
    CHECK(g.bond(1, 3) == 0);
    CHECK(g.bond(1, 1) == 0);
    for (const DynkinEdge& e : g.edges())
      if (e.multiplicity == 2) CHECK(e.short_node == 4);
  }
  SUBCASE("C4") {
    RootSystem r_ = rs("C4");
    const DynkinGraph& g = r_.dynkin();
    CHECK(g.bond(3, 4) == 2);
    for (const DynkinEdge& e : g.edges())
      if (e.multiplicity == 2) CHECK(e.short_node == 3);
  }
  SUBCASE("F4") {
    RootSystem r_ = rs("F4");
    const DynkinGraph& g = r_.dynkin();
    CHECK(g.bond(2, 3) == 2);
    CHECK(g.bond(1, 2) == 1);
    CHECK(g.bond(3, 4) == 1);
    for (const DynkinEdge& e : g.edges())
      if (e.multiplicity == 2) CHECK(e.short_node == 3);
  }
  SUBCASE("G2") {
    RootSystem r_ = rs("G2");
    const DynkinGraph& g = r_.dynkin();
    CHECK(g.bond(1, 2) == 3);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].short_node == 1);
  }
  SUBCASE("D5 fork: s4 and s5 both hang off s3") {
    RootSystem r_ = rs("D5");
    const DynkinGraph& g = r_.dynkin();
    CHECK(g.neighbors(3) == std::vector<int>{2, 4, 5});
    CHECK(g.neighbors(5) == std::vector<int>{3});
    CHECK(g.bond(4, 5) == 0);
  }
  SUBCASE("E6/E7/E8 branch nodes") {
    CHECK(rs("E6").dynkin().neighbors(3) == std::vector<int>{2, 4, 6});
    CHECK(rs("E7").dynkin().neighbors(4) == std::vector<int>{3, 5, 7});
    CHECK(rs("E8").dynkin().neighbors(5) == std::vector<int>{4, 6, 8});
    CHECK(rs("E8").dynkin().neighbors(8) == std::vector<int>{5});
  }
}

TEST_CASE("connected components of subdiagrams carry their induced types") {
  auto types_of = [](const RootSystem& r, const NodeSet& J) {
    std::vector<std::string> out;
    for (const Component& c : components(r.dynkin(), J))
      out.push_back(c.type.str());
    return out;
  };

  RootSystem a5 = rs("A5");
  CHECK(types_of(a5, {1, 2, 4}) == std::vector<std::string>{"A2", "A1"});
  CHECK(types_of(a5, {}) == std::vector<std::string>{});
  CHECK(types_of(a5, {1, 3, 5}) ==
        std::vector<std::string>{"A1", "A1", "A1"});

  CHECK(types_of(rs("B4"), {2, 3, 4}) == std::vector<std::string>{"B3"});
  CHECK(types_of(rs("C4"), {2, 3, 4}) == std::vector<std::string>{"C3"});
  CHECK(types_of(rs("B4"), {3, 4}) == std::vector<std::string>{"B2"});
  // A double bond whose short end is interior reads as type C.
  CHECK(types_of(rs("C4"), {3, 4}) == std::vector<std::string>{"B2"});
  CHECK(types_of(rs("F4"), {1, 2, 3}) == std::vector<std::string>{"B3"});
  CHECK(types_of(rs("F4"), {2, 3, 4}) == std::vector<std::string>{"C3"});
  CHECK(types_of(rs("F4"), {2, 3}) == std::vector<std::string>{"B2"});
  CHECK(types_of(rs("G2"), {1, 2}) == std::vector<std::string>{"G2"});

  RootSystem d5 = rs("D5");
  CHECK(types_of(d5, {4, 5}) == std::vector<std::string>{"A1", "A1"});
  CHECK(types_of(d5, {3, 4, 5}) == std::vector<std::string>{"A3"});
  CHECK(types_of(d5, {2, 3, 4, 5}) == std::vector<std::string>{"D4"});

  // E7: chain s1..s6 with s7 hanging off s4, so {2,3,4,7} is the chain
  // 2-3-4-7 and {3,4,5,7} is a star centered at 4.
  RootSystem e7 = rs("E7");
  CHECK(types_of(e7, {2, 3, 4, 7}) == std::vector<std::string>{"A4"});
  CHECK(types_of(e7, {3, 4, 5, 7}) == std::vector<std::string>{"D4"});
  CHECK(types_of(e7, {2, 3, 7}) == std::vector<std::string>{"A2", "A1"});
  CHECK(types_of(e7, {1, 2, 4, 7}) == std::vector<std::string>{"A2", "A2"});
  CHECK(types_of(rs("E8"), {1, 2, 3, 4, 5, 6, 7}) ==
        std::vector<std::string>{"A7"});
  CHECK(types_of(rs("E6"), {1, 2, 3, 4, 5, 6}) ==
        std::vector<std::string>{"E6"});
}

TEST_CASE("parabolic orders multiply over components") {
  RootSystem a5 = rs("A5");
  CHECK(parabolic_order(a5.dynkin(), {}) == 1);
  CHECK(parabolic_order(a5.dynkin(), {1, 2, 4}) == 12);
  CHECK(parabolic_order(a5.dynkin(), {1, 2, 3, 4, 5}) == 720);
  CHECK(parabolic_order(rs("B4").dynkin(), {2, 3, 4}) == 48);
  CHECK(parabolic_order(rs("F4").dynkin(), {1, 2, 3, 4}) == 1152);
  CHECK(parabolic_order(rs("E8").dynkin(), {1, 2, 3, 4, 5, 6, 7, 8}) ==
        BigInt(696729600));
}

TEST_CASE("node sets parse and print") {
  CHECK(parse_node_set("", 4) == NodeSet{});
  CHECK(parse_node_set("s1,s3", 4) == NodeSet{1, 3});
  CHECK(parse_node_set(" s2 , s4 ", 4) == NodeSet{2, 4});
  CHECK(parse_node_set("s3,s1,s3", 4) == NodeSet{1, 3});
  CHECK(parse_node_set("s10,s11", 12) == NodeSet{10, 11});
  CHECK(node_set_str({1, 3}) == "{s1,s3}");
  CHECK(node_set_str({}) == "{}");

  CHECK_THROWS_AS((void)parse_node_set("s0", 4), invalid_input_error);
  CHECK_THROWS_AS((void)parse_node_set("s5", 4), invalid_input_error);
  CHECK_THROWS_AS((void)parse_node_set("x1", 4), invalid_input_error);
  CHECK_THROWS_AS((void)parse_node_set("s", 4), invalid_input_error);
  CHECK_THROWS_AS((void)parse_node_set("s1x", 4), invalid_input_error);
  CHECK_THROWS_AS((void)parse_node_set("1", 4), invalid_input_error);
}

TEST_CASE("all_nodes spans the diagram and shared handles compare equal") {
  RootSystem r = rs("D4");
  CHECK(r.all_nodes() == NodeSet{1, 2, 3, 4});
  RootSystem again = rs("D4");
  CHECK(r.same_as(again));
  CHECK(r.cartan() == again.cartan());
  CHECK(r.positive_roots() == again.positive_roots());
  CHECK_FALSE(r.same_as(rs("B4")));
}
