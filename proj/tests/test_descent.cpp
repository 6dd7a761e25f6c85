#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hpoly/descent.hpp"
#include "hpoly/errors.hpp"
#include "hpoly/intpoly.hpp"
#include "hpoly/root_system.hpp"
#include "hpoly/weyl.hpp"

using namespace hpoly;

namespace {

RootSystem rs(const std::string& t) {
  return build_root_system(CartanType::parse(t));
}

std::vector<WeylElt> words(const RootSystem& r,
                           const std::vector<std::vector<int>>& ws) {
  std::vector<WeylElt> out;
  for (const std::vector<int>& w : ws) out.push_back(word_element(r, w));
  return out;
}

}  // namespace

TEST_CASE("A2 relative to {s2}: one class of two reflections") {
  RootSystem r = rs("A2");
  DescentSystem ds = build_descent_system(r, {2});
  CHECK(ds.reflection_count() == 2);
  REQUIRE(ds.classes.size() == 1);
  CHECK(ds.classes.at(1) == words(r, {{1}, {2, 1}}));
  CHECK(ds.delta.at(1) == 2);

  AugmentedPoset poset = nu_stats(ds);
  // Quotient order: 1, s1, s2.s1.
  CHECK(poset.nu_plain == std::vector<int>{2, 1, 0});
  CHECK(poset.nu_weighted == std::vector<int>{4, 2, 0});
  CHECK(poset.nu_s[0].at(1) == 2);
  CHECK(poset.nu_s[1].at(1) == 1);
  CHECK(poset.nu_s[2].at(1) == 0);
  CHECK(poset.ascents[0].size() == 2);
  CHECK(poset.ascents[2].empty());
}

TEST_CASE("A3 relative to {s2,s3}: the chain quotient") {
  RootSystem r = rs("A3");
  DescentSystem ds = build_descent_system(r, {2, 3});
  REQUIRE(ds.classes.size() == 1);
  CHECK(ds.classes.at(1) == words(r, {{1}, {2, 1}, {3, 2, 1}}));
  CHECK(ds.delta.at(1) == 3);
  CHECK(ds.quotient.size() == 4);

  AugmentedPoset poset = nu_stats(ds);
  CHECK(poset.nu_plain == std::vector<int>{3, 2, 1, 0});
  CHECK(poset.nu_weighted == std::vector<int>{9, 6, 3, 0});
}

TEST_CASE("delta counts the adjacent component, plus one") {
  RootSystem r = rs("A3");
  SUBCASE("empty J: every delta is 1 and classes are singletons") {
    DescentSystem ds = build_descent_system(r, {});
    CHECK(ds.classes.size() == 3);
    for (int s = 1; s <= 3; ++s) {
      CHECK(ds.classes.at(s) == words(r, {{s}}));
      CHECK(ds.delta.at(s) == 1);
    }
    CHECK(ds.reflection_count() == 3);
  }
  SUBCASE("J = {s3}: s1 commutes, s2 does not") {
    DescentSystem ds = build_descent_system(r, {3});
    CHECK(ds.delta.at(1) == 1);
    CHECK(ds.delta.at(2) == 2);
    CHECK(ds.classes.at(1) == words(r, {{1}}));
    CHECK(ds.classes.at(2) == words(r, {{2}, {3, 2}}));
  }
  SUBCASE("B4, J = {s2,s3,s4}: s1 sees the whole component") {
    DescentSystem ds = build_descent_system(rs("B4"), {2, 3, 4});
    CHECK(ds.delta.at(1) == 4);
  }
}

TEST_CASE("a node meeting two components leaves delta undefined") {
  CHECK_THROWS_AS((void)build_descent_system(rs("A3"), {1, 3}),
                  delta_undefined_error);
  CHECK_THROWS_AS((void)build_descent_system(rs("A5"), {1, 3, 4}),
                  delta_undefined_error);
  // The same shape is fine when the middle node is inside J.
  CHECK_NOTHROW((void)build_descent_system(rs("A5"), {3, 4, 5}));
}

TEST_CASE("J must be a proper subset") {
  CHECK_THROWS_AS((void)build_descent_system(rs("A2"), {1, 2}),
                  invalid_input_error);
}

TEST_CASE("B3 relative to {s1,s2}: the cube quotient") {
  RootSystem r = rs("B3");
  DescentSystem ds = build_descent_system(r, {1, 2});
  REQUIRE(ds.classes.size() == 1);
  CHECK(ds.classes.at(3) == words(r, {{3}, {2, 3}, {1, 2, 3}}));
  CHECK(ds.delta.at(3) == 3);
  CHECK(ds.quotient.size() == 8);
  CHECK(ds.quotient.length_histogram ==
        std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1});

  // nu counts ascents into the three-element class: the histogram over the
  // quotient is binomial, and the weighted statistic scales by delta = 3.
  AugmentedPoset poset = nu_stats(ds);
  std::map<int, int> histogram;
  for (std::size_t i = 0; i < ds.quotient.size(); ++i) {
    histogram[poset.nu_plain[i]]++;
    CHECK(poset.nu_weighted[i] == 3 * poset.nu_plain[i]);
  }
  CHECK(histogram == std::map<int, int>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("the identity ascends everywhere; the longest element nowhere") {
  for (const char* t : {"A3", "B3", "C3"}) {
    RootSystem r = rs(t);
    for (const NodeSet& J : std::vector<NodeSet>{{}, {1}, {3}, {2, 3}}) {
      DescentSystem ds = build_descent_system(r, J);
      AugmentedPoset poset = nu_stats(ds);
      CHECK(poset.nu_plain.front() ==
            static_cast<int>(ds.reflection_count()));
      CHECK(poset.nu_plain.back() == 0);
      CHECK(poset.ascents.back().empty());
    }
  }
}

TEST_CASE("every (w, r) pair is decided, and nu tallies the ascents") {
  for (const char* t : {"A3", "B3"}) {
    RootSystem r = rs(t);
    for (const NodeSet& J : std::vector<NodeSet>{{}, {3}, {2, 3}}) {
      DescentSystem ds = build_descent_system(r, J);
      AugmentedPoset poset = nu_stats(ds);
      for (std::size_t i = 0; i < ds.quotient.size(); ++i) {
        const WeylElt& w = ds.quotient.elements[i];
        int total = 0;
        for (const auto& [s, cls] : ds.classes) {
          int count = 0;
          for (const WeylElt& refl : cls)
            if (ascent_or_descent(ds, w, refl) == Step::ascent) ++count;
          CHECK(count == poset.nu_s[i].at(s));
          total += count;
        }
        CHECK(total == poset.nu_plain[i]);
        CHECK(static_cast<int>(poset.ascents[i].size()) ==
              poset.nu_plain[i]);
        // The recorded ascent pairs point back at genuine ascents.
        for (const auto& [s, idx] : poset.ascents[i])
          CHECK(ascent_or_descent(
                    ds, w,
                    ds.classes.at(s)[static_cast<std::size_t>(idx)]) ==
                Step::ascent);
      }
    }
  }
}

TEST_CASE("ascent_or_descent validates its arguments") {
  RootSystem r = rs("A3");
  DescentSystem ds = build_descent_system(r, {3});
  WeylElt s3 = WeylElt::simple(r, 3);  // not a minimal representative
  CHECK_THROWS_AS((void)ascent_or_descent(ds, s3, WeylElt::simple(r, 1)),
                  invalid_input_error);
  CHECK_THROWS_AS((void)ascent_or_descent(ds, WeylElt::identity(r), s3),
                  invalid_input_error);
}

TEST_CASE("reflection classes partition W_J s W_J cap W^J") {
  RootSystem r = rs("B3");
  for (const NodeSet& J : std::vector<NodeSet>{{1}, {2}, {1, 2}, {2, 3}}) {
    DescentSystem ds = build_descent_system(r, J);
    std::set<WeylElt> seen;
    for (const auto& [s, cls] : ds.classes) {
      CHECK(J.count(s) == 0);
      for (const WeylElt& refl : cls) {
        CHECK(refl.in_quotient(J));
        CHECK_FALSE(refl.is_identity());
        CHECK(seen.insert(refl).second);  // disjointness
        CHECK(ds.class_of.at(refl) == s);
      }
    }
    CHECK(seen.size() == ds.reflection_count());
    // Every class contains its own generator.
    for (const auto& [s, cls] : ds.classes) {
      bool found = false;
      for (const WeylElt& refl : cls)
        if (refl == WeylElt::simple(r, s)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("two-variable Euler polynomial for the almost-full quotients") {
  // For A_n relative to {s3,...,s_n} the polynomial collapses to
  // sum over k of [k t1 + (n+1-k)] t2^(n-k).
  for (int n : {2, 3, 4}) {
    RootSystem r = rs("A" + std::to_string(n));
    NodeSet J;
    for (int s = 3; s <= n; ++s) J.insert(s);
    DescentSystem ds = build_descent_system(r, J);
    IntPoly2 h = two_variable_euler(ds);

    IntPoly2 expect;
    for (int k = 1; k <= n; ++k) {
      IntPoly2 bracket = IntPoly2::monomial(k, 1, 0) +
                         IntPoly2::monomial(n + 1 - k, 0, 0);
      expect += bracket * IntPoly2::monomial(1, 0, n - k);
    }
    CHECK(h == expect);
    CHECK(h.eval(1, 1) == BigInt(ds.quotient.size()));

    // Setting both variables to t^2 gives the torus-orbit Poincare series.
    AugmentedPoset poset = nu_stats(ds);
    IntPoly via_nu;
    for (int nu : poset.nu_plain) via_nu += IntPoly::monomial(1, 2 * nu);
    CHECK(h.specialize(2, 2) == via_nu);
  }
}

TEST_CASE("two-variable Euler polynomial needs exactly two classes") {
  CHECK_THROWS_AS((void)two_variable_euler(build_descent_system(rs("A2"), {2})),
                  invalid_input_error);
  CHECK_THROWS_AS((void)two_variable_euler(build_descent_system(rs("A3"), {})),
                  invalid_input_error);
}

TEST_CASE("descent systems respect the enumeration cap") {
  EnumLimits tiny;
  tiny.max_elements = 3;
  CHECK_THROWS_AS((void)build_descent_system(rs("A3"), {3}, tiny),
                  cap_exceeded_error);
}
