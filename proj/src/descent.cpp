#include "hpoly/descent.hpp"

#include <algorithm>
#include <set>

namespace hpoly {

std::size_t DescentSystem::reflection_count() const {
  std::size_t n = 0;
  for (const auto& [s, cls] : classes) n += cls.size();
  return n;
}

DescentSystem build_descent_system(const RootSystem& rs, const NodeSet& J,
                                   const EnumLimits& limits) {
  if (static_cast<int>(J.size()) >= rs.rank())
    throw invalid_input_error("J must be a proper subset of the " +
                              std::to_string(rs.rank()) +
                              " simple reflections");
  DescentSystem ds;
  ds.rs = rs;
  ds.J = J;
  ds.quotient = enumerate_quotient(rs, J, limits);

  // delta first: it only needs the diagram, and an undefined delta should be
  // reported before any heavy enumeration of classes.
  auto comps = components(rs.dynkin(), J);
  for (int s = 1; s <= rs.rank(); ++s) {
    if (J.count(s)) continue;
    const Component* attached = nullptr;
    int attached_count = 0;
    for (const auto& c : comps) {
      bool touches = std::any_of(c.nodes.begin(), c.nodes.end(), [&](int t) {
        return rs.dynkin().adjacent(s, t);
      });
      if (touches) {
        ++attached_count;
        attached = &c;
      }
    }
    if (attached_count > 1)
      throw delta_undefined_error(
          "delta(s" + std::to_string(s) + ") is undefined: s" +
          std::to_string(s) + " fails to commute with " +
          std::to_string(attached_count) + " components of J=" +
          node_set_str(J) + "; such a J is not combinatorially smooth");
    ds.delta[s] =
        attached_count == 0 ? 1 : static_cast<int>(attached->nodes.size()) + 1;
  }

  std::vector<WeylElt> wj = enumerate_parabolic_subgroup(rs, J, limits);
  for (int s = 1; s <= rs.rank(); ++s) {
    if (J.count(s)) continue;
    WeylElt gen = WeylElt::simple(rs, s);
    std::set<WeylElt> cls;
    for (const WeylElt& u : wj) cls.insert(min_coset_rep(u * gen, J));
    std::vector<WeylElt> sorted(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const WeylElt& x, const WeylElt& y) {
                if (x.length() != y.length()) return x.length() < y.length();
                return x < y;
              });
    for (const WeylElt& r : sorted) {
      if (r.is_identity())
        throw internal_error("identity appeared in a reflection class");
      if (!ds.class_of.emplace(r, s).second)
        throw internal_error("reflection classes are not disjoint");
    }
    ds.classes[s] = std::move(sorted);
  }
  return ds;
}

Step ascent_or_descent(const DescentSystem& ds, const WeylElt& w,
                       const WeylElt& r) {
  if (!w.in_quotient(ds.J))
    throw invalid_input_error("element " + w.word_str() +
                              " is not a minimal coset representative");
  if (!ds.class_of.count(r))
    throw invalid_input_error("element " + r.word_str() +
                              " is not in the reflection set S^J");
  WeylElt p = min_coset_rep(w * r, ds.J);
  if (p.length() == w.length())
    throw internal_error("projection of w*r has the length of w");
  return p.length() < w.length() ? Step::descent : Step::ascent;
}

AugmentedPoset nu_stats(const DescentSystem& ds) {
  AugmentedPoset ap;
  const auto& elems = ds.quotient.elements;
  ap.nu_s.resize(elems.size());
  ap.nu_plain.assign(elems.size(), 0);
  ap.nu_weighted.assign(elems.size(), 0);
  ap.ascents.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& [s, cls] : ds.classes) {
      int count = 0;
      for (std::size_t k = 0; k < cls.size(); ++k)
        if (ascent_or_descent(ds, elems[i], cls[k]) == Step::ascent) {
          ++count;
          ap.ascents[i].emplace_back(s, static_cast<int>(k));
        }
      ap.nu_s[i][s] = count;
      ap.nu_plain[i] += count;
      ap.nu_weighted[i] += ds.delta.at(s) * count;
    }
  }
  return ap;
}

IntPoly2 two_variable_euler(const DescentSystem& ds) {
  if (ds.classes.size() != 2)
    throw invalid_input_error(
        "two-variable ascent polynomial needs exactly two nodes outside J, "
        "got " +
        std::to_string(ds.classes.size()));
  AugmentedPoset ap = nu_stats(ds);
  const int s1 = ds.classes.begin()->first;
  const int s2 = std::next(ds.classes.begin())->first;
  IntPoly2 h;
  for (std::size_t i = 0; i < ds.quotient.size(); ++i)
    h += IntPoly2::monomial(1, ap.nu_s[i].at(s1), ap.nu_s[i].at(s2));
  return h;
}

}  // namespace hpoly
