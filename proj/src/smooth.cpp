#include "hpoly/smooth.hpp"

#include <algorithm>

namespace hpoly {

std::string SmoothnessVerdict::summary() const {
  if (smooth) return "combinatorially smooth";
  std::string out = "not combinatorially smooth:";
  for (const auto& v : violations) out += "\n  - " + v.message;
  return out;
}

SmoothnessVerdict is_combinatorially_smooth(const RootSystem& rs,
                                            const NodeSet& J) {
  if (static_cast<int>(J.size()) >= rs.rank())
    throw invalid_input_error("J must be a proper subset of the " +
                              std::to_string(rs.rank()) +
                              " simple reflections");
  const DynkinGraph& g = rs.dynkin();
  auto comps = components(g, J);
  SmoothnessVerdict verdict;

  auto chain_ok = [&](const NodeSet& comp) {
    // Simply-laced chain: every induced bond single, every node with at most
    // two neighbours inside the component.
    for (int a : comp) {
      int deg = 0;
      for (int b : comp) {
        int m = g.bond(a, b);
        if (m == 0) continue;
        ++deg;
        if (m > 1) return false;
      }
      if (deg > 2) return false;
    }
    return true;
  };

  for (int s = 1; s <= rs.rank(); ++s) {
    if (J.count(s)) continue;
    std::vector<int> touching;  // nodes of J adjacent to s
    for (int t : J)
      if (g.adjacent(s, t)) touching.push_back(t);
    if (touching.empty()) continue;
    if (touching.size() > 1) {
      SmoothnessViolation v;
      v.kind = SmoothnessViolation::Kind::nonunique_noncommuting_node;
      v.s = s;
      v.message = "s" + std::to_string(s) + " fails to commute with " +
                  std::to_string(touching.size()) + " nodes of J";
      verdict.violations.push_back(std::move(v));
      continue;
    }
    const int t = touching.front();
    const Component* comp = nullptr;
    for (const auto& c : comps)
      if (c.nodes.count(t)) comp = &c;
    if (!chain_ok(comp->nodes)) {
      SmoothnessViolation v;
      v.kind = SmoothnessViolation::Kind::component_not_a_chain;
      v.s = s;
      v.component = comp->nodes;
      v.message = "component " + node_set_str(comp->nodes) + " met by s" +
                  std::to_string(s) + " is not a simply-laced chain";
      verdict.violations.push_back(std::move(v));
      continue;
    }
    int deg_in_comp = 0;
    for (int b : comp->nodes)
      if (g.adjacent(t, b)) ++deg_in_comp;
    if (deg_in_comp > 1) {
      SmoothnessViolation v;
      v.kind = SmoothnessViolation::Kind::attachment_not_terminal;
      v.s = s;
      v.component = comp->nodes;
      v.message = "s" + std::to_string(s) + " meets s" + std::to_string(t) +
                  " in the interior of component " +
                  node_set_str(comp->nodes);
      verdict.violations.push_back(std::move(v));
    }
  }

  for (const auto& c : comps) {
    std::vector<int> attached;
    for (int s = 1; s <= rs.rank(); ++s) {
      if (J.count(s)) continue;
      for (int t : c.nodes)
        if (g.adjacent(s, t)) {
          attached.push_back(s);
          break;
        }
    }
    if (attached.empty()) {
      SmoothnessViolation v;
      v.kind = SmoothnessViolation::Kind::component_unattached;
      v.component = c.nodes;
      v.message = "component " + node_set_str(c.nodes) +
                  " is met by no node outside J";
      verdict.violations.push_back(std::move(v));
    } else if (attached.size() > 1) {
      SmoothnessViolation v;
      v.kind = SmoothnessViolation::Kind::component_multiply_attached;
      v.component = c.nodes;
      std::string who;
      for (std::size_t i = 0; i < attached.size(); ++i)
        who += (i ? ", s" : "s") + std::to_string(attached[i]);
      v.message = "component " + node_set_str(c.nodes) + " is met by " +
                  std::to_string(attached.size()) + " outside nodes (" + who +
                  ")";
      verdict.violations.push_back(std::move(v));
    }
  }

  verdict.smooth = verdict.violations.empty();
  return verdict;
}

std::vector<NodeSet> enumerate_smooth_subsets(const RootSystem& rs) {
  const int n = rs.rank();
  if (n > 24)
    throw cap_exceeded_error(
        "smooth-subset enumeration is capped at rank 24 (2^rank subsets)");
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    NodeSet J;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) J.insert(i + 1);
    if (is_combinatorially_smooth(rs, J).smooth) out.push_back(std::move(J));
  }
  std::sort(out.begin(), out.end(), [](const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  });
  return out;
}

}  // namespace hpoly
