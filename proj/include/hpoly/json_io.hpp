#pragma once

#include <json.hpp>

#include "hpoly/descent.hpp"
#include "hpoly/hpolynomial.hpp"
#include "hpoly/intpoly.hpp"
#include "hpoly/oracle.hpp"
#include "hpoly/smooth.hpp"
#include "hpoly/weyl.hpp"

namespace hpoly {

// Insertion-ordered JSON so that output is byte-stable across runs.
using json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as JSON numbers; anything larger
// becomes a decimal string.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

// {"var": "t", "coeffs": {"0": 1, "2": 11}} with exponents ascending.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

// {"vars": ["t1", "t2"], "coeffs": {"1,0": 2}} with exponent pairs ascending.
json poly2_to_json(const IntPoly2& p);
IntPoly2 poly2_from_json(const json& j);

json node_set_to_json(const NodeSet& J);
json element_to_json(const WeylElt& w);
json quotient_to_json(const ParabolicQuotient& q);
json descent_to_json(const DescentSystem& ds, const AugmentedPoset& poset);
json verdict_to_json(const SmoothnessVerdict& v);
json report_to_json(const HPolyReport& r);
json orbit_profiles_to_json(int n, const std::vector<OrbitProfile>& profiles);
json orbit_report_to_json(const MonoidOrbitReport& r);

}  // namespace hpoly
