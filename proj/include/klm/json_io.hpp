#pragma once

#include <json.hpp>

#include "klm/graph.hpp"
#include "klm/hecke.hpp"
#include "klm/kl.hpp"
#include "klm/matroid.hpp"
#include "klm/poly.hpp"

namespace klm {

using nlohmann::json;

// A polynomial with no negative powers becomes a coefficient array starting
// at degree 0; otherwise {"low": ..., "coeffs": [...]}.  Coefficients
// outside the 64-bit range are rejected rather than truncated.
json poly_to_json(const IntPoly& p);

// Accepts both the array form and the {"low", "coeffs"} form.
IntPoly poly_from_json(const json& j);

// {"n": ..., "flats": [[elements], ...]}.  The lattice axioms are enforced;
// ranks are always recomputed.  Parallel elements and loops are allowed here
// and survive; callers wanting a simple matroid simplify afterwards.
Matroid matroid_from_json(const json& j, int cap = kDefaultCap);

// {"vertices": ..., "edges": [[a, b], ...]}.
Graph graph_from_json(const json& j);

json helement_to_json(const HElement& a);  // [{"flat": [labels], "poly": ...}]

json deletion_report_to_json(const DeletionReport& r);

mpz_class int_from_json(const json& j);
json int_to_json(const mpz_class& v);

} // namespace klm
