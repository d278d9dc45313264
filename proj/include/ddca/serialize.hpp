#pragma once

// Machine-readable JSON forms of elements, vectors and reports. Sites and
// matrix indices are 1-based in every format; coefficients use the
// polynomial text form.

#include <string>
#include <vector>

#include "json.hpp"

#include "ddca/guay.hpp"
#include "ddca/interp.hpp"
#include "ddca/polyrep.hpp"
#include "ddca/relations.hpp"
#include "ddca/vlrep.hpp"

namespace ddca {

using nlohmann::json;

inline constexpr int kSerialVersion = 1;

/// {format: "ddca-element", version, n, r, t, k, terms: [{xExp, slots, perm, yExp, coeff}]}
json to_json(const CherednikElement& a);
/// Context comes from n, r, t, k. Slot entries [site, a, b] with (a, b) = (r, r)
/// are rewritten in the canonical basis.
CherednikElement element_from_json(const json& j);

/// Orbit representatives in the same term format, format "ddca-spherical".
json to_json(const SphericalElement& b);
SphericalElement spherical_from_json(const json& j);

json to_json(const PolyTensorVector& v);
json to_json(const VlModel& model, const VlVector& v);
VlVector vl_vector_from_json(const json& j, int l);

json to_json(const TExpansion& ex, int r);
TExpansion t_expansion_from_json(const json& j, int r);

json to_json(const VerificationReport& rep);
json to_json(const SquareCheck& c);
json to_json(const RelationFamilyResult& res);

/// Fixed formatting: compact, or two-space indentation with --pretty.
std::string dump(const json& j, bool pretty);

}  // namespace ddca
