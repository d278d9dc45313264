#pragma once

// Text input for elements of H_{t,k}(n, r), 1-based:
//   2/3*t*x[1]*y[2] - k*s[1,2] + E[1,2][3]*sigma[1,3] + (x[1] + y[1])^2
// Factors: rationals, t, k, x[i], y[i], s[i,j], sigma[i,j], E[a,b][i].

#include <string>

#include "ddca/cherednik.hpp"

namespace ddca {

/// Throws ParseError on malformed text and the generators' errors on bad indices.
CherednikElement parse_element(const std::string& text, const ContextPtr& ctx);

}  // namespace ddca
