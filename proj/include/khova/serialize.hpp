#pragma once

#include "json.hpp"

#include "khova/complex.hpp"
#include "khova/homology.hpp"
#include "khova/hypercube.hpp"
#include "khova/laurent.hpp"

namespace khova {

using Json = nlohmann::json;

// Term arrays: [[e, c], ...] and [[qe, te, c], ...] in ascending exponent
// order. Coefficients outside the int64 range are written as strings.
Json to_json(const LaurentPoly1& p);
Json to_json(const LaurentPoly2& p);
// Throw ParseError on malformed input.
LaurentPoly1 laurent1_from_json(const Json& j);
LaurentPoly2 laurent2_from_json(const Json& j);

// [[degree, terms], ...]
Json to_json(const HomologyTable& table);

Json hypercube_to_json(const Hypercube& cube, const KnotDiagram& diagram);
std::string hypercube_to_text(const Hypercube& cube, const KnotDiagram& diagram);

Json complex_to_json(const ChainComplex& complex, const KnotDiagram& diagram);
std::string complex_to_text(const ChainComplex& complex, const KnotDiagram& diagram);

}  // namespace khova
