#ifndef WILM_IO_HPP
#define WILM_IO_HPP

#include "wilm/poly.hpp"
#include "wilm/valence.hpp"

#include <json.hpp>

namespace wilm {

using Json = nlohmann::ordered_json;

// Dyadics serialize as strings "mantissa*2^exponent"; complex
// coefficients as two-element arrays [re, im].

Json real_poly_to_json(const RealPoly& p);
RealPoly real_poly_from_json(const Json& j);

Json complex_poly_to_json(const ComplexPoly& p);
ComplexPoly complex_poly_from_json(const Json& j);

Json instance_to_json(const WilmshurstInstance& inst);
WilmshurstInstance instance_from_json(const Json& j);

// {"n", "m", "epsilon", "q", "lines": [{"j","samples","signs","lower"}],
//  "origin_is_zero", "total", "seed", "version", "precision_bits"}
Json certificate_to_json(const ValenceCertificate& cert);
ValenceCertificate certificate_from_json(const Json& j);

Json parse_json(const std::string& text); // throws SchemaError

} // namespace wilm

#endif
