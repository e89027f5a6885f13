#ifndef QWITT_JSONIO_HPP
#define QWITT_JSONIO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qwitt/lambda.hpp"
#include "qwitt/necklace.hpp"
#include "qwitt/witt.hpp"

namespace qwitt {

using Json = nlohmann::json;

// Wire document for coordinate vectors:
//   {"ring": "Zq", "g": "q", "trunc": 2, "coords": ["1", "0"]}
//   {"ring": "Z",  "m": 0,   "trunc": 4, "coords": [...]}
// Series documents use key "series" (coefficients of t^0..t^N).

WittContext context_from_json(const Json& j);
Json context_to_json(const WittContext& ctx);

WittVector witt_from_json(const Json& j);
Json witt_to_json(const WittVector& a);

NecklaceVector necklace_from_json(const Json& j);
Json necklace_to_json(const NecklaceVector& a);

GhostVector ghost_from_json(const Json& j);
Json ghost_to_json(const GhostVector& a);

LambdaElement lambda_from_json(const Json& j);
Json lambda_to_json(const LambdaElement& s);

Json defining_polys_to_json(int n, const DefiningPolys& dp);

} // namespace qwitt

#endif
