#ifndef BURSTKIT_JSON_IO_HPP
#define BURSTKIT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "burstkit/bounds.hpp"
#include "burstkit/codes.hpp"
#include "burstkit/listdec.hpp"
#include "burstkit/resultant.hpp"

namespace burstkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "burstkit/v1";

/// {"p", "m", "modulus"} with coefficients constant term first.
Json field_to_json(const Field& field);
/// Rebuilds the field; a supplied modulus must equal the deterministic one.
FieldPtr field_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Field& field, const Json& j);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& field, const Json& j);
Json poly_to_json(const Poly& p);

/// {"field", "n", "kind", "H" | "codewords", "meta"}.
Json code_to_json(const CodeHandle& code);
/// Accepts "H", "G" (linear) or "codewords" (explicit).
CodeHandle code_from_json(const Json& j);

Json pattern_to_json(const BurstPattern& p);
Json decode_to_json(const ListDecodeResult& r);
Json cert_to_json(const CertReport& r);
Json verdict_to_json(const BoundVerdict& v);

}  // namespace burstkit

#endif  // BURSTKIT_JSON_IO_HPP
