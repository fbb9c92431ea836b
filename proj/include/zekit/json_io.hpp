#pragma once

// JSON encodings. A complex number is [re, im]; a matrix is
// {"rows": n, "cols": m, "data": [[re, im], ...]} in row-major order.

#include <string>

#include "json.hpp"
#include "zekit/angle.hpp"
#include "zekit/chansynth.hpp"
#include "zekit/codesearch.hpp"
#include "zekit/klcodes.hpp"
#include "zekit/matcore.hpp"
#include "zekit/observables.hpp"
#include "zekit/opsys.hpp"

namespace zekit {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
/// {"fraction": "p/q", "radians": x}
Json to_json(const Angle& a);
/// {"ambient_dim": n, "basis": [CMatrix...]}
Json to_json(const OperatorSystem& system);
/// {"d_A": n, "d_B": m, "kraus": [CMatrix...]}
Json to_json(const Channel& channel);
/// {"ambient_dim": n, "vectors": [[[re, im], ...], ...]}
Json to_json(const CodeCandidate& code);
/// {"ambient_dim": n, "effects": [CMatrix...]}
Json to_json(const Observable& obs);
Json to_json(const KLReport& report);
Json to_json(const FeasibilityReport& report);
Json to_json(const ValidationVerdict& verdict);

// Decoders throw InvalidInput on malformed documents.
cplx complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
OperatorSystem system_from_json(const Json& j);
Channel channel_from_json(const Json& j);
/// Accepts {"vectors": [...]} or a bare list of vectors; vectors are
/// re-orthonormalized only if `orthonormalize` is set.
CodeCandidate code_from_json(const Json& j, bool orthonormalize = false);
Observable observable_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace zekit
