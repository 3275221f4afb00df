#pragma once

#include <json.hpp>

#include "g2kit/filtration.hpp"
#include "g2kit/strata.hpp"
#include "g2kit/triality.hpp"

namespace g2kit {

using Json = nlohmann::json;

Json to_json(const FieldConfig& c);
FieldConfig field_config_from_json(const Json& j);

/// Sparse monomial string "a*t^k + …".
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const FieldContext* ctx);

/// 8 scalar strings in the fixed basis order.
Json to_json(const Octonion& x);
Octonion octonion_from_json(const Json& j, const FieldContext* ctx);

/// 64 scalar strings, row-major.
Json to_json(const EndV& x);
EndV end_from_json(const Json& j, const FieldContext* ctx);

Json to_json(const TrialityTriple& t);
TrialityTriple triple_from_json(const Json& j, const FieldContext* ctx);

/// {"basis": [vectors], "values": ["p/q", …]}.
Json to_json(const NormFn& a);
NormFn norm_from_json(const Json& j, const FieldContext* ctx);

/// Norm data plus the period m and the jump table.
Json to_json(const LatticeSeq& s);
LatticeSeq lattice_seq_from_json(const Json& j, const FieldContext* ctx);

/// Coefficient strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const FieldContext* ctx);

/// {"lattice", "n", "r", "beta", "witness": {"factors", "kernels", "valuations"}, "justification"}.
Json to_json(const Stratum& s);
Stratum stratum_from_json(const Json& j, const FieldContext* ctx);

/// {"check", "parameters", "generators_tested", "violations"}.
Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

Json to_json(const StratumReport& r);

}  // namespace g2kit
