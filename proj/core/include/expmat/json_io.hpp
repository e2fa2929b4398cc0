#ifndef EXPMAT_JSON_IO_HPP
#define EXPMAT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "expmat/classify.hpp"
#include "expmat/lnd.hpp"
#include "expmat/matrix.hpp"
#include "expmat/projmap.hpp"

namespace expmat {

/// Ordered JSON keeps key order canonical, so reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "expmat-report/1";
inline constexpr const char* kWitnessSchema = "expmat-witness/1";

Json field_to_json(const FieldCtxPtr& ctx);
FieldCtxPtr parse_field(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar parse_scalar(const FieldCtxPtr& ctx, const Json& j);

Json poly_to_json(const Poly& f);  // coefficient array, low-to-high
Poly parse_poly(const FieldCtxPtr& ctx, const Json& j);

Json ppoly_to_json(const PPoly& f);  // {"ppoly": [c0, c1, ...]}
PPoly parse_ppoly(const FieldCtxPtr& ctx, const Json& j);

Json poly_matrix_to_json(const PolyMatrix& m);  // {"field","n","entries"}
PolyMatrix parse_poly_matrix(const Json& j);

Json scalar_matrix_to_json(const ScalarMatrix& m);
ScalarMatrix parse_scalar_matrix(const Json& j);
/// Entries-only variant for matrices embedded in a known field context.
Json scalar_matrix_entries(const ScalarMatrix& m);
ScalarMatrix parse_scalar_matrix_entries(const FieldCtxPtr& ctx, const Json& j);

Json mpoly_to_json(const MPoly& f);  // [exponent-vector, coefficient] pairs
MPoly parse_mpoly(const FieldCtxPtr& ctx, std::size_t nvars, const Json& j);

Json projmap_to_json(const ProjMap& m);
ProjMap parse_projmap(const FieldCtxPtr& ctx, const Json& j);

Json witness_to_json(const FieldCtxPtr& ctx, const Witness& w);
Witness parse_witness(const Json& j);

Json derivation_to_json(const LinDerivation& d);  // {"field","n","images"}
LinDerivation parse_derivation(const Json& j);

Json birclass_to_json(const BirClass& c);

}  // namespace expmat

#endif
