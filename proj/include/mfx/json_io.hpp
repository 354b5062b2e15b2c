#pragma once

#include "json.hpp"
#include "mfx/ball.hpp"
#include "mfx/catalog.hpp"

namespace mfx {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Serialization is canonical: object keys sorted, polynomial terms in the
// ring's term order, so equal values produce byte-identical JSON.
Json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j);

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const RingPtr& r, const Json& j);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const RingPtr& r, const Json& j);

Json module_to_json(const PresentedModule& m);
PresentedModule module_from_json(const RingPtr& r, const Json& j);

Json mf_to_json(const MatrixFactorization& mf);
MatrixFactorization mf_from_json(const RingPtr& r, const Json& j);

Json filtered_to_json(const FilteredModule& fm);
FilteredModule filtered_from_json(const RingPtr& r, const Json& j);

Json claim_to_json(const ExactSequenceClaim& c);
ExactSequenceClaim claim_from_json(const RingPtr& r, const Json& j);

Json cert_to_json(const BallCertificate& c);
BallCertificate cert_from_json(const RingPtr& r, const Json& j);

Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const RingPtr& r, const Json& j);

Json report_to_json(const RadiusReport& r);

// Field access that throws InputError naming the missing/ill-typed key.
const Json& jfield(const Json& j, const char* key);

}  // namespace mfx
