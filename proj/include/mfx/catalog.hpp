#pragma once

#include <map>
#include <string>

#include "mfx/matfac.hpp"

namespace mfx {

// A named polynomial from the test set together with matrix factorizations
// of it. Every listed factorization passes mf_verify and
// mf_periodicity_check; entries are validated when constructed or
// registered.
struct CatalogEntry {
    std::string name;
    std::map<std::string, long long> params;
    Polynomial f;
    std::vector<MatrixFactorization> mfs;
};

// Built-in shapes: "linear-x" x, "linear-y" y, "A" x^2+y^{m+1} (m >= 1,
// optional j selecting one band of the family), "D" x^2 y + y^{n-1}
// (n >= 4), "E6" x^3+y^4, "E7" x^3+x y^3, "E8" x^3+y^5. The ring must have
// at least two variables; the first two play the roles of x and y.
// Throws InputError on unknown names or out-of-range parameters.
CatalogEntry catalog_get(const RingPtr& ring, const std::string& name,
                         const std::map<std::string, long long>& params = {});

struct CatalogInfo {
    std::string name;
    std::string params;  // human-readable parameter ranges
};

// Deterministic sorted listing of built-in and registered names.
std::vector<CatalogInfo> catalog_list();

// Adds a user entry after validating every factorization. The registry is
// append-only and meant to be filled before concurrent reads start.
void catalog_register(const CatalogEntry& entry);

// Validates an entry the same way registration does; throws InputError when
// a factorization fails mf_verify or mf_periodicity_check.
void catalog_validate(const CatalogEntry& entry);

}  // namespace mfx
