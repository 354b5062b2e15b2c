#include "mfx/catalog.hpp"

#include <algorithm>

namespace mfx {

namespace {

std::map<std::string, CatalogEntry>& registry() {
    static std::map<std::string, CatalogEntry> r;
    return r;
}

Polynomial var_pow(const RingPtr& ring, std::size_t i, std::uint32_t e) {
    Monomial m(ring->nvars(), 0);
    m[i] = e;
    return Polynomial::monomial(ring, m, Scalar::one(ring->field));
}

MatrixFactorization trivial_mf(const Polynomial& f) {
    const RingPtr& r = f.ring();
    PolyMatrix a(r, 1, 1), b(r, 1, 1);
    a.set(0, 0, f);
    b.set(0, 0, Polynomial::constant(r, 1));
    return make_mf(f, a, b);
}

// phi_j / psi_j band of the A-series family for x^2 + y^{m+1}.
MatrixFactorization a_band(const RingPtr& ring, long long m, long long j) {
    auto x = var_pow(ring, 0, 1);
    auto f = x * x + var_pow(ring, 1, static_cast<std::uint32_t>(m + 1));
    PolyMatrix a(ring, 2, 2), b(ring, 2, 2);
    auto yj = var_pow(ring, 1, static_cast<std::uint32_t>(j));
    auto yc = var_pow(ring, 1, static_cast<std::uint32_t>(m + 1 - j));
    a.set(0, 0, x);
    a.set(0, 1, yj);
    a.set(1, 0, -yc);
    a.set(1, 1, x);
    b.set(0, 0, x);
    b.set(0, 1, -yj);
    b.set(1, 0, yc);
    b.set(1, 1, x);
    return make_mf(f, a, b);
}

// (gh, (g), (h)), (gh, (h), (g)) and (gh, diag(g,h), diag(h,g)).
void add_product_mfs(std::vector<MatrixFactorization>& mfs,
                     const Polynomial& g, const Polynomial& h) {
    const RingPtr& r = g.ring();
    auto f = g * h;
    PolyMatrix ag(r, 1, 1), ah(r, 1, 1);
    ag.set(0, 0, g);
    ah.set(0, 0, h);
    mfs.push_back(make_mf(f, ag, ah));
    mfs.push_back(make_mf(f, ah, ag));
    mfs.push_back(make_mf(f, PolyMatrix::block_diag(ag, ah),
                          PolyMatrix::block_diag(ah, ag)));
}

long long get_param(const std::map<std::string, long long>& params,
                    const std::string& key, long long dflt,
                    bool required = false) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (required) throw InputError("missing parameter '" + key + "'");
    return dflt;
}

}  // namespace

void catalog_validate(const CatalogEntry& entry) {
    if (entry.name.empty()) throw InputError("catalog entry needs a name");
    for (const auto& mf : entry.mfs) {
        if (mf.f != entry.f)
            throw InputError("factorization of a different polynomial");
        if (!mf_verify(mf))
            throw InputError("entry '" + entry.name + "' fails mf_verify");
        if (!mf_periodicity_check(mf))
            throw InputError("entry '" + entry.name +
                             "' fails mf_periodicity_check");
    }
}

CatalogEntry catalog_get(const RingPtr& ring, const std::string& name,
                         const std::map<std::string, long long>& params) {
    auto it = registry().find(name);
    if (it != registry().end()) return it->second;

    if (ring->nvars() < 2)
        throw InputError("catalog entries need at least two variables");
    auto x = var_pow(ring, 0, 1);
    auto y = var_pow(ring, 1, 1);

    CatalogEntry e;
    e.name = name;
    e.params = params;
    if (name == "linear-x" || name == "linear") {
        e.f = x;
        e.mfs = {trivial_mf(e.f)};
    } else if (name == "linear-y") {
        e.f = y;
        e.mfs = {trivial_mf(e.f)};
    } else if (name == "A") {
        long long m = get_param(params, "m", 0, true);
        if (m < 1) throw InputError("A-series needs m >= 1");
        e.f = x * x + var_pow(ring, 1, static_cast<std::uint32_t>(m + 1));
        if (params.count("j")) {
            long long j = params.at("j");
            if (j < 1 || j > m) throw InputError("A-series needs 1 <= j <= m");
            e.mfs = {a_band(ring, m, j)};
        } else {
            e.mfs = {trivial_mf(e.f)};
            for (long long j = 1; j <= m; ++j)
                e.mfs.push_back(a_band(ring, m, j));
        }
    } else if (name == "D") {
        long long n = get_param(params, "n", 0, true);
        if (n < 4) throw InputError("D-series needs n >= 4");
        auto h = x * x + var_pow(ring, 1, static_cast<std::uint32_t>(n - 2));
        e.f = y * h;
        e.mfs = {trivial_mf(e.f)};
        add_product_mfs(e.mfs, y, h);
    } else if (name == "E6") {
        e.f = x * x * x + var_pow(ring, 1, 4);
        e.mfs = {trivial_mf(e.f)};
    } else if (name == "E7") {
        auto h = x * x + y * y * y;
        e.f = x * h;
        e.mfs = {trivial_mf(e.f)};
        add_product_mfs(e.mfs, x, h);
    } else if (name == "E8") {
        e.f = x * x * x + var_pow(ring, 1, 5);
        e.mfs = {trivial_mf(e.f)};
    } else {
        throw InputError("unknown catalog name '" + name + "'");
    }
    catalog_validate(e);
    return e;
}

std::vector<CatalogInfo> catalog_list() {
    std::vector<CatalogInfo> out = {
        {"A", "m >= 1, optional 1 <= j <= m"},
        {"D", "n >= 4"},
        {"E6", ""},
        {"E7", ""},
        {"E8", ""},
        {"linear-x", ""},
        {"linear-y", ""},
    };
    for (const auto& [name, entry] : registry()) {
        std::string ps;
        for (const auto& [k, v] : entry.params)
            ps += (ps.empty() ? "" : ", ") + k + " = " + std::to_string(v);
        out.push_back({name, ps});
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogInfo& a, const CatalogInfo& b) {
                  return a.name < b.name;
              });
    return out;
}

void catalog_register(const CatalogEntry& entry) {
    catalog_validate(entry);
    registry()[entry.name] = entry;
}

}  // namespace mfx
