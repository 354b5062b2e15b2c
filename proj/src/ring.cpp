#include "mfx/ring.hpp"

#include <algorithm>

#include "mfx/errors.hpp"

namespace mfx {

RingPtr make_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
    if (vars.empty()) throw InputError("ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable name: " + vars[i]);
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->field = field;
    r->order = order;
    return r;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatchError("ring context mismatch");
}

int mono_cmp(MonomialOrder order, const Monomial& a, const Monomial& b) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: compare total degree, then the last differing exponent
    // reversed (smaller last exponent is larger).
    std::uint64_t da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

}  // namespace mfx
