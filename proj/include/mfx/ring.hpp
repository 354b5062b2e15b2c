#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "mfx/field.hpp"

namespace mfx {

enum class MonomialOrder { Grevlex, Lex };

// Exponent vector; length = number of variables of the ring context.
using Monomial = std::vector<std::uint32_t>;

struct Ring {
    std::vector<std::string> vars;
    Field field;
    MonomialOrder order = MonomialOrder::Grevlex;

    bool operator==(const Ring&) const = default;
    std::size_t nvars() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field,
                  MonomialOrder order = MonomialOrder::Grevlex);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void check_same_ring(const RingPtr& a, const RingPtr& b);

inline std::uint64_t mono_deg(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

// -1, 0, +1 with a > b meaning a comes first.
int mono_cmp(MonomialOrder order, const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_quot(const Monomial& b, const Monomial& a);  // b / a, caller checks
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
inline bool mono_is_one(const Monomial& m) {
    for (auto e : m)
        if (e) return false;
    return true;
}

}  // namespace mfx
