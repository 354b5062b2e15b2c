#pragma once

#include "mfx/presented.hpp"

namespace mfx {

// Truncated linear-algebra oracle over F_p, independent of the Groebner
// engine: the degree-<=D piece of a presented module is spanned by monomial
// multiples of its generators modulo monomial multiples of its relations,
// and exactness is decided by explicit kernel/image computations in those
// finite-dimensional spaces. Kernels are computed below a per-map degree
// cutoff so every product stays within degree D.
bool truncated_exact_check(const ExactSequenceClaim& c,
                           bool require_left_injective,
                           bool require_right_surjective,
                           std::uint32_t degree);

// dim_k (S/I)_e for e = 0..degree, counting monomials of degree e outside
// the lead-term ideal of the reduced Groebner basis. Homogeneous input only.
std::vector<std::size_t> quotient_dims_from_gb(
    const RingPtr& ring, const std::vector<Polynomial>& gens,
    std::uint32_t degree);

// The same dimensions by brute force over F_p: number of degree-e monomials
// minus the rank of the degree-e Macaulay matrix of the generators.
std::vector<std::size_t> quotient_dims_macaulay(
    const RingPtr& ring, const std::vector<Polynomial>& gens,
    std::uint32_t degree);

}  // namespace mfx
