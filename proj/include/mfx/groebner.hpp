#pragma once

#include <optional>
#include <vector>

#include "mfx/matrix.hpp"

namespace mfx {

// Column vector over S, an element of the free module S^rank.
using FreeVec = std::vector<Polynomial>;

// Sparse module element used internally by the Groebner engine: terms
// (position, monomial, coefficient) sorted descending by the module order.
// The module order is position-over-term with lower position taken larger,
// layered over the ring's monomial order.
struct ModuleTerm {
    std::uint32_t pos;
    Monomial m;
    Scalar c;

    bool operator==(const ModuleTerm&) const = default;
};
using MVec = std::vector<ModuleTerm>;

int module_term_cmp(MonomialOrder order, std::uint32_t pa, const Monomial& ma,
                    std::uint32_t pb, const Monomial& mb);

MVec to_mvec(const RingPtr& ring, const FreeVec& v);
FreeVec from_mvec(const RingPtr& ring, std::size_t rank, const MVec& v);

// Reduced Groebner basis of a submodule of S^rank (rank 1 = ideal case).
// Canonical: independent of generator order.
struct GroebnerBasis {
    RingPtr ring;
    std::size_t rank = 0;
    std::vector<MVec> elems;  // monic, auto-reduced, sorted descending by lead

    std::vector<FreeVec> generators() const;
};

GroebnerBasis groebner_basis(const RingPtr& ring, std::size_t rank,
                             const std::vector<FreeVec>& gens);
GroebnerBasis ideal_gb(const RingPtr& ring, const std::vector<Polynomial>& gens);

FreeVec normal_form(const FreeVec& v, const GroebnerBasis& gb);
bool in_module(const FreeVec& v, const GroebnerBasis& gb);

// Groebner basis of the column module of P augmented with ideal multiples of
// the standard basis: the relation module of Cok(P) over S/(ideal).
GroebnerBasis column_module_gb(const PolyMatrix& P,
                               const std::vector<Polynomial>& ideal);

// Solve A*c = b modulo the span of `modulo`*S^m and the columns of
// *extra_rel (if given). Returns std::nullopt when b is not in the image.
std::optional<FreeVec> lift_solve(const PolyMatrix& A, const FreeVec& b,
                                  const std::vector<Polynomial>& modulo,
                                  const PolyMatrix* extra_rel = nullptr);

// Generators of ker(A : (S/(modulo))^n -> (S/(modulo))^m), with the target
// additionally quotiented by the columns of *extra_rel when given. Each
// generator is reduced against modulo*S^n; generators lying in modulo*S^n
// are dropped, so an empty result means the kernel is zero.
std::vector<FreeVec> module_kernel(const PolyMatrix& A,
                                   const std::vector<Polynomial>& modulo,
                                   const PolyMatrix* extra_rel = nullptr);

}  // namespace mfx
