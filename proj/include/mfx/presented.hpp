#pragma once

#include "mfx/groebner.hpp"

namespace mfx {

// Finitely presented module over S/I: the cokernel of
//   pres : (S/I)^cols -> (S/I)^rows.
// The zero module has a 0x0 presentation.
struct PresentedModule {
    RingPtr ring;
    std::vector<Polynomial> ideal;  // generators of I
    PolyMatrix pres;                // rows x cols over S

    std::size_t rank() const { return pres.rows(); }
};

PresentedModule zero_module(const RingPtr& ring,
                            const std::vector<Polynomial>& ideal);

// Groebner basis of the full relation submodule colmod(pres) + I*S^rows.
GroebnerBasis relations_gb(const PresentedModule& m);

bool ideals_equal(const RingPtr& ring, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b);
bool same_base_ring(const PresentedModule& a, const PresentedModule& b);

bool is_zero_module(const PresentedModule& m);

// F is tgt.rank() x src.rank(). Checks that F carries the relations of src
// into the relations of tgt, i.e. induces a morphism src -> tgt.
bool morphism_check(const PresentedModule& src, const PresentedModule& tgt,
                    const PolyMatrix& f);

// Equality of induced morphisms src -> tgt.
bool morphisms_equal(const PresentedModule& src, const PresentedModule& tgt,
                     const PolyMatrix& f, const PolyMatrix& g);

// f : a -> b and g : b -> a are mutually inverse isomorphisms.
bool iso_check(const PresentedModule& a, const PresentedModule& b,
               const PolyMatrix& f, const PolyMatrix& g);

// incl : m -> amb and proj : amb -> m with proj*incl == id_m, exhibiting m as
// a direct summand of amb.
bool summand_check(const PresentedModule& m, const PresentedModule& amb,
                   const PolyMatrix& incl, const PolyMatrix& proj);

// Generators of ker(f : src -> tgt) as vectors in S^{src.rank()}, reduced
// against the relations of src (empty means injective).
std::vector<FreeVec> morphism_kernel(const PresentedModule& src,
                                     const PresentedModule& tgt,
                                     const PolyMatrix& f);

// A complex  mods[0] -> mods[1] -> ... -> mods[k]  with maps[i] :
// mods[i] -> mods[i+1].
struct ExactSequenceClaim {
    std::vector<PresentedModule> mods;
    std::vector<PolyMatrix> maps;
};

// Verifies the claim is a complex, exact at every interior module. Pass
// require_left_injective / require_right_surjective to also check the ends
// (a short exact sequence sets both).
bool exact_check(const ExactSequenceClaim& c, bool require_left_injective,
                 bool require_right_surjective);

struct DirectSum {
    PresentedModule sum;
    std::vector<PolyMatrix> incl;  // sum.rank() x parts[i].rank()
    std::vector<PolyMatrix> proj;  // parts[i].rank() x sum.rank()
};

DirectSum direct_sum(const std::vector<PresentedModule>& parts);

}  // namespace mfx
