#pragma once

#include "mfx/presented.hpp"

namespace mfx {

// A*B = B*A = f*E with f != 0; validated on construction via make_mf.
struct MatrixFactorization {
    RingPtr ring;
    Polynomial f;
    PolyMatrix A, B;

    std::size_t size() const { return A.rows(); }
};

bool mf_verify(const MatrixFactorization& mf);
MatrixFactorization make_mf(Polynomial f, PolyMatrix A, PolyMatrix B);

// The designated cokernel: Cok A presented over S/(f).
PresentedModule mf_cokernel(const MatrixFactorization& mf);

// Recover B column-by-column from lifts of f*e_i through A.
MatrixFactorization mf_from_presentation(const PolyMatrix& A,
                                         const Polynomial& f);

// The mate swap (A,B) -> (B,A): Cok B is the canonical syzygy of Cok A.
MatrixFactorization mf_syzygy(const MatrixFactorization& mf);

MatrixFactorization mf_transpose(const MatrixFactorization& mf);

// Exactness of one full period of ...->B->A->... over S/(f) and of its dual,
// plus the identity Omega^2 = id on presentations.
bool mf_periodicity_check(const MatrixFactorization& mf);

MatrixFactorization mf_direct_sum(const MatrixFactorization& a,
                                  const MatrixFactorization& b);

// Lemma-style scaling: Cok A killed by y becomes Cok(xA) over S/(xy).
// Returns the presented module and asserts the annihilations.
PresentedModule mf_scale(const PolyMatrix& a, const Polynomial& y,
                         const Polynomial& x);

// A direct-summand witness between presented modules.
struct SummandWitness {
    PresentedModule sub, amb;
    PolyMatrix incl;  // amb.rank() x sub.rank()
    PolyMatrix proj;  // sub.rank() x amb.rank()
};

bool witness_check(const SummandWitness& w);

// Given Cok B a summand of Cok A (square presentations, both killed by y),
// produce a witness of Cok(xB) as a summand of Cok(xA) (+) (S/(x))^k,
// following the padded-presentation construction. The ambient presentation
// is block_diag(xA, x*E_k) over S/(xy).
SummandWitness lemma4_summand_scale(const PolyMatrix& a, const PolyMatrix& b,
                                    const SummandWitness& wit,
                                    const Polynomial& y, const Polynomial& x);

}  // namespace mfx
