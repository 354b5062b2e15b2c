#pragma once

#include <map>

#include "mfx/matfac.hpp"

namespace mfx {

// Layer i of a filtered module: A kills x_i on the quotient M_i/M_{i-1},
// with A*B = x_i*E (layer 1 only needs this right mate; layers >= 2 are full
// matrix factorizations, B*A = x_i*E as well, and must be square).
struct FMLayer {
    PolyMatrix A;  // p_i x q_i (q_i = p_i for i >= 2)
    PolyMatrix B;  // q_i x p_i
};

struct FilteredModule {
    RingPtr ring;
    std::vector<Polynomial> xs;
    std::vector<FMLayer> layers;
    // extension blocks A_{ij} (p_i x p_j) for 0 <= i < j < n; absent = zero
    std::map<std::pair<std::size_t, std::size_t>, PolyMatrix> blocks;

    std::size_t n() const { return xs.size(); }
    Polynomial product() const;
    PolyMatrix block(std::size_t i, std::size_t j) const;
};

void validate_filtered(const FilteredModule& fm);

// Upper block triangular matrix with diagonal A_1..A_n and blocks A_{ij}.
PolyMatrix assemble_presentation(const FilteredModule& fm);

// The (2n-1)x(2n-1)-block matrix C (n >= 2).
PolyMatrix build_C(const FilteredModule& fm);

// Elementary block operation: row_dst += m * row_src (is_row), or
// col_dst += col_src * m, or a column permutation (perm nonempty). Offsets
// are concrete row/column indices into C.
struct ElementaryOp {
    bool is_row = false;
    std::size_t src = 0, dst = 0;
    PolyMatrix m;
    std::vector<std::size_t> perm;  // new_col j takes old col perm[j]
};

struct TransformRecord {
    PolyMatrix U, Uinv, V, Vinv;
    std::vector<ElementaryOp> log;
    PolyMatrix result;  // U*C*V reduced mod x_1...x_n == diag(A, 0)
};

// Executes the equivalence chain over S/(x_1...x_n); every factor of U and V
// is a logged elementary operation.
TransformRecord reduce_C(const FilteredModule& fm);

// Replays the log onto identity matrices; returns (U, V).
std::pair<PolyMatrix, PolyMatrix> replay_log(const FilteredModule& fm,
                                             const std::vector<ElementaryOp>& log);

struct Lemma3Output {
    ExactSequenceClaim seq;  // 0 -> Cok D -> M + (S/(x1..xn))^p -> Cok F -> 0
    std::size_t p = 0;
    TransformRecord record;  // empty log for n = 1
};

Lemma3Output lemma3_sequence(const FilteredModule& fm);

struct FiltrationResult {
    FilteredModule fm;
    PolyMatrix gens;    // ambient generator matrix G, maps Cok(assembled) -> M
    PolyMatrix from_m;  // inverse morphism M -> Cok(assembled)
};

// Colon filtration M_i = (0 :_M x_1...x_i); every quotient must admit a
// square zero-kernel presentation (layer 1 may stay rectangular).
FiltrationResult compute_filtration(const PresentedModule& m,
                                    const std::vector<Polynomial>& xs);

// Pushout regrouping ((1..k),(k+1..n)) -> ((1..k-1),(k..n)), 1-based k.
struct ReassocReport {
    FilteredModule fm;         // identical data
    PresentedModule pushout;   // L = Cok of the trailing block of A from k
    ExactSequenceClaim seq_yl; // 0 -> Cok A_k -> L -> Cok(tail k+1..n) -> 0
    ExactSequenceClaim seq_xm; // 0 -> Cok(head 1..k-1) -> M -> L -> 0
};

ReassocReport star_reassociate(const FilteredModule& fm, std::size_t k);

}  // namespace mfx
