#pragma once

#include <vector>

#include "mfx/polynomial.hpp"

namespace mfx {

// Dense matrix of polynomials, row-major. 0x0 is allowed and presents the
// zero module.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const RingPtr& ring, std::size_t n);
    static PolyMatrix from_rows(const RingPtr& ring,
                                const std::vector<std::vector<Polynomial>>& rows);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Polynomial p);

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix scaled(const Polynomial& f) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Polynomial> col(std::size_t j) const;
    PolyMatrix submatrix(std::size_t i0, std::size_t j0, std::size_t nr,
                         std::size_t nc) const;
    PolyMatrix select_cols(const std::vector<std::size_t>& js) const;

    static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks);
    static PolyMatrix from_cols(const RingPtr& ring, std::size_t rows,
                                const std::vector<std::vector<Polynomial>>& cols);

    // Entrywise remainder under division by f (quotient-ring reduction for a
    // principal ideal).
    PolyMatrix reduced_mod(const Polynomial& f) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> e_;
};

// Remainder of p on division by the single polynomial f.
Polynomial poly_rem(const Polynomial& p, const Polynomial& f);

// Convenience for tests and the catalog: entries given as expressions.
PolyMatrix parse_matrix(const RingPtr& ring,
                        const std::vector<std::vector<std::string>>& entries);

}  // namespace mfx
