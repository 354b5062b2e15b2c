#include "mfx/matrix.hpp"

#include <sstream>

#include "mfx/errors.hpp"

namespace mfx {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
    return m;
}

PolyMatrix PolyMatrix::from_rows(const RingPtr& ring,
                                 const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows[0].size();
    PolyMatrix m(ring, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) {
            check_same_ring(ring, rows[i][j].ring());
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::from_cols(const RingPtr& ring, std::size_t nrows,
                                 const std::vector<std::vector<Polynomial>>& cols) {
    PolyMatrix m(ring, nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != nrows) throw ShapeError("column length mismatch");
        for (std::size_t i = 0; i < nrows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return e_[i * cols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    check_same_ring(ring_, p.ring());
    e_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in +");
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_) throw ShapeError("matrix shape mismatch in *");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial acc(ring_);
            for (std::size_t k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * o.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    check_same_ring(ring_, f.ring());
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * f;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (!same_ring(ring_, o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return e_ == o.e_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<Polynomial> PolyMatrix::col(std::size_t j) const {
    std::vector<Polynomial> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

PolyMatrix PolyMatrix::submatrix(std::size_t i0, std::size_t j0, std::size_t nr,
                                 std::size_t nc) const {
    if (i0 + nr > rows_ || j0 + nc > cols_) throw ShapeError("submatrix out of range");
    PolyMatrix r(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(i0 + i, j0 + j));
    return r;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& js) const {
    PolyMatrix r(ring_, rows_, js.size());
    for (std::size_t j = 0; j < js.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, js[j]));
    return r;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.rows_ != b.rows_) throw ShapeError("hstack row mismatch");
    PolyMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.cols_ != b.cols_) throw ShapeError("vstack column mismatch");
    PolyMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
        for (std::size_t i = 0; i < a.rows_; ++i) r.set(i, j, a.at(i, j));
        for (std::size_t i = 0; i < b.rows_; ++i) r.set(a.rows_ + i, j, b.at(i, j));
    }
    return r;
}

PolyMatrix PolyMatrix::block_diag(const PolyMatrix& a, const PolyMatrix& b) {
    return block_diag(std::vector<PolyMatrix>{a, b});
}

PolyMatrix PolyMatrix::block_diag(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) throw ShapeError("block_diag of nothing");
    std::size_t nr = 0, nc = 0;
    for (const auto& b : blocks) {
        check_same_ring(blocks[0].ring(), b.ring());
        nr += b.rows();
        nc += b.cols();
    }
    PolyMatrix r(blocks[0].ring(), nr, nc);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.set(i0 + i, j0 + j, b.at(i, j));
        i0 += b.rows();
        j0 += b.cols();
    }
    return r;
}

Polynomial poly_rem(const Polynomial& p, const Polynomial& f) {
    if (f.is_zero()) return p;
    check_same_ring(p.ring(), f.ring());
    const auto& ring = p.ring();
    Polynomial r = p;
    Polynomial out(ring);
    const Term& lf = f.lead();
    while (!r.is_zero()) {
        const Term& lt = r.lead();
        if (mono_divides(lf.m, lt.m)) {
            r = r - f.shifted(mono_quot(lt.m, lf.m), lt.c / lf.c);
        } else {
            out = out + Polynomial::monomial(ring, lt.m, lt.c);
            r = r - Polynomial::monomial(ring, lt.m, lt.c);
        }
    }
    return out;
}

PolyMatrix PolyMatrix::reduced_mod(const Polynomial& f) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, poly_rem(at(i, j), f));
    return r;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

PolyMatrix parse_matrix(const RingPtr& ring,
                        const std::vector<std::vector<std::string>>& entries) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(entries.size());
    for (const auto& row : entries) {
        std::vector<Polynomial> r;
        r.reserve(row.size());
        for (const auto& s : row) r.push_back(parse_poly(ring, s));
        rows.push_back(std::move(r));
    }
    return PolyMatrix::from_rows(ring, rows);
}

}  // namespace mfx
