#include "mfx/truncated.hpp"

#include <algorithm>
#include <map>

namespace mfx {

namespace {

void enumerate_monos(Monomial& m, std::size_t pos, std::uint32_t left,
                     std::vector<Monomial>& out) {
    if (pos + 1 == m.size()) {
        m[pos] = left;
        out.push_back(m);
        return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
        m[pos] = e;
        enumerate_monos(m, pos + 1, left - e, out);
    }
    m[pos] = 0;
}

// All monomials of total degree <= cap, graded, deterministic order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t cap) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    if (nvars == 0) {
        out.push_back(m);
        return out;
    }
    for (std::uint32_t d = 0; d <= cap; ++d) enumerate_monos(m, 0, d, out);
    return out;
}

using Row = std::vector<std::uint32_t>;

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Echelon-form accumulator over F_p: one stored row per pivot column.
class FpSpace {
public:
    FpSpace(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

    // Reduces v against the stored rows in place; returns the index of the
    // leading nonzero entry, or n_ when v reduces to zero.
    std::size_t reduce(Row& v) const {
        for (std::size_t j = 0; j < n_; ++j) {
            if (v[j] == 0) continue;
            auto it = piv_.find(j);
            if (it == piv_.end()) return j;
            const Row& r = rows_[it->second];
            std::uint32_t c = v[j];  // r has pivot 1 at j
            for (std::size_t k = j; k < n_; ++k)
                v[k] = static_cast<std::uint32_t>(
                    (v[k] + static_cast<std::uint64_t>(p_ - c) * r[k]) % p_);
        }
        return n_;
    }

    bool contains(Row v) const { return reduce(v) == n_; }

    // Returns true when v was independent (rank grew).
    bool add(Row v) {
        std::size_t j = reduce(v);
        if (j == n_) return false;
        std::uint32_t inv = fp_inv(v[j], p_);
        for (std::size_t k = j; k < n_; ++k)
            v[k] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(v[k]) * inv % p_);
        piv_[j] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::uint32_t p_;
    std::size_t n_;
    std::vector<Row> rows_;
    std::map<std::size_t, std::size_t> piv_;
};

struct MonoTable {
    std::vector<Monomial> list;
    std::map<Monomial, std::size_t> index;

    MonoTable(std::size_t nvars, std::uint32_t cap) {
        list = monomials_up_to(nvars, cap);
        for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = i;
    }
};

std::uint64_t matrix_degree(const PolyMatrix& a) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            d = std::max(d, a.at(i, j).total_degree());
    return d;
}

std::uint64_t vec_degree(const FreeVec& v) {
    std::uint64_t d = 0;
    for (const auto& p : v) d = std::max(d, p.total_degree());
    return d;
}

// Coordinates of a polynomial vector in F_p^{rank * |mt|}.
Row encode(const FreeVec& v, const MonoTable& mt, std::uint32_t p) {
    Row out(v.size() * mt.list.size(), 0);
    for (std::size_t t = 0; t < v.size(); ++t)
        for (const auto& term : v[t].terms()) {
            auto it = mt.index.find(term.m);
            if (it == mt.index.end())
                throw InputError("truncation degree too small");
            out[t * mt.list.size() + it->second] = term.c.residue() % p;
        }
    return out;
}

FreeVec matrix_col(const PolyMatrix& a, std::size_t j) {
    FreeVec v;
    v.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v.push_back(a.at(i, j));
    return v;
}

// Span of all degree-<=cap monomial multiples of the module's relations
// (presentation columns plus ideal multiples of the unit vectors).
FpSpace relation_span(const PresentedModule& m, const MonoTable& mt,
                      std::uint32_t cap, std::uint32_t p) {
    FpSpace sp(p, m.rank() * mt.list.size());
    auto add_multiples = [&](const FreeVec& c) {
        std::uint64_t dc = vec_degree(c);
        if (dc > cap) return;
        for (const auto& mono : mt.list) {
            if (mono_deg(mono) + dc > cap) continue;
            FreeVec shifted;
            shifted.reserve(c.size());
            for (const auto& q : c)
                shifted.push_back(q.shifted(mono, Scalar::one(m.ring->field)));
            sp.add(encode(shifted, mt, p));
        }
    };
    for (std::size_t j = 0; j < m.pres.cols(); ++j)
        add_multiples(matrix_col(m.pres, j));
    for (const auto& g : m.ideal)
        for (std::size_t t = 0; t < m.rank(); ++t) {
            FreeVec e(m.rank(), Polynomial::zero(m.ring));
            e[t] = g;
            add_multiples(e);
        }
    return sp;
}

// Kernel of the map induced by `f` from degree-<=cutoff vectors of src into
// the target space modulo tgt_rel. Returns coordinate vectors in src space.
std::vector<Row> truncated_kernel(const PresentedModule& src,
                                  const PolyMatrix& f, const FpSpace& tgt_rel,
                                  const MonoTable& mt, std::uint32_t cutoff,
                                  std::uint32_t p) {
    std::size_t nsrc = src.rank() * mt.list.size();
    std::vector<Row> kernel;
    // echelon pairs (residual image, source combination)
    std::vector<std::pair<Row, Row>> stored;
    std::map<std::size_t, std::size_t> piv;
    std::size_t ntgt = f.rows() * mt.list.size();
    for (std::size_t t = 0; t < src.rank(); ++t)
        for (std::size_t mi = 0; mi < mt.list.size(); ++mi) {
            const Monomial& mono = mt.list[mi];
            if (mono_deg(mono) > cutoff) continue;
            FreeVec img(f.rows(), Polynomial::zero(src.ring));
            for (std::size_t i = 0; i < f.rows(); ++i)
                img[i] = f.at(i, t).shifted(mono,
                                            Scalar::one(src.ring->field));
            Row res = encode(img, mt, p);
            tgt_rel.reduce(res);
            Row combo(nsrc, 0);
            combo[t * mt.list.size() + mi] = 1;
            // reduce against stored pairs
            for (std::size_t j = 0; j < ntgt; ++j) {
                if (res[j] == 0) continue;
                auto it = piv.find(j);
                if (it == piv.end()) break;
                const auto& [sr, sc] = stored[it->second];
                std::uint64_t c = p - res[j];
                for (std::size_t k = j; k < ntgt; ++k)
                    res[k] = static_cast<std::uint32_t>((res[k] + c * sr[k]) %
                                                        p);
                for (std::size_t k = 0; k < nsrc; ++k)
                    combo[k] = static_cast<std::uint32_t>(
                        (combo[k] + c * sc[k]) % p);
            }
            std::size_t lead = ntgt;
            for (std::size_t j = 0; j < ntgt; ++j)
                if (res[j] != 0) {
                    lead = j;
                    break;
                }
            if (lead == ntgt) {
                kernel.push_back(std::move(combo));
            } else {
                std::uint32_t inv = fp_inv(res[lead], p);
                for (std::size_t k = lead; k < ntgt; ++k)
                    res[k] = static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(res[k]) * inv % p);
                for (std::size_t k = 0; k < nsrc; ++k)
                    combo[k] = static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(combo[k]) * inv % p);
                piv[lead] = stored.size();
                stored.emplace_back(std::move(res), std::move(combo));
            }
        }
    return kernel;
}

// Span of the images of all degree-<=cutoff basis vectors under f, on top of
// the target's relation span.
FpSpace image_span(const PresentedModule& src, const PolyMatrix& f,
                   FpSpace base, const MonoTable& mt, std::uint32_t cutoff,
                   std::uint32_t p) {
    for (std::size_t t = 0; t < src.rank(); ++t)
        for (const auto& mono : mt.list) {
            if (mono_deg(mono) > cutoff) continue;
            FreeVec img(f.rows(), Polynomial::zero(src.ring));
            for (std::size_t i = 0; i < f.rows(); ++i)
                img[i] = f.at(i, t).shifted(mono,
                                            Scalar::one(src.ring->field));
            base.add(encode(img, mt, p));
        }
    return base;
}

std::uint32_t map_cutoff(const PolyMatrix& f, std::uint32_t degree) {
    std::uint64_t d = matrix_degree(f);
    if (d > degree) throw InputError("truncation degree too small");
    return degree - static_cast<std::uint32_t>(d);
}

bool homogeneous_degree(const Polynomial& g, std::uint64_t& deg) {
    if (g.is_zero()) return false;
    deg = g.terms().front().m.empty() ? 0 : mono_deg(g.terms().front().m);
    for (const auto& t : g.terms())
        if (mono_deg(t.m) != deg) throw InputError("generator not homogeneous");
    return true;
}

}  // namespace

bool truncated_exact_check(const ExactSequenceClaim& c,
                           bool require_left_injective,
                           bool require_right_surjective,
                           std::uint32_t degree) {
    if (c.mods.size() < 2 || c.maps.size() + 1 != c.mods.size())
        throw InputError("malformed sequence claim");
    const RingPtr& ring = c.mods.front().ring;
    if (ring->field.kind != FieldKind::Fp)
        throw InputError("truncated oracle requires a finite field");
    std::uint32_t p = ring->field.p;
    MonoTable mt(ring->nvars(), degree);

    std::vector<FpSpace> rel;
    rel.reserve(c.mods.size());
    for (const auto& m : c.mods) {
        check_same_ring(m.ring, ring);
        rel.push_back(relation_span(m, mt, degree, p));
    }

    // composite == 0 at every interior spot
    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
        PolyMatrix gf = c.maps[i + 1] * c.maps[i];
        for (std::size_t j = 0; j < gf.cols(); ++j) {
            FreeVec col = matrix_col(gf, j);
            if (vec_degree(col) > degree)
                throw InputError("truncation degree too small");
            if (!rel[i + 2].contains(encode(col, mt, p))) return false;
        }
    }

    // ker(g) subset im(f) + relations at every interior spot
    for (std::size_t i = 1; i + 1 < c.mods.size(); ++i) {
        const PolyMatrix& f = c.maps[i - 1];
        const PolyMatrix& g = c.maps[i];
        auto ker = truncated_kernel(c.mods[i], g, rel[i + 1], mt,
                                    map_cutoff(g, degree), p);
        FpSpace im = image_span(c.mods[i - 1], f, rel[i], mt,
                                map_cutoff(f, degree), p);
        for (auto& v : ker)
            if (!im.contains(std::move(v))) return false;
    }

    if (require_left_injective) {
        const PolyMatrix& f = c.maps.front();
        auto ker = truncated_kernel(c.mods[0], f, rel[1], mt,
                                    map_cutoff(f, degree), p);
        for (auto& v : ker)
            if (!rel[0].contains(std::move(v))) return false;
    }

    if (require_right_surjective) {
        const PolyMatrix& g = c.maps.back();
        std::size_t last = c.mods.size() - 1;
        std::uint32_t cut = map_cutoff(g, degree);
        FpSpace im = image_span(c.mods[last - 1], g, rel[last], mt, cut, p);
        std::size_t n = mt.list.size();
        for (std::size_t t = 0; t < c.mods[last].rank(); ++t)
            for (std::size_t mi = 0; mi < n; ++mi) {
                if (mono_deg(mt.list[mi]) > cut) continue;
                Row e(c.mods[last].rank() * n, 0);
                e[t * n + mi] = 1;
                if (!im.contains(std::move(e))) return false;
            }
    }
    return true;
}

std::vector<std::size_t> quotient_dims_from_gb(
    const RingPtr& ring, const std::vector<Polynomial>& gens,
    std::uint32_t degree) {
    auto gb = ideal_gb(ring, gens);
    std::vector<Monomial> leads;
    for (const auto& e : gb.elems) leads.push_back(e.front().m);
    MonoTable mt(ring->nvars(), degree);
    std::vector<std::size_t> dims(degree + 1, 0);
    for (const auto& mono : mt.list) {
        bool standard = true;
        for (const auto& l : leads)
            if (mono_divides(l, mono)) {
                standard = false;
                break;
            }
        if (standard) ++dims[mono_deg(mono)];
    }
    return dims;
}

std::vector<std::size_t> quotient_dims_macaulay(
    const RingPtr& ring, const std::vector<Polynomial>& gens,
    std::uint32_t degree) {
    if (ring->field.kind != FieldKind::Fp)
        throw InputError("Macaulay ranks require a finite field");
    std::uint32_t p = ring->field.p;
    MonoTable mt(ring->nvars(), degree);
    // bucket monomial indices per degree
    std::vector<std::vector<std::size_t>> by_deg(degree + 1);
    for (std::size_t i = 0; i < mt.list.size(); ++i)
        by_deg[mono_deg(mt.list[i])].push_back(i);

    std::vector<std::size_t> dims(degree + 1, 0);
    for (std::uint32_t e = 0; e <= degree; ++e) {
        const auto& cols = by_deg[e];
        std::map<std::size_t, std::size_t> colpos;
        for (std::size_t k = 0; k < cols.size(); ++k) colpos[cols[k]] = k;
        FpSpace sp(p, cols.size());
        for (const auto& g : gens) {
            std::uint64_t dg = 0;
            if (!homogeneous_degree(g, dg)) continue;
            if (dg > e) continue;
            for (std::size_t mi : by_deg[e - dg]) {
                Row row(cols.size(), 0);
                for (const auto& t : g.terms()) {
                    Monomial prod = mono_mul(mt.list[mi], t.m);
                    row[colpos.at(mt.index.at(prod))] = t.c.residue() % p;
                }
                sp.add(std::move(row));
            }
        }
        dims[e] = cols.size() - sp.rank();
    }
    return dims;
}

}  // namespace mfx
