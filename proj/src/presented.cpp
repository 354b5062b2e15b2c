#include "mfx/presented.hpp"

namespace mfx {

PresentedModule zero_module(const RingPtr& ring,
                            const std::vector<Polynomial>& ideal) {
    return PresentedModule{ring, ideal, PolyMatrix(ring, 0, 0)};
}

GroebnerBasis relations_gb(const PresentedModule& m) {
    return column_module_gb(m.pres, m.ideal);
}

bool ideals_equal(const RingPtr& ring, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b) {
    return ideal_gb(ring, a).elems == ideal_gb(ring, b).elems;
}

bool same_base_ring(const PresentedModule& a, const PresentedModule& b) {
    return same_ring(a.ring, b.ring) && ideals_equal(a.ring, a.ideal, b.ideal);
}

bool is_zero_module(const PresentedModule& m) {
    if (m.rank() == 0) return true;
    auto rel = relations_gb(m);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        FreeVec e(m.rank(), Polynomial::constant(m.ring, 0));
        e[i] = Polynomial::constant(m.ring, 1);
        if (!in_module(e, rel)) return false;
    }
    return true;
}

static void require_map_shape(const PresentedModule& src,
                              const PresentedModule& tgt, const PolyMatrix& f) {
    check_same_ring(src.ring, f.ring());
    check_same_ring(tgt.ring, f.ring());
    if (f.rows() != tgt.rank() || f.cols() != src.rank())
        throw ShapeError("morphism matrix must be tgt.rank() x src.rank()");
}

bool morphism_check(const PresentedModule& src, const PresentedModule& tgt,
                    const PolyMatrix& f) {
    require_map_shape(src, tgt, f);
    if (!same_base_ring(src, tgt)) return false;
    auto rel = relations_gb(tgt);
    auto fp = f * src.pres;
    for (std::size_t j = 0; j < fp.cols(); ++j)
        if (!in_module(fp.col(j), rel)) return false;
    // generators of I already kill all of tgt via I*S^rank in rel
    return true;
}

bool morphisms_equal(const PresentedModule& src, const PresentedModule& tgt,
                     const PolyMatrix& f, const PolyMatrix& g) {
    require_map_shape(src, tgt, f);
    require_map_shape(src, tgt, g);
    auto rel = relations_gb(tgt);
    auto d = f - g;
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (!in_module(d.col(j), rel)) return false;
    return true;
}

bool iso_check(const PresentedModule& a, const PresentedModule& b,
               const PolyMatrix& f, const PolyMatrix& g) {
    if (!morphism_check(a, b, f) || !morphism_check(b, a, g)) return false;
    return morphisms_equal(a, a, g * f, PolyMatrix::identity(a.ring, a.rank())) &&
           morphisms_equal(b, b, f * g, PolyMatrix::identity(b.ring, b.rank()));
}

bool summand_check(const PresentedModule& m, const PresentedModule& amb,
                   const PolyMatrix& incl, const PolyMatrix& proj) {
    if (!morphism_check(m, amb, incl) || !morphism_check(amb, m, proj))
        return false;
    return morphisms_equal(m, m, proj * incl,
                           PolyMatrix::identity(m.ring, m.rank()));
}

std::vector<FreeVec> morphism_kernel(const PresentedModule& src,
                                     const PresentedModule& tgt,
                                     const PolyMatrix& f) {
    require_map_shape(src, tgt, f);
    // v in S^{src.rank} with f*v in colmod(tgt.pres) + I*S^{tgt.rank},
    // taken modulo the relations of src.
    auto ker = module_kernel(f, src.ideal, &tgt.pres);
    auto rel = relations_gb(src);
    std::vector<FreeVec> out;
    for (auto& v : ker) {
        auto r = normal_form(v, rel);
        bool zero = true;
        for (const auto& p : r) zero = zero && p.is_zero();
        if (!zero) out.push_back(std::move(r));
    }
    return out;
}

bool exact_check(const ExactSequenceClaim& c, bool require_left_injective,
                 bool require_right_surjective) {
    if (c.mods.size() < 2 || c.maps.size() + 1 != c.mods.size())
        throw ShapeError("exact sequence needs k+1 modules and k maps");
    for (std::size_t i = 0; i < c.maps.size(); ++i)
        if (!morphism_check(c.mods[i], c.mods[i + 1], c.maps[i])) return false;
    // complex: consecutive composites vanish
    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
        auto z = PolyMatrix(c.mods[i].ring, c.mods[i + 2].rank(),
                            c.mods[i].rank());
        if (!morphisms_equal(c.mods[i], c.mods[i + 2],
                             c.maps[i + 1] * c.maps[i], z))
            return false;
    }
    // exactness at interior nodes: ker(maps[i]) <= im(maps[i-1])
    for (std::size_t i = 1; i + 1 < c.mods.size(); ++i) {
        auto ker = morphism_kernel(c.mods[i], c.mods[i + 1], c.maps[i]);
        auto img = column_module_gb(
            PolyMatrix::hstack(c.maps[i - 1], c.mods[i].pres), c.mods[i].ideal);
        for (const auto& v : ker)
            if (!in_module(v, img)) return false;
    }
    if (require_left_injective &&
        !morphism_kernel(c.mods.front(), c.mods[1], c.maps.front()).empty())
        return false;
    if (require_right_surjective) {
        const auto& last = c.mods.back();
        auto img = column_module_gb(
            PolyMatrix::hstack(c.maps.back(), last.pres), last.ideal);
        for (std::size_t i = 0; i < last.rank(); ++i) {
            FreeVec e(last.rank(), Polynomial::constant(last.ring, 0));
            e[i] = Polynomial::constant(last.ring, 1);
            if (!in_module(e, img)) return false;
        }
    }
    return true;
}

DirectSum direct_sum(const std::vector<PresentedModule>& parts) {
    if (parts.empty()) throw ShapeError("direct_sum of no parts");
    const auto& ring = parts[0].ring;
    for (const auto& p : parts)
        if (!same_base_ring(parts[0], p))
            throw RingMismatchError("direct_sum over mixed base rings");
    std::vector<PolyMatrix> blocks;
    std::size_t total = 0;
    for (const auto& p : parts) {
        blocks.push_back(p.pres);
        total += p.rank();
    }
    DirectSum out;
    out.sum = PresentedModule{ring, parts[0].ideal,
                              PolyMatrix::block_diag(blocks)};
    std::size_t off = 0;
    for (const auto& p : parts) {
        PolyMatrix incl(ring, total, p.rank());
        PolyMatrix proj(ring, p.rank(), total);
        for (std::size_t i = 0; i < p.rank(); ++i) {
            incl.set(off + i, i, Polynomial::constant(ring, 1));
            proj.set(i, off + i, Polynomial::constant(ring, 1));
        }
        out.incl.push_back(std::move(incl));
        out.proj.push_back(std::move(proj));
        off += p.rank();
    }
    return out;
}

}  // namespace mfx
