#include "mfx/groebner.hpp"

#include <algorithm>

#include "mfx/errors.hpp"

namespace mfx {

int module_term_cmp(MonomialOrder order, std::uint32_t pa, const Monomial& ma,
                    std::uint32_t pb, const Monomial& mb) {
    if (pa != pb) return pa < pb ? 1 : -1;  // lower position is larger
    return mono_cmp(order, ma, mb);
}

MVec to_mvec(const RingPtr& ring, const FreeVec& v) {
    MVec r;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        check_same_ring(ring, v[pos].ring());
        for (const auto& t : v[pos].terms())
            r.push_back(ModuleTerm{static_cast<std::uint32_t>(pos), t.m, t.c});
    }
    std::sort(r.begin(), r.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
        return module_term_cmp(ring->order, a.pos, a.m, b.pos, b.m) > 0;
    });
    return r;
}

FreeVec from_mvec(const RingPtr& ring, std::size_t rank, const MVec& v) {
    std::vector<std::vector<Term>> comp(rank);
    for (const auto& t : v) {
        if (t.pos >= rank) throw ShapeError("module term position out of range");
        comp[t.pos].push_back(Term{t.m, t.c});
    }
    FreeVec r;
    r.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        r.push_back(Polynomial::from_terms(ring, std::move(comp[i])));
    return r;
}

namespace {

struct Engine {
    const RingPtr& ring;
    MonomialOrder order;

    int cmp(const ModuleTerm& a, const ModuleTerm& b) const {
        return module_term_cmp(order, a.pos, a.m, b.pos, b.m);
    }

    // a - c * x^q * g, both sorted descending; result sorted descending.
    MVec axpy_sub(const MVec& a, const Scalar& c, const Monomial& q, const MVec& g) const {
        MVec out;
        out.reserve(a.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < g.size()) {
            int rel;
            Monomial gm;
            if (j < g.size()) gm = mono_mul(g[j].m, q);
            if (i == a.size())
                rel = -1;
            else if (j == g.size())
                rel = 1;
            else
                rel = module_term_cmp(order, a[i].pos, a[i].m, g[j].pos, gm);
            if (rel > 0) {
                out.push_back(a[i++]);
            } else if (rel < 0) {
                out.push_back(ModuleTerm{g[j].pos, std::move(gm), -(c * g[j].c)});
                ++j;
            } else {
                Scalar s = a[i].c - c * g[j].c;
                if (!s.is_zero()) out.push_back(ModuleTerm{a[i].pos, a[i].m, s});
                ++i;
                ++j;
            }
        }
        return out;
    }

    MVec monic(MVec v) const {
        if (v.empty()) return v;
        Scalar inv = v[0].c.inv();
        for (auto& t : v) t.c = t.c * inv;
        return v;
    }

    // Full normal form of v against basis (leads assumed monic).
    MVec normal_form(MVec v, const std::vector<MVec>& basis,
                     std::size_t skip = static_cast<std::size_t>(-1)) const {
        MVec out;
        std::size_t head = 0;
        while (head < v.size()) {
            const ModuleTerm& t = v[head];
            const MVec* red = nullptr;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (k == skip || basis[k].empty()) continue;
                const ModuleTerm& lt = basis[k][0];
                if (lt.pos == t.pos && mono_divides(lt.m, t.m)) {
                    red = &basis[k];
                    break;
                }
            }
            if (red) {
                MVec rest(v.begin() + head, v.end());
                v = axpy_sub(rest, t.c, mono_quot(t.m, (*red)[0].m), *red);
                head = 0;
            } else {
                out.push_back(t);
                ++head;
            }
        }
        return out;
    }

    bool single_position(const MVec& v) const {
        for (const auto& t : v)
            if (t.pos != v[0].pos) return false;
        return true;
    }

    struct Pair {
        std::size_t i, j;
        std::uint32_t pos;
        Monomial lcm;
        std::uint64_t deg;
    };

    std::vector<MVec> basis;
    std::vector<Pair> pairs;

    Monomial pair_lcm(std::size_t i, std::size_t j) const {
        return mono_lcm(basis[i][0].m, basis[j][0].m);
    }

    void add_generator(MVec g) {
        std::size_t t = basis.size();
        const ModuleTerm& lt = g[0];

        // Gebauer-Moller B criterion against existing pairs.
        std::erase_if(pairs, [&](const Pair& p) {
            if (p.pos != lt.pos) return false;
            if (!mono_divides(lt.m, p.lcm)) return false;
            if (mono_lcm(basis[p.i][0].m, lt.m) == p.lcm) return false;
            if (mono_lcm(basis[p.j][0].m, lt.m) == p.lcm) return false;
            return true;
        });

        // candidate pairs (i, t)
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].empty() || basis[i][0].pos != lt.pos) continue;
            Monomial l = mono_lcm(basis[i][0].m, lt.m);
            bool cop = mono_is_one(mono_gcd(basis[i][0].m, lt.m)) &&
                       single_position(basis[i]) && single_position(g);
            cands.push_back(Cand{i, std::move(l), cop});
        }
        // M criterion: drop candidates whose lcm is a proper multiple of
        // another candidate's lcm.
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a)
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (cands[b].lcm != cands[a].lcm && !drop[b] &&
                    mono_divides(cands[b].lcm, cands[a].lcm))
                    drop[a] = true;
            }
        // F criterion: one representative per lcm; a coprime member kills
        // its whole class (the product criterion, valid here because it is
        // only flagged for single-position elements).
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            bool classCoprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (drop[b] || cands[b].lcm != cands[a].lcm) continue;
                classCoprime = classCoprime || cands[b].coprime;
                drop[b] = true;
            }
            if (classCoprime) drop[a] = true;
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            pairs.push_back(Pair{cands[a].i, t, lt.pos, cands[a].lcm,
                                 mono_deg(cands[a].lcm)});
        }
        basis.push_back(std::move(g));
    }

    std::size_t select_pair() const {
        // normal strategy: smallest lcm in the module order, ties by index
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            int c = module_term_cmp(order, a.pos, a.lcm, b.pos, b.lcm);
            bool better = c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)));
            if (better) best = k;
        }
        return best;
    }

    void run(const std::vector<MVec>& gens) {
        for (const auto& g : gens) {
            MVec h = normal_form(g, basis);
            if (!h.empty()) add_generator(monic(std::move(h)));
        }
        while (!pairs.empty()) {
            std::size_t k = select_pair();
            Pair p = pairs[k];
            pairs.erase(pairs.begin() + k);
            const MVec &f = basis[p.i], &g = basis[p.j];
            Monomial qf = mono_quot(p.lcm, f[0].m);
            Monomial qg = mono_quot(p.lcm, g[0].m);
            // both monic: spair = x^qf * f - x^qg * g
            MVec sf;
            sf.reserve(f.size());
            for (const auto& t : f) sf.push_back(ModuleTerm{t.pos, mono_mul(t.m, qf), t.c});
            MVec sp = axpy_sub(sf, Scalar::one(ring->field), qg, g);
            MVec h = normal_form(std::move(sp), basis);
            if (!h.empty()) add_generator(monic(std::move(h)));
        }
        reduce();
    }

    void reduce() {
        // minimalize: drop elements whose lead is divisible by another lead
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t a = 0; a < basis.size(); ++a) {
            if (!keep[a]) continue;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (a == b || !keep[b] || !keep[a]) continue;
                if (basis[b][0].pos == basis[a][0].pos &&
                    mono_divides(basis[b][0].m, basis[a][0].m)) {
                    if (basis[b][0].m == basis[a][0].m && b > a) continue;
                    keep[a] = false;
                }
            }
        }
        std::vector<MVec> minimal;
        for (std::size_t a = 0; a < basis.size(); ++a)
            if (keep[a]) minimal.push_back(std::move(basis[a]));
        basis = std::move(minimal);
        // tail reduction for the unique reduced basis
        for (std::size_t a = 0; a < basis.size(); ++a)
            basis[a] = monic(normal_form(basis[a], basis, a));
        std::sort(basis.begin(), basis.end(), [&](const MVec& x, const MVec& y) {
            return module_term_cmp(order, x[0].pos, x[0].m, y[0].pos, y[0].m) > 0;
        });
    }
};

std::vector<MVec> convert_all(const RingPtr& ring, std::size_t rank,
                              const std::vector<FreeVec>& gens) {
    std::vector<MVec> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.size() != rank) throw ShapeError("generator rank mismatch");
        MVec v = to_mvec(ring, g);
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<FreeVec> GroebnerBasis::generators() const {
    std::vector<FreeVec> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(from_mvec(ring, rank, e));
    return out;
}

GroebnerBasis groebner_basis(const RingPtr& ring, std::size_t rank,
                             const std::vector<FreeVec>& gens) {
    Engine e{ring, ring->order};
    e.run(convert_all(ring, rank, gens));
    GroebnerBasis gb;
    gb.ring = ring;
    gb.rank = rank;
    gb.elems = std::move(e.basis);
    return gb;
}

GroebnerBasis ideal_gb(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<FreeVec> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(FreeVec{g});
    return groebner_basis(ring, 1, v);
}

FreeVec normal_form(const FreeVec& v, const GroebnerBasis& gb) {
    if (v.size() != gb.rank) throw ShapeError("normal_form rank mismatch");
    Engine e{gb.ring, gb.ring->order};
    MVec r = e.normal_form(to_mvec(gb.ring, v), gb.elems);
    return from_mvec(gb.ring, gb.rank, r);
}

bool in_module(const FreeVec& v, const GroebnerBasis& gb) {
    for (const auto& p : normal_form(v, gb))
        if (!p.is_zero()) return false;
    return true;
}

GroebnerBasis column_module_gb(const PolyMatrix& P,
                               const std::vector<Polynomial>& ideal) {
    const RingPtr& ring = P.ring();
    std::vector<FreeVec> gens;
    for (std::size_t j = 0; j < P.cols(); ++j) gens.push_back(P.col(j));
    for (const auto& h : ideal) {
        for (std::size_t i = 0; i < P.rows(); ++i) {
            FreeVec v(P.rows(), Polynomial(ring));
            v[i] = h;
            gens.push_back(std::move(v));
        }
    }
    return groebner_basis(ring, P.rows(), gens);
}

namespace {

// Shared elimination engine for lifting and kernels: Groebner basis of the
// graph module {(A c, c)} + (modulo and extra relation columns paired with 0)
// inside S^m (+) S^n, under the order eliminating the first m positions.
GroebnerBasis graph_gb(const PolyMatrix& A, const std::vector<Polynomial>& modulo,
                       const PolyMatrix* extra_rel) {
    const RingPtr& ring = A.ring();
    std::size_t m = A.rows(), n = A.cols();
    std::vector<FreeVec> gens;
    for (std::size_t j = 0; j < n; ++j) {
        FreeVec v(m + n, Polynomial(ring));
        for (std::size_t i = 0; i < m; ++i) v[i] = A.at(i, j);
        v[m + j] = Polynomial::constant(ring, 1);
        gens.push_back(std::move(v));
    }
    auto add_untracked = [&](const FreeVec& col) {
        FreeVec v(m + n, Polynomial(ring));
        for (std::size_t i = 0; i < m; ++i) v[i] = col[i];
        gens.push_back(std::move(v));
    };
    for (const auto& h : modulo) {
        for (std::size_t i = 0; i < m; ++i) {
            FreeVec col(m, Polynomial(ring));
            col[i] = h;
            add_untracked(col);
        }
    }
    if (extra_rel) {
        if (extra_rel->rows() != m) throw ShapeError("extra relation row mismatch");
        for (std::size_t j = 0; j < extra_rel->cols(); ++j) add_untracked(extra_rel->col(j));
    }
    return groebner_basis(ring, m + n, gens);
}

}  // namespace

std::optional<FreeVec> lift_solve(const PolyMatrix& A, const FreeVec& b,
                                  const std::vector<Polynomial>& modulo,
                                  const PolyMatrix* extra_rel) {
    const RingPtr& ring = A.ring();
    std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw ShapeError("lift_solve: rank of b must equal rows of A");
    GroebnerBasis gb = graph_gb(A, modulo, extra_rel);
    FreeVec v(m + n, Polynomial(ring));
    for (std::size_t i = 0; i < m; ++i) v[i] = b[i];
    FreeVec r = normal_form(v, gb);
    for (std::size_t i = 0; i < m; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    FreeVec c(n, Polynomial(ring));
    for (std::size_t j = 0; j < n; ++j) c[j] = -r[m + j];
    return c;
}

std::vector<FreeVec> module_kernel(const PolyMatrix& A,
                                   const std::vector<Polynomial>& modulo,
                                   const PolyMatrix* extra_rel) {
    const RingPtr& ring = A.ring();
    std::size_t m = A.rows(), n = A.cols();
    GroebnerBasis gb = graph_gb(A, modulo, extra_rel);
    std::optional<GroebnerBasis> igb;
    if (!modulo.empty()) igb = ideal_gb(ring, modulo);
    std::vector<FreeVec> out;
    for (const auto& e : gb.elems) {
        if (e.empty() || e[0].pos < m) continue;  // lead in the first block
        FreeVec full = from_mvec(ring, m + n, e);
        FreeVec g(full.begin() + m, full.end());
        if (igb) {
            bool nonzero = false;
            for (auto& p : g) {
                p = normal_form(FreeVec{p}, *igb)[0];
                nonzero = nonzero || !p.is_zero();
            }
            if (!nonzero) continue;
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace mfx
