#include "mfx/ball.hpp"

#include <cstdio>

namespace mfx {

namespace {

bool pm_equal(const PresentedModule& a, const PresentedModule& b) {
    return same_base_ring(a, b) && a.pres == b.pres;
}

void fnv(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= '|';
    h *= 1099511628211ULL;
}

void digest_pm(std::uint64_t& h, const PresentedModule& m) {
    for (const auto& g : m.ideal) fnv(h, g.str());
    fnv(h, m.pres.str());
}

void digest_cert(std::uint64_t& h, const BallCertificate& c) {
    fnv(h, c.mode == CertMode::Closed ? "closed" : "additive");
    fnv(h, std::to_string(c.level));
    digest_pm(h, c.gen);
    digest_pm(h, c.target);
    if (c.level <= 1) {
        for (const auto& b : c.blocks) {
            fnv(h, std::to_string(static_cast<int>(b.kind)));
            fnv(h, std::to_string(b.syz));
            digest_pm(h, b.pres);
        }
        fnv(h, c.incl.str());
        fnv(h, c.proj.str());
    } else if (c.xcert && c.ycert) {
        digest_cert(h, *c.xcert);
        digest_cert(h, *c.ycert);
        digest_pm(h, c.ext_mid);
        fnv(h, c.ext_incl.str());
        fnv(h, c.ext_proj.str());
        fnv(h, c.seq_l.str());
        fnv(h, c.seq_r.str());
    }
}

// Inclusion of `width` coordinates into `total` at `offset`, and its
// retraction.
PolyMatrix slot_incl(const RingPtr& ring, std::size_t total,
                     std::size_t offset, std::size_t width) {
    PolyMatrix f(ring, total, width);
    for (std::size_t i = 0; i < width; ++i)
        f.set(offset + i, i, Polynomial::constant(ring, 1));
    return f;
}

PolyMatrix slot_proj(const RingPtr& ring, std::size_t total,
                     std::size_t offset, std::size_t width) {
    PolyMatrix f(ring, width, total);
    for (std::size_t i = 0; i < width; ++i)
        f.set(i, offset + i, Polynomial::constant(ring, 1));
    return f;
}

PolyMatrix one_by_one(const RingPtr& ring, const Polynomial& p) {
    PolyMatrix m(ring, 1, 1);
    m.set(0, 0, p);
    return m;
}

PresentedModule blocks_ambient(const RingPtr& ring,
                               const std::vector<Polynomial>& ideal,
                               const std::vector<CertBlock>& blocks) {
    std::vector<PolyMatrix> ps;
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        ps.push_back(b.pres.pres);
        rows += b.pres.rank();
    }
    if (ps.empty()) return zero_module(ring, ideal);
    return PresentedModule{ring, ideal, PolyMatrix::block_diag(ps)};
}

bool ring_block_ok(const CertBlock& b, const GroebnerBasis& ideal_gb_v) {
    if (b.pres.rank() != 1) return false;
    for (std::size_t j = 0; j < b.pres.pres.cols(); ++j)
        if (!in_module({b.pres.pres.at(0, j)}, ideal_gb_v)) return false;
    return true;
}

}  // namespace

std::string cert_digest(const BallCertificate& c) {
    std::uint64_t h = 1469598103934665603ULL;
    digest_cert(h, c);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

void cert_seal(BallCertificate& c) { c.seal = cert_digest(c); }

bool cert_verify(const BallCertificate& c) {
    if (!c.seal.empty() && c.seal != cert_digest(c)) return false;
    if (c.level < 1) return false;
    if (!same_base_ring(c.gen, c.target)) return false;
    if (c.level == 1) {
        auto igb = ideal_gb(c.gen.ring, c.gen.ideal);
        for (const auto& b : c.blocks) {
            if (!same_ring(b.pres.ring, c.gen.ring)) return false;
            if (!ideals_equal(c.gen.ring, b.pres.ideal, c.gen.ideal))
                return false;
            switch (b.kind) {
                case CertBlock::Gen:
                    if (b.pres.pres != c.gen.pres) return false;
                    break;
                case CertBlock::Ring:
                    if (c.mode != CertMode::Closed) return false;
                    if (!ring_block_ok(b, igb)) return false;
                    break;
                case CertBlock::Syz:
                    // explicit presentation data is the block's definition
                    if (c.mode != CertMode::Closed) return false;
                    break;
            }
        }
        auto amb = blocks_ambient(c.gen.ring, c.gen.ideal, c.blocks);
        return summand_check(c.target, amb, c.incl, c.proj);
    }
    if (!c.xcert || !c.ycert) throw InputError("malformed certificate tree");
    if (c.xcert->level != c.level - 1 || c.ycert->level != 1) return false;
    if (c.xcert->mode != c.mode || c.ycert->mode != c.mode) return false;
    if (!pm_equal(c.xcert->gen, c.gen) || !pm_equal(c.ycert->gen, c.gen))
        return false;
    ExactSequenceClaim seq{{c.xcert->target, c.ext_mid, c.ycert->target},
                           {c.seq_l, c.seq_r}};
    if (!exact_check(seq, true, true)) return false;
    if (!summand_check(c.target, c.ext_mid, c.ext_incl, c.ext_proj))
        return false;
    return cert_verify(*c.xcert) && cert_verify(*c.ycert);
}

BallCertificate cert_identity(const PresentedModule& gen, CertMode mode) {
    BallCertificate c;
    c.mode = mode;
    c.level = 1;
    c.gen = gen;
    c.target = gen;
    c.blocks = {CertBlock{CertBlock::Gen, 0, gen}};
    c.incl = PolyMatrix::identity(gen.ring, gen.rank());
    c.proj = c.incl;
    return c;
}

BallCertificate cert_zero(const PresentedModule& gen, CertMode mode) {
    BallCertificate c;
    c.mode = mode;
    c.level = 1;
    c.gen = gen;
    c.target = zero_module(gen.ring, gen.ideal);
    c.incl = PolyMatrix(gen.ring, 0, 0);
    c.proj = c.incl;
    return c;
}

BallCertificate cert_raise(const BallCertificate& c, std::uint32_t level) {
    if (c.level > level) throw InputError("cannot lower a certificate level");
    auto cur = c;
    while (cur.level < level) {
        BallCertificate w;
        w.mode = cur.mode;
        w.level = cur.level + 1;
        w.gen = cur.gen;
        w.target = cur.target;
        w.xcert = std::make_shared<BallCertificate>(cur);
        w.ycert = std::make_shared<BallCertificate>(cert_zero(cur.gen, cur.mode));
        w.ext_mid = cur.target;
        w.ext_incl = PolyMatrix::identity(cur.gen.ring, cur.target.rank());
        w.ext_proj = w.ext_incl;
        w.seq_l = w.ext_incl;
        w.seq_r = PolyMatrix(cur.gen.ring, 0, cur.target.rank());
        cur = std::move(w);
    }
    return cur;
}

BallCertificate cert_direct_sum(const std::vector<BallCertificate>& cs) {
    if (cs.empty()) throw InputError("direct sum of no certificates");
    const auto& first = cs[0];
    for (const auto& c : cs)
        if (c.mode != first.mode || c.level != first.level ||
            !pm_equal(c.gen, first.gen))
            throw InputError("certificate direct sum needs equal gen/mode/level");
    if (cs.size() == 1) return cs[0];
    const auto& ring = first.gen.ring;
    BallCertificate out;
    out.mode = first.mode;
    out.level = first.level;
    out.gen = first.gen;
    std::vector<PolyMatrix> tp;
    for (const auto& c : cs) tp.push_back(c.target.pres);
    out.target = PresentedModule{ring, first.gen.ideal,
                                 PolyMatrix::block_diag(tp)};
    if (first.level == 1) {
        std::vector<PolyMatrix> ip, pp;
        for (const auto& c : cs) {
            out.blocks.insert(out.blocks.end(), c.blocks.begin(),
                              c.blocks.end());
            ip.push_back(c.incl);
            pp.push_back(c.proj);
        }
        out.incl = PolyMatrix::block_diag(ip);
        out.proj = PolyMatrix::block_diag(pp);
        return out;
    }
    std::vector<BallCertificate> xs, ys;
    std::vector<PolyMatrix> mp, ei, ep, sl, sr;
    for (const auto& c : cs) {
        xs.push_back(*c.xcert);
        ys.push_back(*c.ycert);
        mp.push_back(c.ext_mid.pres);
        ei.push_back(c.ext_incl);
        ep.push_back(c.ext_proj);
        sl.push_back(c.seq_l);
        sr.push_back(c.seq_r);
    }
    out.xcert = std::make_shared<BallCertificate>(cert_direct_sum(xs));
    out.ycert = std::make_shared<BallCertificate>(cert_direct_sum(ys));
    out.ext_mid = PresentedModule{ring, first.gen.ideal,
                                  PolyMatrix::block_diag(mp)};
    out.ext_incl = PolyMatrix::block_diag(ei);
    out.ext_proj = PolyMatrix::block_diag(ep);
    out.seq_l = PolyMatrix::block_diag(sl);
    out.seq_r = PolyMatrix::block_diag(sr);
    return out;
}

BallCertificate cert_regen(const BallCertificate& c,
                           const PresentedModule& new_gen,
                           const PolyMatrix& iota, const PolyMatrix& pi) {
    if (!summand_check(c.gen, new_gen, iota, pi))
        throw InputError("gen is not a summand of new_gen via the witness");
    BallCertificate out = c;
    out.seal.clear();
    out.gen = new_gen;
    if (c.level == 1) {
        const auto& ring = c.gen.ring;
        std::vector<PolyMatrix> adj_i, adj_p;
        out.blocks.clear();
        for (const auto& b : c.blocks) {
            switch (b.kind) {
                case CertBlock::Gen:
                    out.blocks.push_back(CertBlock{CertBlock::Gen, 0, new_gen});
                    adj_i.push_back(iota);
                    adj_p.push_back(pi);
                    break;
                case CertBlock::Ring:
                    out.blocks.push_back(b);
                    adj_i.push_back(PolyMatrix::identity(ring, 1));
                    adj_p.push_back(PolyMatrix::identity(ring, 1));
                    break;
                case CertBlock::Syz:
                    throw InputError("cannot transport syzygy blocks");
            }
        }
        out.incl = PolyMatrix::block_diag(adj_i) * c.incl;
        out.proj = c.proj * PolyMatrix::block_diag(adj_p);
        return out;
    }
    out.xcert = std::make_shared<BallCertificate>(
        cert_regen(*c.xcert, new_gen, iota, pi));
    out.ycert = std::make_shared<BallCertificate>(
        cert_regen(*c.ycert, new_gen, iota, pi));
    return out;
}

namespace {

PresentedModule promote_pm(const PresentedModule& pm, const Polynomial& prod) {
    auto pres = pm.pres;
    for (const auto& g : pm.ideal) {
        auto gb = column_module_gb(pres, {prod});
        for (std::size_t t = 0; t < pm.rank(); ++t) {
            FreeVec v(pm.rank(), Polynomial::constant(pm.ring, 0));
            v[t] = g;
            if (!in_module(v, gb)) {
                std::vector<std::vector<Polynomial>> c{v};
                pres = PolyMatrix::hstack(
                    pres, PolyMatrix::from_cols(pm.ring, pm.rank(), c));
                gb = column_module_gb(pres, {prod});
            }
        }
    }
    return PresentedModule{pm.ring, {prod}, pres};
}

}  // namespace

BallCertificate cert_promote(const BallCertificate& c, const Polynomial& prod) {
    // prod must lie in the current quotient ideal
    if (!in_module({prod}, ideal_gb(c.gen.ring, c.gen.ideal)))
        throw InputError("promotion target not a multiple of the ideal");
    BallCertificate out = c;
    out.seal.clear();
    out.gen = promote_pm(c.gen, prod);
    out.target = promote_pm(c.target, prod);
    if (c.level == 1) {
        for (auto& b : out.blocks) {
            if (b.kind != CertBlock::Gen &&
                !ideals_equal(c.gen.ring, c.gen.ideal, {prod}))
                throw InputError("only generator blocks can be promoted");
            b.pres = promote_pm(b.pres, prod);
        }
        return out;
    }
    out.ext_mid = promote_pm(c.ext_mid, prod);
    out.xcert = std::make_shared<BallCertificate>(cert_promote(*c.xcert, prod));
    out.ycert = std::make_shared<BallCertificate>(cert_promote(*c.ycert, prod));
    return out;
}

namespace {

BallCertificate lemma5_transform(const BallCertificate& c,
                                 const MatrixFactorization& mf,
                                 const PresentedModule& genk) {
    BallCertificate out = c;
    out.seal.clear();
    out.mode = CertMode::Additive;
    out.gen = genk;
    if (c.level > 1) {
        out.xcert = std::make_shared<BallCertificate>(
            lemma5_transform(*c.xcert, mf, genk));
        out.ycert = std::make_shared<BallCertificate>(
            lemma5_transform(*c.ycert, mf, genk));
        return out;
    }
    const auto& ring = mf.ring;
    std::size_t a = mf.A.rows(), b = mf.B.rows(), g = a + 1 + b;
    std::vector<PolyMatrix> adj_i, adj_p;
    out.blocks.clear();
    for (const auto& blk : c.blocks) {
        std::size_t off = 0;
        std::size_t width = blk.pres.rank();
        switch (blk.kind) {
            case CertBlock::Gen:
                off = 0;
                break;
            case CertBlock::Ring:
                off = a;
                break;
            case CertBlock::Syz: {
                bool odd = blk.syz % 2 == 1;
                const auto& want = odd ? mf.B : mf.A;
                if (blk.pres.pres != want)
                    throw InputError(
                        "syzygy block not expressible through the factorization");
                off = odd ? a + 1 : 0;
                break;
            }
        }
        out.blocks.push_back(CertBlock{CertBlock::Gen, 0, genk});
        adj_i.push_back(slot_incl(ring, g, off, width));
        adj_p.push_back(slot_proj(ring, g, off, width));
    }
    out.incl = adj_i.empty() ? c.incl : PolyMatrix::block_diag(adj_i) * c.incl;
    out.proj = adj_p.empty() ? c.proj : c.proj * PolyMatrix::block_diag(adj_p);
    return out;
}

}  // namespace

BallCertificate lemma5_rewrite(const BallCertificate& c,
                               const MatrixFactorization& mf) {
    if (!mf_verify(mf)) throw InputError("invalid matrix factorization");
    if (c.gen.pres != mf.A ||
        !ideals_equal(c.gen.ring, c.gen.ideal, {mf.f}))
        throw InputError("certificate gen must be the factorization cokernel");
    PresentedModule genk{
        c.gen.ring, {mf.f},
        PolyMatrix::block_diag({mf.A, one_by_one(c.gen.ring, mf.f), mf.B})};
    auto out = lemma5_transform(c, mf, genk);
    if (!cert_verify(out)) throw InternalCheckError("lemma5 rewrite fails");
    return out;
}

namespace {

// Leaf certificate for (S/(x))^k inside a gen whose coordinate `slot` is a
// copy of S/(x).
BallCertificate powers_of_slot(const PresentedModule& gen, CertMode mode,
                               const PresentedModule& target,
                               std::size_t slot, std::size_t k) {
    const auto& ring = gen.ring;
    std::size_t g = gen.rank();
    BallCertificate c;
    c.mode = mode;
    c.level = 1;
    c.gen = gen;
    c.target = target;
    c.incl = PolyMatrix(ring, k * g, k);
    c.proj = PolyMatrix(ring, k, k * g);
    for (std::size_t t = 0; t < k; ++t) {
        c.blocks.push_back(CertBlock{CertBlock::Gen, 0, gen});
        c.incl.set(t * g + slot, t, Polynomial::constant(ring, 1));
        c.proj.set(t, t * g + slot, Polynomial::constant(ring, 1));
    }
    return c;
}

BallCertificate lemma4_transform(const BallCertificate& c,
                                 const PolyMatrix& mate_b, const Polynomial& y,
                                 const Polynomial& x,
                                 const PresentedModule& gen_new) {
    const auto& ring = c.gen.ring;
    auto xy = x * y;
    std::size_t a = c.gen.pres.rows(), b = mate_b.rows(), g = a + b + 1;
    auto scale_pm = [&](const PresentedModule& pm) {
        return PresentedModule{ring, {xy}, pm.pres.scaled(x)};
    };

    BallCertificate out;
    out.mode = c.mode;
    out.level = c.level;
    out.gen = gen_new;
    out.target = scale_pm(c.target);

    if (c.level == 1) {
        auto amb = blocks_ambient(ring, c.gen.ideal, c.blocks);
        SummandWitness wit{c.target, amb, c.incl, c.proj};
        auto w = lemma4_summand_scale(amb.pres, c.target.pres, wit, y, x);
        std::size_t k = w.amb.rank() - amb.rank();
        std::vector<PolyMatrix> adj_i, adj_p;
        for (const auto& blk : c.blocks) {
            std::size_t width = blk.pres.rank();
            switch (blk.kind) {
                case CertBlock::Gen:
                    out.blocks.push_back(CertBlock{CertBlock::Gen, 0, gen_new});
                    adj_i.push_back(slot_incl(ring, g, 0, width));
                    adj_p.push_back(slot_proj(ring, g, 0, width));
                    break;
                case CertBlock::Syz: {
                    bool odd = blk.syz % 2 == 1;
                    const auto& want = odd ? mate_b : c.gen.pres;
                    if (blk.pres.pres != want)
                        throw InputError(
                            "syzygy block not expressible through the mate");
                    out.blocks.push_back(CertBlock{CertBlock::Gen, 0, gen_new});
                    adj_i.push_back(slot_incl(ring, g, odd ? a : 0, width));
                    adj_p.push_back(slot_proj(ring, g, odd ? a : 0, width));
                    break;
                }
                case CertBlock::Ring:
                    out.blocks.push_back(
                        CertBlock{CertBlock::Ring, 0, scale_pm(blk.pres)});
                    adj_i.push_back(PolyMatrix::identity(ring, width));
                    adj_p.push_back(PolyMatrix::identity(ring, width));
                    break;
            }
        }
        for (std::size_t t = 0; t < k; ++t) {
            out.blocks.push_back(CertBlock{CertBlock::Gen, 0, gen_new});
            adj_i.push_back(slot_incl(ring, g, a + b, 1));
            adj_p.push_back(slot_proj(ring, g, a + b, 1));
        }
        out.incl = adj_i.empty() ? w.incl : PolyMatrix::block_diag(adj_i) * w.incl;
        out.proj = adj_p.empty() ? w.proj : w.proj * PolyMatrix::block_diag(adj_p);
        return out;
    }

    auto xs = lemma4_transform(*c.xcert, mate_b, y, x, gen_new);
    auto ys = lemma4_transform(*c.ycert, mate_b, y, x, gen_new);
    SummandWitness wit{c.target, c.ext_mid, c.ext_incl, c.ext_proj};
    auto w = lemma4_summand_scale(c.ext_mid.pres, c.target.pres, wit, y, x);
    std::size_t k = w.amb.rank() - c.ext_mid.rank();
    out.ext_mid = w.amb;
    out.ext_incl = w.incl;
    out.ext_proj = w.proj;
    if (k == 0) {
        out.xcert = std::make_shared<BallCertificate>(std::move(xs));
        out.seq_l = c.seq_l;
        out.seq_r = c.seq_r;
    } else {
        PresentedModule pad{
            ring, {xy}, PolyMatrix::identity(ring, k).scaled(x)};
        auto padcert = cert_raise(
            powers_of_slot(gen_new, c.mode, pad, a + b, k), c.level - 1);
        out.xcert = std::make_shared<BallCertificate>(
            cert_direct_sum({xs, padcert}));
        out.seq_l = PolyMatrix::block_diag(c.seq_l,
                                           PolyMatrix::identity(ring, k));
        out.seq_r = PolyMatrix::hstack(
            c.seq_r, PolyMatrix(ring, c.seq_r.rows(), k));
    }
    out.ycert = std::make_shared<BallCertificate>(std::move(ys));
    return out;
}

}  // namespace

BallCertificate lemma4_cert_scale(const BallCertificate& c,
                                  const PolyMatrix& mate_b,
                                  const Polynomial& y, const Polynomial& x) {
    const auto& ring = c.gen.ring;
    if (x.is_zero() || y.is_zero()) throw InputError("x and y must be nonzero");
    if (!ideals_equal(ring, c.gen.ideal, {y}))
        throw InputError("certificate must live over S/(y)");
    const auto& a = c.gen.pres;
    auto ye = PolyMatrix::identity(ring, a.rows()).scaled(y);
    if (a * mate_b != ye || mate_b * a != ye)
        throw InputError("mate must satisfy AB=BA=yE");
    PresentedModule gen_new{
        ring, {x * y},
        PolyMatrix::block_diag(
            {a.scaled(x), mate_b.scaled(x), one_by_one(ring, x)})};
    auto out = lemma4_transform(c, mate_b, y, x, gen_new);
    if (!cert_verify(out))
        throw InternalCheckError("scaled certificate fails verification");
    return out;
}

RadiusReport theorem0_certify(const FilteredModule& fm,
                              const std::vector<Theorem0Hyp>& hyps) {
    validate_filtered(fm);
    std::size_t n = fm.n();
    if (hyps.size() != n)
        throw InputError("one hypothesis per filtration layer required");
    const auto& ring = fm.ring;
    auto prod = fm.product();
    std::uint32_t d = 0;
    for (const auto& h : hyps) d = std::max(d, h.d);

    std::vector<BallCertificate> layer_certs;
    auto xpre = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& xi = fm.xs[i];
        const auto& h = hyps[i];
        if (h.g.f != xi) throw InputError("G_i must factor x_i");
        if (h.cert.level != h.d + 1)
            throw InputError("hypothesis certificate level must be d_i+1");
        if (h.cert.gen.pres != h.g.A ||
            !ideals_equal(ring, h.cert.gen.ideal, {xi}))
            throw InputError("hypothesis gen must be Cok(G_i)");
        if (h.cert.target.pres != fm.layers[i].A)
            throw InputError("hypothesis target must be the layer");
        if (!cert_verify(h.cert))
            throw InputError("hypothesis certificate fails verification");

        auto s1 = lemma4_cert_scale(h.cert, h.g.B, xi, xpre);
        auto w = xpre * xi;
        auto hi = make_mf(
            w,
            PolyMatrix::block_diag({h.g.A.scaled(xpre), h.g.B.scaled(xpre),
                                    one_by_one(ring, xpre)}),
            PolyMatrix::block_diag({h.g.B, h.g.A, one_by_one(ring, xi)}));
        auto s2 = lemma5_rewrite(s1, hi);
        auto s3 = cert_promote(s2, prod);
        layer_certs.push_back(cert_raise(s3, d + 1));
        xpre = w;
    }

    // common generator K = direct sum of the K_i
    std::vector<PolyMatrix> kp;
    for (const auto& c : layer_certs) kp.push_back(c.gen.pres);
    PresentedModule kgen{ring, {prod}, PolyMatrix::block_diag(kp)};
    std::size_t off = 0;
    std::vector<BallCertificate> aligned;
    for (auto& c : layer_certs) {
        std::size_t w = c.gen.rank();
        aligned.push_back(cert_regen(c, kgen,
                                     slot_incl(ring, kgen.rank(), off, w),
                                     slot_proj(ring, kgen.rank(), off, w)));
        off += w;
    }
    auto leftcert = cert_direct_sum(aligned);

    auto l3 = lemma3_sequence(fm);
    if (leftcert.target.pres != l3.seq.mods[0].pres)
        throw InternalCheckError("scaled targets do not match the sequence");

    // final generator: K plus one copy of S/(x_i...x_n) per layer i >= 2
    std::vector<PolyMatrix> gp{kgen.pres};
    for (std::size_t i = 2; i <= n; ++i) {
        auto t = Polynomial::constant(ring, 1);
        for (std::size_t s = i; s <= n; ++s) t = t * fm.xs[s - 1];
        gp.push_back(one_by_one(ring, t));
    }
    PresentedModule gfin{ring, {prod}, PolyMatrix::block_diag(gp)};
    std::size_t gf = gfin.rank();
    auto xbranch = cert_regen(leftcert, gfin,
                              slot_incl(ring, gf, 0, kgen.rank()),
                              slot_proj(ring, gf, 0, kgen.rank()));

    // Y branch: Cok F = sum of (S/(x_i...x_n))^{p_i}
    BallCertificate ybranch;
    std::size_t p = l3.p;
    if (p == 0) {
        ybranch = cert_zero(gfin, CertMode::Additive);
    } else {
        ybranch.mode = CertMode::Additive;
        ybranch.level = 1;
        ybranch.gen = gfin;
        ybranch.target = (n >= 2) ? l3.seq.mods[2]
                                  : zero_module(ring, {prod});
        ybranch.incl = PolyMatrix(ring, p * gf, p);
        ybranch.proj = PolyMatrix(ring, p, p * gf);
        std::size_t coord = 0;
        for (std::size_t i = 2; i <= n; ++i) {
            std::size_t slot = kgen.rank() + (i - 2);
            for (std::size_t t = 0; t < fm.layers[i - 1].A.rows(); ++t) {
                ybranch.blocks.push_back(CertBlock{CertBlock::Gen, 0, gfin});
                ybranch.incl.set(coord * gf + slot, coord,
                                 Polynomial::constant(ring, 1));
                ybranch.proj.set(coord, coord * gf + slot,
                                 Polynomial::constant(ring, 1));
                ++coord;
            }
        }
    }

    auto amat = assemble_presentation(fm);
    PresentedModule m{ring, {prod}, amat};
    BallCertificate fin;
    fin.mode = CertMode::Additive;
    fin.level = d + 2;
    fin.gen = gfin;
    fin.target = m;
    fin.xcert = std::make_shared<BallCertificate>(std::move(xbranch));
    fin.ycert = std::make_shared<BallCertificate>(std::move(ybranch));
    if (n == 1) {
        fin.ext_mid = m;
        fin.ext_incl = PolyMatrix::identity(ring, m.rank());
        fin.ext_proj = fin.ext_incl;
        fin.seq_l = fin.ext_incl;
        fin.seq_r = PolyMatrix(ring, 0, m.rank());
    } else {
        fin.ext_mid = l3.seq.mods[1];
        fin.ext_incl = slot_incl(ring, m.rank() + p, 0, m.rank());
        fin.ext_proj = slot_proj(ring, m.rank() + p, 0, m.rank());
        fin.seq_l = l3.seq.maps[0];
        fin.seq_r = l3.seq.maps[1];
    }
    if (fin.xcert->level + 1 != fin.level)
        throw InternalCheckError("level bookkeeping error");
    if (!cert_verify(fin))
        throw InternalCheckError("final certificate fails verification");
    cert_seal(fin);

    RadiusReport rep;
    rep.gen = gfin;
    rep.level = d + 2;
    rep.radius_bound = d + 1;
    rep.statement = "target lies in |gen|_" + std::to_string(d + 2) +
                    ": radius <= " + std::to_string(d + 1) +
                    ", size <= " + std::to_string(d + 2);
    rep.cert = std::move(fin);
    return rep;
}

}  // namespace mfx
