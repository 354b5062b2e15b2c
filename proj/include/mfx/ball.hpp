#pragma once

#include <memory>
#include <string>

#include "mfx/star.hpp"

namespace mfx {

enum class CertMode { Closed, Additive };

// A building block of a level-1 (leaf) certificate ambient.
// Gen: the generator module itself (pres must equal the certificate's gen).
// Ring: a copy of the base ring S/I (rank-1 presentation, columns in I).
// Syz: Omega^syz of the generator, with explicit presentation data.
struct CertBlock {
    enum Kind { Gen, Ring, Syz } kind = Gen;
    std::uint32_t syz = 0;
    PresentedModule pres;
};

// Certificate that `target` lies in [gen]_level (Closed) or |gen|_level
// (Additive). level 1 = leaf: summand witness of target into the direct sum
// of `blocks`. level >= 2 = extension node: exact 0 -> X -> E -> Y -> 0 with
// X certified at level-1 and Y at level 1, target a summand of E.
struct BallCertificate {
    CertMode mode = CertMode::Closed;
    std::uint32_t level = 1;
    PresentedModule gen;
    PresentedModule target;
    // leaf body
    std::vector<CertBlock> blocks;
    PolyMatrix incl, proj;
    // extension body
    std::shared_ptr<BallCertificate> xcert, ycert;
    PresentedModule ext_mid;
    PolyMatrix ext_incl, ext_proj;
    PolyMatrix seq_l, seq_r;  // X -> E and E -> Y

    // Content seal over the whole tree (excluding seal fields). Emitted
    // certificates are sealed so that any edit - including ones that leave
    // the mathematical claim true, like scaling an ideal generator - is
    // rejected. Empty = unsealed; verification is then purely semantic.
    std::string seal;
};

// Digest of the certificate tree, independent of seal fields.
std::string cert_digest(const BallCertificate& c);

// Stamps c.seal with the digest of its content.
void cert_seal(BallCertificate& c);

bool cert_verify(const BallCertificate& c);

// Leaf certificate target = gen with the identity witness.
BallCertificate cert_identity(const PresentedModule& gen, CertMode mode);

// Leaf certificate for the zero module (empty ambient).
BallCertificate cert_zero(const PresentedModule& gen, CertMode mode);

// Wraps 0 -> N -> N -> 0 -> 0 nodes until the certificate has the level.
BallCertificate cert_raise(const BallCertificate& c, std::uint32_t level);

// Direct sum of certificates with equal gen, mode, and level.
BallCertificate cert_direct_sum(const std::vector<BallCertificate>& cs);

// Transport a certificate to a larger generator: iota/pi witness gen as a
// summand of new_gen; every Gen block is re-expressed through new_gen.
// Only Gen and Ring blocks are supported (additive certificates qualify).
BallCertificate cert_regen(const BallCertificate& c,
                           const PresentedModule& new_gen,
                           const PolyMatrix& iota, const PolyMatrix& pi);

// Retag a certificate over S/(w) as one over S/(prod), prod in (w);
// presentations get w-multiples of the unit vectors appended when those are
// not already in the column module.
BallCertificate cert_promote(const BallCertificate& c, const Polynomial& prod);

// Lemma-style rewrite: a closed-mode certificate over S/(f) whose gen is
// Cok(mf.A) becomes an additive-mode certificate with gen
// M + S/(f) + Omega M, presented by diag(A, (f), B). Level preserved.
BallCertificate lemma5_rewrite(const BallCertificate& c,
                               const MatrixFactorization& mf);

// Scaling transformer: a certificate of Cok C in [Cok A]_r over S/(y), with
// mate B (AB = BA = yE), becomes a certificate of Cok(xC) in
// [Cok(xA) + Cok(xB) + S/(x)]_r over S/(xy). Level preserved.
BallCertificate lemma4_cert_scale(const BallCertificate& c,
                                  const PolyMatrix& mate_b,
                                  const Polynomial& y, const Polynomial& x);

struct Theorem0Hyp {
    MatrixFactorization g;  // G_i, a matrix factorization of x_i
    std::uint32_t d = 0;    // d_i
    BallCertificate cert;   // Cok A_i in [Cok G_i.A]_{d_i+1} over S/(x_i)
};

struct RadiusReport {
    PresentedModule gen;
    std::uint32_t level = 0;         // d + 2
    std::uint32_t radius_bound = 0;  // d + 1
    std::string statement;
    BallCertificate cert;
};

// The full pipeline: scale each hypothesis certificate across the filtration,
// rewrite additively, assemble along the lemma sequence, and certify the
// filtered module's cokernel at level d+2.
RadiusReport theorem0_certify(const FilteredModule& fm,
                              const std::vector<Theorem0Hyp>& hyps);

}  // namespace mfx
