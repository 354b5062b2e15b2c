#include "mfx/dispatch.hpp"

#include <functional>
#include <map>

#include "mfx/truncated.hpp"

namespace mfx {

namespace {

RingPtr ring_of(const Json& in) { return ring_from_json(jfield(in, "ring")); }

std::vector<Polynomial> polys_of(const RingPtr& r, const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of polynomials");
    std::vector<Polynomial> out;
    for (const auto& p : j) out.push_back(poly_from_json(r, p));
    return out;
}

Json vec_to_json(const FreeVec& v) {
    Json j = Json::array();
    for (const auto& p : v) j.push_back(poly_to_json(p));
    return j;
}

FreeVec vec_from_json(const RingPtr& r, const Json& j) {
    if (!j.is_array()) throw InputError("expected a polynomial vector");
    FreeVec v;
    for (const auto& p : j) v.push_back(poly_from_json(r, p));
    return v;
}

// ok=true/success
Json pass(Json result) { return result; }

struct Verdict {
    bool ok;
    Json result;
};

using Handler = std::function<Verdict(const Json&)>;

// Exactness with the optional finite-field truncated cross-check.
bool checked_exact(const Json& in, const ExactSequenceClaim& claim, bool inj,
                   bool surj) {
    bool g = exact_check(claim, inj, surj);
    if (in.contains("truncation_oracle")) {
        std::uint32_t d = in["truncation_oracle"].get<std::uint32_t>();
        bool t = truncated_exact_check(claim, inj, surj, d);
        if (t != g)
            throw InternalCheckError("Groebner and truncated verdicts differ");
    }
    return g;
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"gb",
         [](const Json& in) {
             auto r = ring_of(in);
             auto gb = ideal_gb(r, polys_of(r, jfield(in, "I")));
             Json basis = Json::array();
             for (const auto& g : gb.generators())
                 basis.push_back(poly_to_json(g[0]));
             return Verdict{true, pass(Json{{"basis", basis}})};
         }},
        {"nf",
         [](const Json& in) {
             auto r = ring_of(in);
             auto gb = ideal_gb(r, polys_of(r, jfield(in, "I")));
             auto v = normal_form({poly_from_json(r, jfield(in, "v"))}, gb);
             return Verdict{true, poly_to_json(v[0])};
         }},
        {"ker",
         [](const Json& in) {
             auto r = ring_of(in);
             auto a = matrix_from_json(r, jfield(in, "A"));
             auto modulo = polys_of(r, jfield(in, "modulo"));
             std::optional<PolyMatrix> pres;
             if (in.contains("pres"))
                 pres = matrix_from_json(r, in["pres"]);
             auto ker = module_kernel(a, modulo, pres ? &*pres : nullptr);
             Json gens = Json::array();
             for (const auto& v : ker) gens.push_back(vec_to_json(v));
             return Verdict{true, Json{{"kernel", gens}}};
         }},
        {"lift",
         [](const Json& in) {
             auto r = ring_of(in);
             auto a = matrix_from_json(r, jfield(in, "A"));
             auto b = vec_from_json(r, jfield(in, "b"));
             auto modulo = polys_of(r, jfield(in, "modulo"));
             auto sol = lift_solve(a, b, modulo);
             if (!sol) return Verdict{false, Json()};
             return Verdict{true, vec_to_json(*sol)};
         }},
        {"mod.check-morphism",
         [](const Json& in) {
             auto r = ring_of(in);
             auto src = module_from_json(r, jfield(in, "src"));
             auto tgt = module_from_json(r, jfield(in, "tgt"));
             auto f = matrix_from_json(r, jfield(in, "map"));
             return Verdict{morphism_check(src, tgt, f), Json()};
         }},
        {"mod.check-iso",
         [](const Json& in) {
             auto r = ring_of(in);
             auto a = module_from_json(r, jfield(in, "a"));
             auto b = module_from_json(r, jfield(in, "b"));
             auto f = matrix_from_json(r, jfield(in, "f"));
             auto g = matrix_from_json(r, jfield(in, "g"));
             return Verdict{iso_check(a, b, f, g), Json()};
         }},
        {"mod.check-exact",
         [](const Json& in) {
             auto r = ring_of(in);
             auto claim = claim_from_json(r, in);
             bool inj = !in.contains("left_injective") ||
                        in["left_injective"].get<bool>();
             bool surj = !in.contains("right_surjective") ||
                         in["right_surjective"].get<bool>();
             return Verdict{checked_exact(in, claim, inj, surj), Json()};
         }},
        {"mf.verify",
         [](const Json& in) {
             auto r = ring_of(in);
             // raw read: a failing factorization is verified-false, not
             // malformed
             MatrixFactorization mf{
                 r, poly_from_json(r, jfield(in, "f")),
                 matrix_from_json(r, jfield(in, "A")),
                 matrix_from_json(r, jfield(in, "B"))};
             return Verdict{mf_verify(mf), Json()};
         }},
        {"mf.from-presentation",
         [](const Json& in) {
             auto r = ring_of(in);
             auto mf = mf_from_presentation(
                 matrix_from_json(r, jfield(in, "A")),
                 poly_from_json(r, jfield(in, "f")));
             return Verdict{true, mf_to_json(mf)};
         }},
        {"mf.syzygy",
         [](const Json& in) {
             auto r = ring_of(in);
             return Verdict{
                 true, mf_to_json(mf_syzygy(mf_from_json(r, jfield(in, "mf"))))};
         }},
        {"mf.transpose",
         [](const Json& in) {
             auto r = ring_of(in);
             return Verdict{true, mf_to_json(mf_transpose(
                                      mf_from_json(r, jfield(in, "mf"))))};
         }},
        {"mf.periodicity",
         [](const Json& in) {
             auto r = ring_of(in);
             return Verdict{
                 mf_periodicity_check(mf_from_json(r, jfield(in, "mf"))),
                 Json()};
         }},
        {"mf.sum",
         [](const Json& in) {
             auto r = ring_of(in);
             const Json& mfs = jfield(in, "mfs");
             if (!mfs.is_array() || mfs.empty())
                 throw InputError("'mfs' must be a nonempty array");
             auto acc = mf_from_json(r, mfs[0]);
             for (std::size_t i = 1; i < mfs.size(); ++i)
                 acc = mf_direct_sum(acc, mf_from_json(r, mfs[i]));
             return Verdict{true, mf_to_json(acc)};
         }},
        {"mf.scale",
         [](const Json& in) {
             auto r = ring_of(in);
             auto m = mf_scale(matrix_from_json(r, jfield(in, "A")),
                               poly_from_json(r, jfield(in, "y")),
                               poly_from_json(r, jfield(in, "x")));
             return Verdict{true, module_to_json(m)};
         }},
        {"star.assemble",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             return Verdict{true, matrix_to_json(assemble_presentation(fm))};
         }},
        {"star.build-c",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             return Verdict{true, matrix_to_json(build_C(fm))};
         }},
        {"star.reduce-c",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             auto rec = reduce_C(fm);
             return Verdict{true, Json{{"U", matrix_to_json(rec.U)},
                                       {"Uinv", matrix_to_json(rec.Uinv)},
                                       {"V", matrix_to_json(rec.V)},
                                       {"Vinv", matrix_to_json(rec.Vinv)},
                                       {"result", matrix_to_json(rec.result)}}};
         }},
        {"star.lemma3",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             auto out = lemma3_sequence(fm);
             bool ok = checked_exact(in, out.seq, true, true);
             return Verdict{ok, Json{{"seq", claim_to_json(out.seq)},
                                     {"p", out.p}}};
         }},
        {"star.filtrate",
         [](const Json& in) {
             auto r = ring_of(in);
             auto m = module_from_json(r, jfield(in, "module"));
             auto xs = polys_of(r, jfield(in, "xs"));
             auto res = compute_filtration(m, xs);
             return Verdict{true,
                            Json{{"fm", filtered_to_json(res.fm)},
                                 {"gens", matrix_to_json(res.gens)},
                                 {"from_m", matrix_to_json(res.from_m)}}};
         }},
        {"star.reassoc",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             auto k = jfield(in, "k").get<std::size_t>();
             auto rep = star_reassociate(fm, k);
             return Verdict{true,
                            Json{{"fm", filtered_to_json(rep.fm)},
                                 {"pushout", module_to_json(rep.pushout)},
                                 {"seq_yl", claim_to_json(rep.seq_yl)},
                                 {"seq_xm", claim_to_json(rep.seq_xm)}}};
         }},
        {"cert.verify",
         [](const Json& in) {
             auto r = ring_of(in);
             auto c = cert_from_json(r, jfield(in, "cert"));
             return Verdict{cert_verify(c), Json()};
         }},
        {"cert.lemma5",
         [](const Json& in) {
             auto r = ring_of(in);
             auto c = cert_from_json(r, jfield(in, "cert"));
             auto mf = mf_from_json(r, jfield(in, "mf"));
             return Verdict{true, cert_to_json(lemma5_rewrite(c, mf))};
         }},
        {"cert.scale",
         [](const Json& in) {
             auto r = ring_of(in);
             auto c = cert_from_json(r, jfield(in, "cert"));
             auto out = lemma4_cert_scale(
                 c, matrix_from_json(r, jfield(in, "mate_b")),
                 poly_from_json(r, jfield(in, "y")),
                 poly_from_json(r, jfield(in, "x")));
             return Verdict{true, cert_to_json(out)};
         }},
        {"cert.theorem0",
         [](const Json& in) {
             auto r = ring_of(in);
             auto fm = filtered_from_json(r, jfield(in, "fm"));
             std::vector<Theorem0Hyp> hyps;
             for (const auto& hj : jfield(in, "hyps"))
                 hyps.push_back(Theorem0Hyp{
                     mf_from_json(r, jfield(hj, "g")),
                     jfield(hj, "d").get<std::uint32_t>(),
                     cert_from_json(r, jfield(hj, "cert"))});
             auto rep = theorem0_certify(fm, hyps);
             return Verdict{true, report_to_json(rep)};
         }},
        {"catalog.list",
         [](const Json&) {
             Json names = Json::array();
             for (const auto& i : catalog_list())
                 names.push_back(Json{{"name", i.name}, {"params", i.params}});
             return Verdict{true, names};
         }},
        {"catalog.get",
         [](const Json& in) {
             auto r = ring_of(in);
             std::map<std::string, long long> params;
             if (in.contains("params"))
                 params =
                     in["params"].get<std::map<std::string, long long>>();
             auto e = catalog_get(r, jfield(in, "name").get<std::string>(),
                                  params);
             return Verdict{true, entry_to_json(e)};
         }},
        {"catalog.register",
         [](const Json& in) {
             auto r = ring_of(in);
             auto e = entry_from_json(r, jfield(in, "entry"));
             catalog_register(e);
             return Verdict{true, Json{{"registered", e.name}}};
         }},
    };
    return h;
}

}  // namespace

DispatchResult dispatch(const std::string& op, const Json& input) {
    DispatchResult out;
    out.output["op"] = op;
    auto it = handlers().find(op);
    if (it == handlers().end()) {
        out.exit_code = 2;
        out.output["ok"] = false;
        out.output["error"] = "unknown operation '" + op + "'";
        return out;
    }
    try {
        auto v = it->second(input);
        out.output["ok"] = v.ok;
        out.output["result"] = std::move(v.result);
        out.exit_code = v.ok ? 0 : 1;
    } catch (const InputError& e) {
        out.exit_code = 2;
        out.output["ok"] = false;
        out.output["error"] = e.what();
    } catch (const InternalCheckError& e) {
        out.exit_code = 2;
        out.output["ok"] = false;
        out.output["error"] = std::string("internal check failed: ") + e.what();
    } catch (const Error& e) {
        // domain failures (not annihilated, nonzero kernel, ...) are
        // verified-false conditions
        out.exit_code = 1;
        out.output["ok"] = false;
        out.output["error"] = e.what();
    } catch (const Json::exception& e) {
        out.exit_code = 2;
        out.output["ok"] = false;
        out.output["error"] = e.what();
    }
    return out;
}

std::vector<std::string> dispatch_ops() {
    std::vector<std::string> ops;
    for (const auto& [name, h] : handlers()) ops.push_back(name);
    return ops;
}

}  // namespace mfx
