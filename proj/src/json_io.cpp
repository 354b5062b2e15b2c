#include "mfx/json_io.hpp"

namespace mfx {

namespace {

InputError bad(const std::string& what) { return InputError(what); }

}  // namespace

const Json& jfield(const Json& j, const char* key) {
    if (!j.is_object()) throw bad("expected an object around '" +
                                  std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end()) throw bad("missing field '" + std::string(key) + "'");
    return *it;
}

Json ring_to_json(const RingPtr& r) {
    Json j;
    j["vars"] = r->vars;
    if (r->field.kind == FieldKind::Q)
        j["field"] = "Q";
    else
        j["field"] = Json{{"Fp", r->field.p}};
    j["order"] = r->order == MonomialOrder::Grevlex ? "grevlex" : "lex";
    return j;
}

RingPtr ring_from_json(const Json& j) {
    const Json& v = jfield(j, "vars");
    if (!v.is_array()) throw bad("'vars' must be an array");
    std::vector<std::string> vars = v.get<std::vector<std::string>>();
    const Json& f = jfield(j, "field");
    Field field;
    if (f.is_string() && f.get<std::string>() == "Q")
        field = field_q();
    else if (f.is_object() && f.contains("Fp"))
        field = field_fp(f["Fp"].get<std::uint32_t>());
    else
        throw bad("'field' must be \"Q\" or {\"Fp\": p}");
    MonomialOrder order = MonomialOrder::Grevlex;
    if (j.contains("order")) {
        std::string o = j["order"].get<std::string>();
        if (o == "grevlex")
            order = MonomialOrder::Grevlex;
        else if (o == "lex")
            order = MonomialOrder::Lex;
        else
            throw bad("'order' must be \"grevlex\" or \"lex\"");
    }
    return make_ring(std::move(vars), field, order);
}

Json poly_to_json(const Polynomial& p) {
    Json j = Json::array();
    for (const auto& t : p.terms())
        j.push_back(Json{{"c", t.c.str()}, {"e", t.m}});
    return j;
}

Polynomial poly_from_json(const RingPtr& r, const Json& j) {
    if (j.is_string()) return parse_poly(r, j.get<std::string>());
    if (!j.is_array()) throw bad("polynomial must be a term array or string");
    std::vector<Term> terms;
    for (const auto& tj : j) {
        Term t;
        t.c = Scalar::parse(r->field, jfield(tj, "c").get<std::string>());
        t.m = jfield(tj, "e").get<Monomial>();
        if (t.m.size() != r->nvars())
            throw bad("exponent vector length mismatch");
        terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(r, std::move(terms));
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const RingPtr& r, const Json& j) {
    std::size_t rows = jfield(j, "rows").get<std::size_t>();
    std::size_t cols = jfield(j, "cols").get<std::size_t>();
    const Json& e = jfield(j, "entries");
    if (!e.is_array() || e.size() != rows)
        throw bad("'entries' must have 'rows' rows");
    PolyMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!e[i].is_array() || e[i].size() != cols)
            throw bad("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < cols; ++k)
            m.set(i, k, poly_from_json(r, e[i][k]));
    }
    return m;
}

Json module_to_json(const PresentedModule& m) {
    Json ideal = Json::array();
    for (const auto& g : m.ideal) ideal.push_back(poly_to_json(g));
    return Json{{"I", ideal}, {"P", matrix_to_json(m.pres)}};
}

PresentedModule module_from_json(const RingPtr& r, const Json& j) {
    PresentedModule m;
    m.ring = r;
    for (const auto& g : jfield(j, "I"))
        m.ideal.push_back(poly_from_json(r, g));
    m.pres = matrix_from_json(r, jfield(j, "P"));
    return m;
}

Json mf_to_json(const MatrixFactorization& mf) {
    return Json{{"f", poly_to_json(mf.f)},
                {"A", matrix_to_json(mf.A)},
                {"B", matrix_to_json(mf.B)}};
}

MatrixFactorization mf_from_json(const RingPtr& r, const Json& j) {
    return make_mf(poly_from_json(r, jfield(j, "f")),
                   matrix_from_json(r, jfield(j, "A")),
                   matrix_from_json(r, jfield(j, "B")));
}

Json filtered_to_json(const FilteredModule& fm) {
    Json xs = Json::array();
    for (const auto& x : fm.xs) xs.push_back(poly_to_json(x));
    Json layers = Json::array();
    for (const auto& l : fm.layers)
        layers.push_back(Json{{"A", matrix_to_json(l.A)},
                              {"B", matrix_to_json(l.B)}});
    Json blocks = Json::object();
    for (const auto& [key, m] : fm.blocks)
        blocks[std::to_string(key.first) + "," + std::to_string(key.second)] =
            matrix_to_json(m);
    return Json{{"xs", xs}, {"layers", layers}, {"blocks", blocks}};
}

FilteredModule filtered_from_json(const RingPtr& r, const Json& j) {
    FilteredModule fm;
    fm.ring = r;
    for (const auto& x : jfield(j, "xs"))
        fm.xs.push_back(poly_from_json(r, x));
    for (const auto& l : jfield(j, "layers"))
        fm.layers.push_back(FMLayer{matrix_from_json(r, jfield(l, "A")),
                                    matrix_from_json(r, jfield(l, "B"))});
    if (j.contains("blocks"))
        for (const auto& [key, m] : j["blocks"].items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw bad("block key must be \"i,j\"");
            std::size_t i = std::stoul(key.substr(0, comma));
            std::size_t k = std::stoul(key.substr(comma + 1));
            fm.blocks[{i, k}] = matrix_from_json(r, m);
        }
    validate_filtered(fm);
    return fm;
}

Json claim_to_json(const ExactSequenceClaim& c) {
    Json mods = Json::array(), maps = Json::array();
    for (const auto& m : c.mods) mods.push_back(module_to_json(m));
    for (const auto& m : c.maps) maps.push_back(matrix_to_json(m));
    return Json{{"mods", mods}, {"maps", maps}};
}

ExactSequenceClaim claim_from_json(const RingPtr& r, const Json& j) {
    ExactSequenceClaim c;
    for (const auto& m : jfield(j, "mods"))
        c.mods.push_back(module_from_json(r, m));
    for (const auto& m : jfield(j, "maps"))
        c.maps.push_back(matrix_from_json(r, m));
    if (c.mods.size() != c.maps.size() + 1)
        throw bad("sequence needs one more module than maps");
    return c;
}

Json cert_to_json(const BallCertificate& c) {
    Json j;
    j["mode"] = c.mode == CertMode::Closed ? "closed" : "additive";
    j["level"] = c.level;
    j["gen"] = module_to_json(c.gen);
    j["target"] = module_to_json(c.target);
    if (!c.seal.empty()) j["seal"] = c.seal;
    if (c.level <= 1) {
        Json blocks = Json::array();
        for (const auto& b : c.blocks) {
            const char* kind = b.kind == CertBlock::Gen   ? "gen"
                               : b.kind == CertBlock::Ring ? "ring"
                                                           : "syz";
            blocks.push_back(Json{{"kind", kind},
                                  {"syz", b.syz},
                                  {"pres", module_to_json(b.pres)}});
        }
        j["blocks"] = blocks;
        j["incl"] = matrix_to_json(c.incl);
        j["proj"] = matrix_to_json(c.proj);
    } else {
        j["x"] = cert_to_json(*c.xcert);
        j["y"] = cert_to_json(*c.ycert);
        j["mid"] = module_to_json(c.ext_mid);
        j["ext_incl"] = matrix_to_json(c.ext_incl);
        j["ext_proj"] = matrix_to_json(c.ext_proj);
        j["seq_l"] = matrix_to_json(c.seq_l);
        j["seq_r"] = matrix_to_json(c.seq_r);
    }
    return j;
}

BallCertificate cert_from_json(const RingPtr& r, const Json& j) {
    BallCertificate c;
    std::string mode = jfield(j, "mode").get<std::string>();
    if (mode == "closed")
        c.mode = CertMode::Closed;
    else if (mode == "additive")
        c.mode = CertMode::Additive;
    else
        throw bad("'mode' must be \"closed\" or \"additive\"");
    c.level = jfield(j, "level").get<std::uint32_t>();
    c.gen = module_from_json(r, jfield(j, "gen"));
    c.target = module_from_json(r, jfield(j, "target"));
    if (j.contains("seal")) c.seal = j["seal"].get<std::string>();
    if (c.level <= 1) {
        for (const auto& bj : jfield(j, "blocks")) {
            CertBlock b;
            std::string kind = jfield(bj, "kind").get<std::string>();
            if (kind == "gen")
                b.kind = CertBlock::Gen;
            else if (kind == "ring")
                b.kind = CertBlock::Ring;
            else if (kind == "syz")
                b.kind = CertBlock::Syz;
            else
                throw bad("block 'kind' must be gen, ring, or syz");
            b.syz = jfield(bj, "syz").get<std::uint32_t>();
            b.pres = module_from_json(r, jfield(bj, "pres"));
            c.blocks.push_back(std::move(b));
        }
        c.incl = matrix_from_json(r, jfield(j, "incl"));
        c.proj = matrix_from_json(r, jfield(j, "proj"));
    } else {
        c.xcert = std::make_shared<BallCertificate>(
            cert_from_json(r, jfield(j, "x")));
        c.ycert = std::make_shared<BallCertificate>(
            cert_from_json(r, jfield(j, "y")));
        c.ext_mid = module_from_json(r, jfield(j, "mid"));
        c.ext_incl = matrix_from_json(r, jfield(j, "ext_incl"));
        c.ext_proj = matrix_from_json(r, jfield(j, "ext_proj"));
        c.seq_l = matrix_from_json(r, jfield(j, "seq_l"));
        c.seq_r = matrix_from_json(r, jfield(j, "seq_r"));
    }
    return c;
}

Json entry_to_json(const CatalogEntry& e) {
    Json mfs = Json::array();
    for (const auto& mf : e.mfs) mfs.push_back(mf_to_json(mf));
    return Json{{"name", e.name},
                {"params", e.params},
                {"f", poly_to_json(e.f)},
                {"mfs", mfs}};
}

CatalogEntry entry_from_json(const RingPtr& r, const Json& j) {
    CatalogEntry e;
    e.name = jfield(j, "name").get<std::string>();
    if (j.contains("params"))
        e.params = j["params"].get<std::map<std::string, long long>>();
    e.f = poly_from_json(r, jfield(j, "f"));
    for (const auto& mj : jfield(j, "mfs"))
        e.mfs.push_back(mf_from_json(r, mj));
    return e;
}

Json report_to_json(const RadiusReport& r) {
    return Json{{"gen", module_to_json(r.gen)},
                {"level", r.level},
                {"radius_bound", r.radius_bound},
                {"statement", r.statement},
                {"cert", cert_to_json(r.cert)}};
}

}  // namespace mfx
