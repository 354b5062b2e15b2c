#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mfx/dispatch.hpp"

namespace {

struct Options {
    std::string input_path;   // empty = stdin
    std::string output_path;  // empty = stdout
    std::string field;        // "Q" or "Fp:<p>"
    std::string order;        // "grevlex" or "lex"
    long long truncation = -1;
};

// Two-word subcommands ("mod check-exact") map to dotted dispatch ops.
std::string to_op(const std::string& group, const std::string& leaf) {
    return group.empty() ? leaf : group + "." + leaf;
}

int run(const std::string& op, const Options& opt) {
    mfx::Json input;
    try {
        if (!opt.input_path.empty()) {
            std::ifstream in(opt.input_path);
            if (!in) {
                std::cerr << "cannot open '" << opt.input_path << "'\n";
                return 2;
            }
            input = mfx::Json::parse(in);
        } else if (op == "catalog.list") {
            input = mfx::Json::object();
        } else {
            input = mfx::Json::parse(std::cin);
        }
    } catch (const mfx::Json::parse_error& e) {
        mfx::Json err{{"op", op}, {"ok", false}, {"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }

    if (!opt.field.empty() || !opt.order.empty()) {
        if (!input.contains("ring")) input["ring"] = mfx::Json::object();
        if (!opt.field.empty()) {
            if (opt.field == "Q") {
                input["ring"]["field"] = "Q";
            } else if (opt.field.rfind("Fp:", 0) == 0) {
                input["ring"]["field"] =
                    mfx::Json{{"Fp", std::stoul(opt.field.substr(3))}};
            } else {
                std::cerr << "--field must be Q or Fp:<p>\n";
                return 2;
            }
        }
        if (!opt.order.empty()) input["ring"]["order"] = opt.order;
    }
    if (opt.truncation >= 0) input["truncation_oracle"] = opt.truncation;

    auto res = mfx::dispatch(op, input);
    std::string text = res.output.dump(2) + "\n";
    if (opt.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output_path);
        out << text;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix-factorization and extension-category toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("-i,--input", opt.input_path, "input JSON file (default stdin)");
    app.add_option("-o,--output", opt.output_path, "output file (default stdout)");
    app.add_option("--field", opt.field, "coefficient field: Q or Fp:<p>");
    app.add_option("--order", opt.order, "monomial order: grevlex or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--truncation-oracle", opt.truncation,
                   "also run the finite-field truncated linear-algebra "
                   "cross-check to this degree");

    std::string op;
    auto leaf = [&](CLI::App* parent, const std::string& group,
                    const std::string& name, const std::string& desc) {
        auto* sub = parent->add_subcommand(name, desc);
        sub->callback([&op, group, name] { op = to_op(group, name); });
        return sub;
    };

    leaf(&app, "", "gb", "reduced Groebner basis of an ideal");
    leaf(&app, "", "nf", "normal form of a polynomial");
    leaf(&app, "", "ker", "kernel of a matrix over a quotient ring");
    leaf(&app, "", "lift", "solve A c = b over a quotient ring");

    auto* mod = app.add_subcommand("mod", "presented-module checks");
    mod->require_subcommand(1);
    leaf(mod, "mod", "check-morphism", "well-definedness of a map");
    leaf(mod, "mod", "check-iso", "mutually inverse isomorphisms");
    leaf(mod, "mod", "check-exact", "exactness of a complex");

    auto* mf = app.add_subcommand("mf", "matrix-factorization calculus");
    mf->require_subcommand(1);
    leaf(mf, "mf", "verify", "A B = B A = f E");
    leaf(mf, "mf", "from-presentation", "complete A to a factorization of f");
    leaf(mf, "mf", "syzygy", "mate swap (A,B) -> (B,A)");
    leaf(mf, "mf", "transpose", "transpose factorization");
    leaf(mf, "mf", "periodicity", "2-periodicity of the induced complex");
    leaf(mf, "mf", "sum", "direct sum of factorizations of the same f");
    leaf(mf, "mf", "scale", "Cok A over S/(y) as Cok(xA) over S/(xy)");

    auto* star = app.add_subcommand("star", "extension-category machinery");
    star->require_subcommand(1);
    leaf(star, "star", "assemble", "assembled upper-triangular presentation");
    leaf(star, "star", "build-c", "the big matrix C");
    leaf(star, "star", "reduce-c", "equivalence chain U C V = diag(A, 0)");
    leaf(star, "star", "lemma3", "the snake-lemma exact sequence");
    leaf(star, "star", "filtrate", "colon filtration of a module");
    leaf(star, "star", "reassoc", "pushout regrouping of the extension data");

    auto* cert = app.add_subcommand("cert", "ball-membership certificates");
    cert->require_subcommand(1);
    leaf(cert, "cert", "verify", "verify a certificate tree");
    leaf(cert, "cert", "lemma5", "rewrite a closed ball into an additive one");
    leaf(cert, "cert", "scale", "scale a certificate across a factor");
    leaf(cert, "cert", "theorem0", "full radius-certification pipeline");

    auto* cat = app.add_subcommand("catalog", "named matrix factorizations");
    cat->require_subcommand(1);
    leaf(cat, "catalog", "list", "list entries");
    leaf(cat, "catalog", "get", "fetch an entry");
    leaf(cat, "catalog", "register", "validate and register an entry");

    CLI11_PARSE(app, argc, argv);
    return run(op, opt);
}
