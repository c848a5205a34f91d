#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coho/report.hpp"
#include "coho/session.hpp"

// Command surface. Every subcommand resolves its keys against the session
// (a file when --session is given, the bundled corpus otherwise), delegates
// to one engine call, and prints one report. Exit 0 means computed or passed,
// 1 means bad input, 2 means a check command reached a fail verdict.

namespace {

using namespace coho;

struct Args {
    std::string command;
    std::string session_path;
    std::string field_text;
    int max_degree = 3;
    std::string output = "table";
    std::string key;
    std::string c;
    std::string a;
    std::string m;
    std::string n;
    std::string x;
    std::string coalgebra;
    std::string ses;
    std::string flip;
    std::string b;
    std::string fixed;
    std::string coeff;
    std::string variant;
    std::string filtration = "I";
    int page = 2;
    bool total = false;
    bool identity_witness = false;
    int order = 0;
};

const std::string& need(const std::string& v, const char* flag) {
    if (v.empty())
        throw Error(Errc::MalformedInput, std::string(flag) + " is required here");
    return v;
}

void print_doc(const ReportDoc& doc, const std::string& output) {
    std::cout << (output == "json" ? render_json(doc) : render_table(doc));
}

template <class F>
std::string mat_block(const F& f, const std::string& label, const Mat<F>& m) {
    std::ostringstream out;
    out << "  " << label << " (" << m.rows << "x" << m.cols << ")";
    for (int r = 0; r < m.rows; ++r) {
        out << "\n   ";
        for (int c = 0; c < m.cols; ++c) out << " " << f.str(m.at(r, c));
    }
    out << "\n";
    return out.str();
}

template <class F>
struct Ctx {
    const SessionData<F>& s;

    const FinCoalgebra<F>& coalgebra(const std::string& key) const {
        auto it = s.coalgebras.find(key);
        if (it == s.coalgebras.end())
            throw Error(Errc::DanglingReference, "no coalgebra '" + key + "'");
        return it->second;
    }

    const FinAlgebra<F>& algebra(const std::string& key) const {
        auto it = s.algebras.find(key);
        if (it == s.algebras.end())
            throw Error(Errc::DanglingReference, "no algebra '" + key + "'");
        return it->second;
    }

    const Bicomodule<F>& bicomodule(const std::string& key) const {
        auto it = s.bicomodules.find(key);
        if (it == s.bicomodules.end())
            throw Error(Errc::DanglingReference, "no bicomodule '" + key + "'");
        return it->second;
    }

    bool is_bicomodule(const std::string& key) const {
        return s.bicomodules.count(key) != 0;
    }

    RightComodule<F> right(const std::string& key) const {
        auto it = s.comodules.find(key);
        if (it != s.comodules.end() && it->second.right) return *it->second.right;
        auto bt = s.bicomodules.find(key);
        if (bt != s.bicomodules.end()) return bt->second.forget_left();
        throw Error(Errc::DanglingReference, "no right comodule under key '" + key + "'");
    }

    LeftComodule<F> left(const std::string& key) const {
        auto it = s.comodules.find(key);
        if (it != s.comodules.end() && it->second.left) return *it->second.left;
        auto bt = s.bicomodules.find(key);
        if (bt != s.bicomodules.end()) return bt->second.forget_right();
        throw Error(Errc::DanglingReference, "no left comodule under key '" + key + "'");
    }

    const Bimodule<F>& bimodule(const std::string& key) const {
        auto it = s.bimodules.find(key);
        if (it == s.bimodules.end())
            throw Error(Errc::DanglingReference, "no bimodule '" + key + "'");
        return it->second;
    }

    const SES<F>& ses(const std::string& key) const {
        auto it = s.sequences.find(key);
        if (it == s.sequences.end())
            throw Error(Errc::DanglingReference, "no sequence '" + key + "'");
        return it->second;
    }

    const FlipSpec<F>& flip(const std::string& key) const {
        auto it = s.flips.find(key);
        if (it == s.flips.end()) throw Error(Errc::DanglingReference, "no flip '" + key + "'");
        return it->second;
    }

    void expect_over(const FinCoalgebra<F>& have, const std::string& ckey) const {
        if (ckey.empty()) return;
        if (!(have == coalgebra(ckey)))
            throw Error(Errc::MixedCoalgebras,
                        "object does not live over coalgebra '" + ckey + "'");
    }
};

template <class F>
int run_with(const SessionData<F>& s, const Args& a) {
    Ctx<F> ctx{s};
    const F& f = s.f;
    ReportDoc doc;
    doc.command = a.command;
    doc.meta.emplace_back("field", f.spec().str());
    auto finish_check = [&](const CheckReport& rep, const char* yes = "pass",
                            const char* no = "fail") {
        doc.checks.push_back(rep);
        doc.verdict = rep.pass() ? yes : no;
        print_doc(doc, a.output);
        return rep.pass() ? 0 : 2;
    };

    if (a.command == "validate") {
        CheckReport rep{"objects", {}};
        auto one = [&](const std::string& key, const std::string& kind) {
            bool ok = true;
            if (kind == "coalgebra") {
                ok = validate_coalgebra(s.coalgebras.at(key)).pass();
            } else if (kind == "algebra") {
                ok = validate_algebra(s.algebras.at(key)).pass();
            } else if (kind == "comodule") {
                const auto& pc = s.comodules.at(key);
                if (pc.right) ok = ok && validate_comodule(*pc.right).pass();
                if (pc.left) ok = ok && validate_comodule(*pc.left).pass();
            } else if (kind == "bicomodule") {
                ok = validate_comodule(s.bicomodules.at(key)).pass();
            } else if (kind == "bimodule") {
                ok = validate_bimodule(s.bimodules.at(key)).pass();
            } else if (kind == "sequence") {
                ok = validate_ses(s.sequences.at(key)).pass();
            } else {
                const auto& flip = s.flips.at(key);
                for (size_t k = 0; k < flip.pivots.size(); ++k)
                    ok = ok && pivot_verify(flip.pivots[k]).pass();
            }
            rep.add(kind + " " + key, ok);
        };
        if (!a.key.empty()) {
            auto it = s.kinds.find(a.key);
            if (it == s.kinds.end())
                throw Error(Errc::DanglingReference, "no object '" + a.key + "'");
            one(it->first, it->second);
        } else {
            for (const auto& [key, kind] : s.kinds) one(key, kind);
        }
        return finish_check(rep);
    }

    if (a.command == "dual") {
        if (a.c.empty() == a.a.empty())
            throw Error(Errc::MalformedInput, "dual needs exactly one of --c or --a");
        SessionData<F> frag;
        frag.f = f;
        if (!a.c.empty()) {
            auto d = dualize(ctx.coalgebra(a.c));
            doc.meta.emplace_back("c", a.c);
            doc.scalars.emplace_back("dim", d.dim);
            doc.blocks.push_back(mat_block(f, "mul", d.mul));
            doc.blocks.push_back(mat_block(f, "unit", d.unit));
            frag.algebras.emplace(a.c + ".dual", std::move(d));
        } else {
            auto d = dualize(ctx.algebra(a.a));
            doc.meta.emplace_back("a", a.a);
            doc.scalars.emplace_back("dim", d.dim);
            doc.blocks.push_back(mat_block(f, "delta", d.delta));
            doc.blocks.push_back(mat_block(f, "counit", d.counit));
            frag.coalgebras.emplace(a.a + ".dual", std::move(d));
        }
        doc.object_json = emit_session(Session(std::move(frag)));
        if (a.output == "table") doc.blocks.clear(), doc.blocks.push_back(*doc.object_json);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "envelope") {
        auto e = envelope(ctx.coalgebra(need(a.c, "--c")));
        doc.meta.emplace_back("c", a.c);
        doc.scalars.emplace_back("dim", e.dim);
        SessionData<F> frag;
        frag.f = f;
        frag.coalgebras.emplace(a.c + ".env", std::move(e));
        doc.object_json = emit_session(Session(std::move(frag)));
        if (a.output == "table") doc.blocks.push_back(*doc.object_json);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "cotensor") {
        auto m = ctx.right(need(a.m, "--m"));
        auto n = ctx.left(need(a.n, "--n"));
        ctx.expect_over(m.over, a.coalgebra);
        auto sub = cotensor(m, n);
        doc.meta.emplace_back("m", a.m);
        doc.meta.emplace_back("n", a.n);
        doc.scalars.emplace_back("dim", sub.dim());
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "cotor") {
        auto m = ctx.right(need(a.m, "--m"));
        auto n = ctx.left(need(a.n, "--n"));
        ctx.expect_over(m.over, a.coalgebra);
        doc.meta.emplace_back("m", a.m);
        doc.meta.emplace_back("n", a.n);
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        doc.dims = cotor(m, n, a.max_degree);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "cohom") {
        doc.meta.emplace_back("x", need(a.x, "--x"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        long dim = 0;
        if (ctx.is_bicomodule(a.x) && ctx.is_bicomodule(a.m)) {
            const auto& x = ctx.bicomodule(a.x);
            ctx.expect_over(x.right_over, a.coalgebra);
            dim = cohom_space(x, ctx.bicomodule(a.m)).dim();
        } else {
            auto x = ctx.right(a.x);
            ctx.expect_over(x.over, a.coalgebra);
            dim = cohom_space(x, ctx.right(a.m)).dim();
        }
        doc.scalars.emplace_back("dim", dim);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "coext") {
        doc.meta.emplace_back("x", need(a.x, "--x"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        doc.dims = pseudo_coext(ctx.bicomodule(a.x), ctx.bicomodule(a.m), a.max_degree);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "adjoined") {
        doc.meta.emplace_back("coalgebra", need(a.coalgebra, "--coalgebra"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        doc.dims = adjoined_homology(ctx.coalgebra(a.coalgebra), ctx.bicomodule(a.m),
                                     a.max_degree);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "hh-alg") {
        doc.meta.emplace_back("a", need(a.a, "--a"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        doc.meta.emplace_back("variant", a.variant);
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        auto v = a.variant == "chain" ? HochschildVariant::Chain : HochschildVariant::Cochain;
        doc.dims = hochschild_dims(ctx.algebra(a.a), ctx.bimodule(a.m), a.max_degree, v);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "hh-coalg") {
        doc.meta.emplace_back("coalgebra", need(a.coalgebra, "--coalgebra"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        doc.dims = coalgebra_hochschild(ctx.coalgebra(a.coalgebra), ctx.bicomodule(a.m),
                                        a.max_degree);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "les") {
        const auto& ses = ctx.ses(need(a.ses, "--ses"));
        doc.meta.emplace_back("ses", a.ses);
        doc.meta.emplace_back("variant", a.variant);
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        CheckReport rep;
        if (a.variant == "cotor") {
            doc.meta.emplace_back("fixed", need(a.fixed, "--fixed"));
            rep = les_check_cotor(ses, ctx.left(a.fixed), a.max_degree);
        } else {
            doc.meta.emplace_back("coeff", need(a.coeff, "--coeff"));
            rep = les_check_coext(ses, ctx.bicomodule(a.coeff), a.max_degree);
        }
        return finish_check(rep);
    }

    if (a.command == "spectral") {
        const auto& flip = ctx.flip(need(a.flip, "--flip"));
        doc.meta.emplace_back("flip", a.flip);
        doc.meta.emplace_back("c", need(a.c, "--c"));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        auto grid = flipping_grid(flip, ctx.bicomodule(a.c), a.max_degree);
        auto filt = a.filtration == "II" ? Filtration::II : Filtration::I;
        doc.grids.emplace_back("E" + std::to_string(a.page) + "-" + a.filtration,
                               spectral_page(grid, filt, a.page));
        if (a.total) doc.dims = total_homology(grid);
        print_doc(doc, a.output);
        return 0;
    }

    if (a.command == "check-aw") {
        auto n = ctx.right(need(a.n, "--n"));
        auto m = ctx.left(need(a.m, "--m"));
        doc.meta.emplace_back("coalgebra", need(a.coalgebra, "--coalgebra"));
        doc.meta.emplace_back("m", a.m);
        doc.meta.emplace_back("n", a.n);
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        return finish_check(
            abrams_weibel_check(ctx.coalgebra(a.coalgebra), n, m, a.max_degree));
    }

    if (a.command == "check-duality") {
        doc.meta.emplace_back("coalgebra", need(a.coalgebra, "--coalgebra"));
        doc.meta.emplace_back("m", need(a.m, "--m"));
        doc.meta.emplace_back("order", std::to_string(a.order));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        return finish_check(duality_check(ctx.coalgebra(a.coalgebra), ctx.bicomodule(a.m),
                                          a.order, a.max_degree));
    }

    if (a.command == "check-autoenvelope") {
        const auto& c = ctx.coalgebra(need(a.c, "--c"));
        doc.meta.emplace_back("c", a.c);
        std::optional<Mat<F>> w;
        if (a.identity_witness && envelope(c).dim == c.dim) w = Mat<F>::ident(f, c.dim);
        return finish_check(autoenvelope_check(c, w));
    }

    if (a.command == "check-flipping") {
        const auto& flip = ctx.flip(need(a.flip, "--flip"));
        doc.meta.emplace_back("flip", a.flip);
        doc.meta.emplace_back("b", need(a.b, "--b"));
        doc.meta.emplace_back("c", need(a.c, "--c"));
        doc.meta.emplace_back("max-degree", std::to_string(a.max_degree));
        try {
            return finish_check(
                flipping_check(flip, ctx.bicomodule(a.b), ctx.bicomodule(a.c), a.max_degree));
        } catch (const Error& e) {
            if (e.code() != Errc::PivotFailure) throw;
            doc.meta.emplace_back("pivot-failure", e.what());
            doc.verdict = "fail";
            print_doc(doc, a.output);
            return 2;
        }
    }

    if (a.command == "probe-injector") {
        doc.meta.emplace_back("x", need(a.x, "--x"));
        doc.meta.emplace_back("ses", need(a.ses, "--ses"));
        return finish_check(injector_probe(ctx.bicomodule(a.x), ctx.ses(a.ses)), "consistent",
                            "refuted");
    }

    throw Error(Errc::MalformedInput, "unknown command '" + a.command + "'");
}

} // namespace

int main(int argc, char** argv) {
    Args args;
    CLI::App app{"exact homological algebra over finite-dimensional coalgebras"};
    app.require_subcommand(1);
    app.add_option("--session", args.session_path, "session file (bundled corpus when absent)");
    app.add_option("--field", args.field_text, "Q or Fp:<p>; must match the session field");
    app.add_option("--max-degree", args.max_degree, "top degree computed")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output", args.output, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* validate = app.add_subcommand("validate", "re-run axiom checks on session objects");
    validate->add_option("--key", args.key, "single object to check");

    auto* dual = app.add_subcommand("dual", "dual algebra of a coalgebra or the reverse");
    dual->add_option("--c", args.c, "coalgebra key");
    dual->add_option("--a", args.a, "algebra key");

    auto* env = app.add_subcommand("envelope", "enveloping coalgebra");
    env->add_option("--c", args.c, "coalgebra key")->required();

    auto* cotensor = app.add_subcommand("cotensor", "cotensor product dimension");
    cotensor->add_option("--m", args.m, "right comodule key")->required();
    cotensor->add_option("--n", args.n, "left comodule key")->required();
    cotensor->add_option("--coalgebra", args.coalgebra, "expected base coalgebra");

    auto* cotor = app.add_subcommand("cotor", "cotor dimensions via the cobar complex");
    cotor->add_option("--m", args.m, "right comodule key")->required();
    cotor->add_option("--n", args.n, "left comodule key")->required();
    cotor->add_option("--coalgebra", args.coalgebra, "expected base coalgebra");

    auto* cohom = app.add_subcommand("cohom", "cohom dimension (dual colinear-map space)");
    cohom->add_option("--x", args.x, "source key")->required();
    cohom->add_option("--m", args.m, "argument key")->required();
    cohom->add_option("--coalgebra", args.coalgebra, "expected base coalgebra");

    auto* coext = app.add_subcommand("coext", "pseudo-coext dimensions from the cofree resolution");
    coext->add_option("--x", args.x, "resolved bicomodule key")->required();
    coext->add_option("--m", args.m, "coefficient bicomodule key")->required();

    auto* adjoined = app.add_subcommand("adjoined", "adjoined homology of a coalgebra");
    adjoined->add_option("--coalgebra", args.coalgebra, "coalgebra key")->required();
    adjoined->add_option("--m", args.m, "coefficient bicomodule key")->required();

    auto* hha = app.add_subcommand("hh-alg", "Hochschild dimensions of an algebra");
    hha->add_option("--a", args.a, "algebra key")->required();
    hha->add_option("--m", args.m, "bimodule key")->required();
    hha->add_option("--variant", args.variant, "cochain or chain")
        ->default_val("cochain")
        ->check(CLI::IsMember({"cochain", "chain"}));

    auto* hhc = app.add_subcommand("hh-coalg", "coalgebra Hochschild via the envelope");
    hhc->add_option("--coalgebra", args.coalgebra, "coalgebra key")->required();
    hhc->add_option("--m", args.m, "coefficient bicomodule key")->required();

    auto* les = app.add_subcommand("les", "long exact sequence node check");
    les->add_option("--ses", args.ses, "sequence key")->required();
    les->add_option("--variant", args.variant, "cotor or coext")
        ->required()
        ->check(CLI::IsMember({"cotor", "coext"}));
    les->add_option("--fixed", args.fixed, "fixed left comodule key (cotor variant)");
    les->add_option("--coeff", args.coeff, "coefficient bicomodule key (coext variant)");

    auto* spectral = app.add_subcommand("spectral", "spectral page of a flipping bicomplex");
    spectral->add_option("--flip", args.flip, "flip key")->required();
    spectral->add_option("--c", args.c, "second-slot bicomodule key")->required();
    spectral->add_option("--filtration", args.filtration, "I or II")
        ->check(CLI::IsMember({"I", "II"}));
    spectral->add_option("--page", args.page, "page 0, 1 or 2")->check(CLI::Range(0, 2));
    spectral->add_flag("--total", args.total, "also print total-complex homology");

    auto* aw = app.add_subcommand("check-aw", "cobar vs Hochschild dimension agreement");
    aw->add_option("--coalgebra", args.coalgebra, "coalgebra key")->required();
    aw->add_option("--m", args.m, "left comodule key")->required();
    aw->add_option("--n", args.n, "right comodule key")->required();

    auto* dua = app.add_subcommand("check-duality", "Hochschild vs adjoined duality table");
    dua->add_option("--coalgebra", args.coalgebra, "coalgebra key")->required();
    dua->add_option("--m", args.m, "coefficient bicomodule key")->required();
    dua->add_option("--order", args.order, "duality order")->required();

    auto* autoe = app.add_subcommand("check-autoenvelope", "compare a coalgebra with its envelope");
    autoe->add_option("--c", args.c, "coalgebra key")->required();
    autoe->add_flag("--identity-witness", args.identity_witness,
                    "use the identity map as the isomorphism witness");

    auto* flip = app.add_subcommand("check-flipping", "flipping resolution and collapse check");
    flip->add_option("--flip", args.flip, "flip key")->required();
    flip->add_option("--b", args.b, "base bicomodule key")->required();
    flip->add_option("--c", args.c, "second-slot bicomodule key")->required();

    auto* probe = app.add_subcommand("probe-injector", "exactness probe against one sequence");
    probe->add_option("--x", args.x, "candidate bicomodule key")->required();
    probe->add_option("--ses", args.ses, "sequence key")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    args.command = app.get_subcommands().front()->get_name();

    try {
        Session session =
            args.session_path.empty()
                ? builtin_session(args.field_text.empty()
                                      ? FieldSpec{FieldSpec::Kind::Rationals, 0}
                                      : parse_field_spec(args.field_text))
                : load_session(args.session_path);
        if (!args.session_path.empty() && !args.field_text.empty()) {
            auto want = parse_field_spec(args.field_text);
            if (!(want == session_field(session)))
                throw Error(Errc::MalformedInput, "field " + want.str() +
                                                      " does not match session field " +
                                                      session_field(session).str());
        }
        return std::visit([&](const auto& data) { return run_with(data, args); }, session);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
