#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "coho/session.hpp"

using namespace coho;

static std::string g_fixtures_dir;

int main(int argc, char** argv) {
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_fixtures_dir = argv[argc - 1];
        --argc;
    }
    doctest::Context ctx(argc, argv);
    return ctx.run();
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string load_error(const std::string& text) {
    try {
        parse_session(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("builtin corpus inventory") {
    for (const char* spec : {"Q", "Fp:2", "Fp:5"}) {
        auto s = builtin_session(parse_field_spec(spec));
        CHECK(session_field(s).str() == spec);
        std::visit(
            [](const auto& data) {
                CHECK(data.kinds.size() == 20);
                CHECK(data.coalgebras.size() == 4);
                CHECK(data.algebras.size() == 2);
                CHECK(data.comodules.size() == 4);
                CHECK(data.bicomodules.size() == 5);
                CHECK(data.bimodules.size() == 2);
                CHECK(data.sequences.size() == 2);
                CHECK(data.flips.size() == 1);
                CHECK(data.coalgebras.at("DP2").dim == 2);
                CHECK(data.bicomodules.at("Creg").dim == 2);
                CHECK(data.sequence_refs.at("socle").n == "Creg");
                CHECK(data.comodules.at("k").right.has_value());
                CHECK(data.comodules.at("k").left.has_value());
            },
            s);
    }
}

TEST_CASE("emit and reload is byte stable") {
    for (const char* spec : {"Q", "Fp:5"}) {
        auto s = builtin_session(parse_field_spec(spec));
        auto text = emit_session(s);
        auto s2 = parse_session(text);
        CHECK(emit_session(s2) == text);
    }
}

TEST_CASE("reload gives structurally identical objects") {
    auto s = builtin_session(parse_field_spec("Q"));
    auto s2 = parse_session(emit_session(s));
    const auto& a = std::get<SessionData<Rationals>>(s);
    const auto& b = std::get<SessionData<Rationals>>(s2);
    CHECK(a.coalgebras.at("DP2") == b.coalgebras.at("DP2"));
    CHECK(a.coalgebras.at("MC2") == b.coalgebras.at("MC2"));
    CHECK(a.algebras.at("M2") == b.algebras.at("M2"));
    CHECK(a.bicomodules.at("Creg").rho == b.bicomodules.at("Creg").rho);
    CHECK(a.bicomodules.at("Creg").lambda == b.bicomodules.at("Creg").lambda);
    CHECK(a.sequences.at("socle").i == b.sequences.at("socle").i);
    CHECK(a.flips.at("flipK1").pivots[0].psi[0] == b.flips.at("flipK1").pivots[0].psi[0]);
    CHECK(a.kinds == b.kinds);
}

TEST_CASE("shipped fixture files match the generator") {
    REQUIRE(!g_fixtures_dir.empty());
    struct Row {
        const char* file;
        const char* spec;
    };
    for (auto [file, spec] : {Row{"corpus_q.json", "Q"}, Row{"corpus_f2.json", "Fp:2"},
                              Row{"corpus_f5.json", "Fp:5"}}) {
        auto text = slurp(g_fixtures_dir + "/" + file);
        CHECK(text == emit_session(builtin_session(parse_field_spec(spec))));
    }
}

TEST_CASE("minimal file with a coalgebra and comodule loads") {
    auto s = parse_session(R"({
        "field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "comodules": {"triv": {"over": "K1", "dim": 1, "rho": [["1"]]}}
    })");
    const auto& d = std::get<SessionData<Rationals>>(s);
    CHECK(d.kinds.size() == 2);
    CHECK(d.comodules.at("triv").right->dim == 1);
    CHECK(!d.comodules.at("triv").left.has_value());
    // integers and "a/b" strings both read; emission canonicalizes to strings
    CHECK(contains(emit_session(s), "\"1\""));
}

TEST_CASE("field spec parsing") {
    CHECK(parse_field_spec("Q").kind == FieldSpec::Kind::Rationals);
    CHECK(parse_field_spec("Fp:7").p == 7);
    CHECK_THROWS_AS(parse_field_spec("Fp:9"), Error);
    CHECK_THROWS_AS(parse_field_spec("Fp:"), Error);
    CHECK_THROWS_AS(parse_field_spec("Z"), Error);
    CHECK_THROWS_AS(parse_field_spec("Fp:7x"), Error);
}

TEST_CASE("duplicate keys are rejected") {
    auto msg = load_error(R"({"field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]},
                       "K1": {"dim": 1, "delta": [[1]], "counit": [1]}}})");
    CHECK(contains(msg, "duplicate key 'K1'"));
    // same key under two different kinds
    msg = load_error(R"({"field": "Q",
        "coalgebras": {"x": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "comodules": {"x": {"over": "x", "dim": 1, "rho": [[1]]}}})");
    CHECK(contains(msg, "key 'x' defined twice"));
}

TEST_CASE("dangling references are named") {
    auto msg = load_error(R"({"field": "Q",
        "comodules": {"orphan": {"over": "ghost", "dim": 1, "rho": [[1]]}}})");
    CHECK(contains(msg, "DanglingReference"));
    CHECK(contains(msg, "orphan"));
    CHECK(contains(msg, "ghost"));
    msg = load_error(R"({"field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "sequences": {"s": {"m": "a", "n": "b", "o": "c", "i": [[1]], "p": [[1]]}}})");
    CHECK(contains(msg, "DanglingReference"));
}

TEST_CASE("axiom failures name the object and the axiom") {
    // divided-power delta with a corrupted counit
    auto msg = load_error(R"({"field": "Q",
        "coalgebras": {"DP2": {"dim": 2,
            "delta": [[1, 0], [0, 1], [0, 1], [0, 0]],
            "counit": [1, 1]}}})");
    CHECK(contains(msg, "DP2"));
    CHECK(contains(msg, "counit"));
    // comodule whose coaction satisfies no law at all
    msg = load_error(R"({"field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "comodules": {"bad": {"over": "K1", "dim": 1, "rho": [[2]]}}})");
    CHECK(contains(msg, "bad"));
    CHECK(contains(msg, "coassociativity"));
    // sequence with a non-exact middle
    msg = load_error(R"({"field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "bicomodules": {"pt": {"left_over": "K1", "right_over": "K1", "dim": 1,
                               "lambda": [[1]], "rho": [[1]]}},
        "sequences": {"s": {"m": "pt", "n": "pt", "o": "pt", "i": [[1]], "p": [[1]]}}})");
    CHECK(contains(msg, "s: "));
    CHECK(contains(msg, "composite-zero"));
}

TEST_CASE("prime field scalars are range checked") {
    auto msg = load_error(R"({"field": "Fp:5",
        "coalgebras": {"c": {"dim": 1, "delta": [[7]], "counit": [1]}}})");
    CHECK(contains(msg, "residue 7"));
    msg = load_error(R"({"field": "Fp:5",
        "coalgebras": {"c": {"dim": 1, "delta": [[-1]], "counit": [1]}}})");
    CHECK(contains(msg, "residue -1"));
    msg = load_error(R"({"field": "Fp:5",
        "coalgebras": {"c": {"dim": 1, "delta": [["2"]], "counit": [1]}}})");
    CHECK(contains(msg, "integer"));
}

TEST_CASE("shape and schema violations") {
    auto msg = load_error(R"({"field": "Q",
        "coalgebras": {"c": {"dim": 2, "delta": [[1, 0], [0, 1]], "counit": [1, 0]}}})");
    CHECK(contains(msg, "expected 4 rows"));
    msg = load_error(R"({"field": "Q",
        "coalgebras": {"c": {"dim": 1, "delta": [[1]], "counit": [1], "extra": 0}}})");
    CHECK(contains(msg, "unknown member"));
    msg = load_error(R"({"field": "Q", "widgets": {}})");
    CHECK(contains(msg, "unknown section"));
    msg = load_error(R"({"field": "Q",
        "comodules": {"m": {"over": "K1", "dim": 1}},
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}}})");
    CHECK(contains(msg, "needs \"rho\" or \"lambda\""));
    msg = load_error(R"([1, 2])");
    CHECK(contains(msg, "session must be a JSON object"));
    msg = load_error(R"({"field": "Q")");
    CHECK(contains(msg, "parse error"));
    CHECK_THROWS_AS(load_session("/nonexistent/file.json"), Error);
}

TEST_CASE("flip loading checks pivot shapes and endpoints") {
    std::string base = R"({"field": "Q",
        "coalgebras": {"K1": {"dim": 1, "delta": [[1]], "counit": [1]}},
        "bicomodules": {"pt": {"left_over": "K1", "right_over": "K1", "dim": 1,
                               "lambda": [[1]], "rho": [[1]]}},
        "flips": {"fl": {"resolved": "pt", "aug": [[1]], "pivots": [
            {"f": "cohom", "g": "cotensor", "p": "pt", "i": "pt",
             "test_objects": ["pt"], "psi": [[[1]]],
             "test_morphisms": [{"src": 0, "tgt": 0, "u": [[1]]}]}]}}})";
    auto s = parse_session(base);
    const auto& d = std::get<SessionData<Rationals>>(s);
    CHECK(d.flips.at("fl").pivots.size() == 1);
    CHECK(emit_session(parse_session(emit_session(s))) == emit_session(s));

    auto broken = base;
    broken.replace(broken.find("\"src\": 0, \"tgt\": 0"), 18, "\"src\": 0, \"tgt\": 3");
    CHECK(contains(load_error(broken), "endpoint out of range"));
    broken = base;
    broken.replace(broken.find("\"psi\": [[[1]]]"), 14, "\"psi\": [[[1], [1]]]");
    CHECK(contains(load_error(broken), "psi"));
    broken = base;
    broken.replace(broken.find("\"g\": \"cotensor\""), 15, "\"g\": \"mystery\"");
    CHECK(contains(load_error(broken), "unknown functor"));
}
