#include "coho/session.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coho/fixtures.hpp"

namespace coho {

namespace {

using nlohmann::json;

// Parse with duplicate-key rejection; the default parser silently keeps the
// last duplicate, which would let a corrupted session load.
json parse_checked(const std::string& text) {
    std::vector<std::set<std::string>> stack;
    json::parser_callback_t cb = [&stack](int, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::object_start) {
            stack.emplace_back();
        } else if (ev == json::parse_event_t::object_end) {
            stack.pop_back();
        } else if (ev == json::parse_event_t::key) {
            auto k = parsed.get<std::string>();
            if (!stack.back().insert(k).second)
                throw Error(Errc::MalformedInput, "duplicate key '" + k + "'");
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::exception& e) {
        throw Error(Errc::MalformedInput, std::string("parse error: ") + e.what());
    }
}

Rationals::Elem read_scalar(const Rationals& f, const json& j, const std::string& where) {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_long(j.get<long>());
    throw Error(Errc::MalformedInput, where + ": expected a rational \"a/b\" string");
}

PrimeField::Elem read_scalar(const PrimeField& f, const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error(Errc::MalformedInput, where + ": expected an integer residue");
    long long v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.p)
        throw Error(Errc::MalformedInput,
                    where + ": residue " + std::to_string(v) + " outside [0," + std::to_string(f.p) + ")");
    return static_cast<PrimeField::Elem>(v);
}

json emit_scalar(const Rationals& f, const Rationals::Elem& e) { return json(f.str(e)); }
json emit_scalar(const PrimeField&, PrimeField::Elem e) { return json(e); }

template <class F>
Mat<F> read_mat(const F& f, const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw Error(Errc::MalformedInput,
                    where + ": expected " + std::to_string(rows) + " rows");
    Mat<F> out(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error(Errc::MalformedInput,
                        where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) +
                            " entries");
        for (int c = 0; c < cols; ++c)
            out.at(r, c) = read_scalar(f, row[c], where + "[" + std::to_string(r) + "][" +
                                                      std::to_string(c) + "]");
    }
    return out;
}

template <class F>
json emit_mat(const F& f, const Mat<F>& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(emit_scalar(f, m.at(r, c)));
        out.push_back(row);
    }
    return out;
}

// length-d array convenience for counit/unit vectors
template <class F>
Mat<F> read_vec_row(const F& f, const json& j, int d, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw Error(Errc::MalformedInput, where + ": expected " + std::to_string(d) + " entries");
    Mat<F> out(f, 1, d);
    for (int c = 0; c < d; ++c)
        out.at(0, c) = read_scalar(f, j[c], where + "[" + std::to_string(c) + "]");
    return out;
}

template <class F>
Mat<F> read_vec_col(const F& f, const json& j, int d, const std::string& where) {
    auto row = read_vec_row(f, j, d, where);
    return row.t();
}

template <class F>
json emit_vec(const F& f, const Mat<F>& m) {
    json out = json::array();
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.push_back(emit_scalar(f, m.at(r, c)));
    return out;
}

int read_dim(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw Error(Errc::MalformedInput, where + ": dim must be a nonnegative integer");
    return j.get<int>();
}

const json& member(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw Error(Errc::MalformedInput, where + ": missing \"" + key + "\"");
    return *it;
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw Error(Errc::MalformedInput, where + ": unknown member \"" + it.key() + "\"");
    }
}

void fail_on(const CheckReport& rep, const std::string& key) {
    for (const auto& row : rep.rows)
        if (!row.ok)
            throw Error(Errc::MalformedInput,
                        key + ": " + row.label + (row.note.empty() ? "" : " (" + row.note + ")"));
}

BifunctorTag tag_of(const std::string& name, const std::string& where) {
    if (name == "plain-tensor") return BifunctorTag::PlainTensor;
    if (name == "cotensor") return BifunctorTag::Cotensor;
    if (name == "comodule-hom") return BifunctorTag::ComoduleHom;
    if (name == "cohom") return BifunctorTag::Cohom;
    throw Error(Errc::MalformedInput, where + ": unknown functor \"" + name + "\"");
}

template <class F>
class Loader {
  public:
    Loader(F f, const json& root) : f_(f), root_(root) { data_.f = f; }

    SessionData<F> run() {
        static const char* sections[] = {"field",       "coalgebras", "algebras", "comodules",
                                         "bicomodules", "bimodules",  "sequences", "flips"};
        for (auto it = root_.begin(); it != root_.end(); ++it) {
            bool ok = false;
            for (const char* s : sections) ok = ok || it.key() == s;
            if (!ok)
                throw Error(Errc::MalformedInput, "unknown section \"" + it.key() + "\"");
        }
        section("coalgebras", [&](const std::string& k, const json& j) { coalgebra(k, j); });
        section("algebras", [&](const std::string& k, const json& j) { algebra(k, j); });
        section("comodules", [&](const std::string& k, const json& j) { comodule(k, j); });
        section("bicomodules", [&](const std::string& k, const json& j) { bicomodule(k, j); });
        section("bimodules", [&](const std::string& k, const json& j) { bimodule(k, j); });
        section("sequences", [&](const std::string& k, const json& j) { sequence(k, j); });
        section("flips", [&](const std::string& k, const json& j) { flip(k, j); });
        return std::move(data_);
    }

  private:
    template <class Fn>
    void section(const char* name, Fn fn) {
        auto it = root_.find(name);
        if (it == root_.end()) return;
        if (!it->is_object())
            throw Error(Errc::MalformedInput, std::string(name) + " must be an object");
        for (auto obj = it->begin(); obj != it->end(); ++obj) fn(obj.key(), obj.value());
    }

    void claim(const std::string& key, const char* kind) {
        if (!data_.kinds.emplace(key, kind).second)
            throw Error(Errc::MalformedInput, "key '" + key + "' defined twice");
    }

    const FinCoalgebra<F>& over(const std::string& key, const std::string& who) {
        auto it = data_.coalgebras.find(key);
        if (it == data_.coalgebras.end())
            throw Error(Errc::DanglingReference, who + ": no coalgebra '" + key + "'");
        return it->second;
    }

    const Bicomodule<F>& bic(const std::string& key, const std::string& who) {
        auto it = data_.bicomodules.find(key);
        if (it == data_.bicomodules.end())
            throw Error(Errc::DanglingReference, who + ": no bicomodule '" + key + "'");
        return it->second;
    }

    void coalgebra(const std::string& key, const json& j) {
        claim(key, "coalgebra");
        expect_keys(j, {"dim", "delta", "counit"}, key);
        int d = read_dim(member(j, "dim", key), key);
        FinCoalgebra<F> c{f_, d, read_mat(f_, member(j, "delta", key), d * d, d, key + ".delta"),
                          read_vec_row(f_, member(j, "counit", key), d, key + ".counit")};
        fail_on(validate_coalgebra(c), key);
        data_.coalgebras.emplace(key, std::move(c));
    }

    void algebra(const std::string& key, const json& j) {
        claim(key, "algebra");
        expect_keys(j, {"dim", "mul", "unit"}, key);
        int d = read_dim(member(j, "dim", key), key);
        FinAlgebra<F> a{f_, d, read_mat(f_, member(j, "mul", key), d, d * d, key + ".mul"),
                        read_vec_col(f_, member(j, "unit", key), d, key + ".unit")};
        fail_on(validate_algebra(a), key);
        data_.algebras.emplace(key, std::move(a));
    }

    void comodule(const std::string& key, const json& j) {
        claim(key, "comodule");
        expect_keys(j, {"over", "dim", "rho", "lambda"}, key);
        const auto& ckey = member(j, "over", key).get_ref<const std::string&>();
        const auto& c = over(ckey, key);
        int m = read_dim(member(j, "dim", key), key);
        PairedComodule<F> pc;
        if (j.contains("rho")) {
            RightComodule<F> r{c, m, read_mat(f_, j["rho"], m * c.dim, m, key + ".rho")};
            fail_on(validate_comodule(r), key);
            pc.right = std::move(r);
        }
        if (j.contains("lambda")) {
            LeftComodule<F> l{c, m, read_mat(f_, j["lambda"], c.dim * m, m, key + ".lambda")};
            fail_on(validate_comodule(l), key);
            pc.left = std::move(l);
        }
        if (!pc.right && !pc.left)
            throw Error(Errc::MalformedInput, key + ": needs \"rho\" or \"lambda\"");
        data_.comodule_over.emplace(key, ckey);
        data_.comodules.emplace(key, std::move(pc));
    }

    void bicomodule(const std::string& key, const json& j) {
        claim(key, "bicomodule");
        expect_keys(j, {"left_over", "right_over", "dim", "lambda", "rho"}, key);
        const auto& lkey = member(j, "left_over", key).get_ref<const std::string&>();
        const auto& rkey = member(j, "right_over", key).get_ref<const std::string&>();
        const auto& lc = over(lkey, key);
        const auto& rc = over(rkey, key);
        int m = read_dim(member(j, "dim", key), key);
        Bicomodule<F> b{lc, rc, m,
                        read_mat(f_, member(j, "lambda", key), lc.dim * m, m, key + ".lambda"),
                        read_mat(f_, member(j, "rho", key), m * rc.dim, m, key + ".rho")};
        fail_on(validate_comodule(b), key);
        data_.bicomodule_over.emplace(key, std::make_pair(lkey, rkey));
        data_.bicomodules.emplace(key, std::move(b));
    }

    void bimodule(const std::string& key, const json& j) {
        claim(key, "bimodule");
        expect_keys(j, {"over", "dim", "left_act", "right_act"}, key);
        const auto& akey = member(j, "over", key).get_ref<const std::string&>();
        auto it = data_.algebras.find(akey);
        if (it == data_.algebras.end())
            throw Error(Errc::DanglingReference, key + ": no algebra '" + akey + "'");
        const auto& a = it->second;
        int m = read_dim(member(j, "dim", key), key);
        Bimodule<F> b{a, m, read_mat(f_, member(j, "left_act", key), m, a.dim * m, key + ".left_act"),
                      read_mat(f_, member(j, "right_act", key), m, m * a.dim, key + ".right_act")};
        fail_on(validate_bimodule(b), key);
        data_.bimodule_over.emplace(key, akey);
        data_.bimodules.emplace(key, std::move(b));
    }

    void sequence(const std::string& key, const json& j) {
        claim(key, "sequence");
        expect_keys(j, {"m", "n", "o", "i", "p"}, key);
        SesRefs refs{member(j, "m", key).get<std::string>(),
                     member(j, "n", key).get<std::string>(),
                     member(j, "o", key).get<std::string>()};
        const auto& m = bic(refs.m, key);
        const auto& n = bic(refs.n, key);
        const auto& o = bic(refs.o, key);
        SES<F> s{m, n, o, read_mat(f_, member(j, "i", key), n.dim, m.dim, key + ".i"),
                 read_mat(f_, member(j, "p", key), o.dim, n.dim, key + ".p")};
        fail_on(validate_ses(s), key);
        data_.sequence_refs.emplace(key, std::move(refs));
        data_.sequences.emplace(key, std::move(s));
    }

    void flip(const std::string& key, const json& j) {
        claim(key, "flip");
        expect_keys(j, {"resolved", "pivots", "aug", "maps"}, key);
        FlipRefs refs;
        refs.resolved = member(j, "resolved", key).get<std::string>();
        FlipSpec<F> spec;
        spec.resolved = bic(refs.resolved, key);
        const auto& pv = member(j, "pivots", key);
        if (!pv.is_array() || pv.empty())
            throw Error(Errc::MalformedInput, key + ": pivots must be a nonempty array");
        for (size_t k = 0; k < pv.size(); ++k) {
            const auto& pj = pv[k];
            std::string where = key + ".pivots[" + std::to_string(k) + "]";
            expect_keys(pj, {"f", "g", "p", "i", "test_objects", "psi", "test_morphisms"}, where);
            PivotSpec<F> ps;
            ps.f_tag = tag_of(member(pj, "f", where).get<std::string>(), where);
            ps.g_tag = tag_of(member(pj, "g", where).get<std::string>(), where);
            PivotRefs pr;
            pr.p = member(pj, "p", where).get<std::string>();
            pr.i = member(pj, "i", where).get<std::string>();
            ps.p = bic(pr.p, where);
            ps.i = bic(pr.i, where);
            for (const auto& ok : member(pj, "test_objects", where)) {
                pr.objects.push_back(ok.get<std::string>());
                ps.test_objects.push_back(bic(pr.objects.back(), where));
            }
            const auto& psij = member(pj, "psi", where);
            if (!psij.is_array() || psij.size() != ps.test_objects.size())
                throw Error(Errc::MalformedInput,
                            where + ": one psi component per test object");
            for (size_t a = 0; a < psij.size(); ++a) {
                auto fp = bifunctor_cell(ps.f_tag, ps.p, ps.test_objects[a]);
                auto gi = bifunctor_cell(ps.g_tag, ps.i, ps.test_objects[a]);
                ps.psi.push_back(read_mat(f_, psij[a], gi.dim(), fp.dim(),
                                          where + ".psi[" + std::to_string(a) + "]"));
            }
            if (pj.contains("test_morphisms")) {
                for (const auto& tj : pj["test_morphisms"]) {
                    std::string tw = where + ".test_morphisms";
                    expect_keys(tj, {"src", "tgt", "u"}, tw);
                    typename PivotSpec<F>::TestMorphism tm;
                    tm.src = read_dim(member(tj, "src", tw), tw);
                    tm.tgt = read_dim(member(tj, "tgt", tw), tw);
                    if (tm.src >= static_cast<int>(ps.test_objects.size()) ||
                        tm.tgt >= static_cast<int>(ps.test_objects.size()))
                        throw Error(Errc::MalformedInput, tw + ": endpoint out of range");
                    tm.u = read_mat(f_, member(tj, "u", tw), ps.test_objects[tm.tgt].dim,
                                    ps.test_objects[tm.src].dim, tw + ".u");
                    ps.test_morphisms.push_back(std::move(tm));
                }
            }
            refs.pivots.push_back(std::move(pr));
            spec.pivots.push_back(std::move(ps));
        }
        bool desc = contravariant_first(spec.pivots[0].f_tag);
        const auto& t0 = spec.pivots[0].p;
        if (desc)
            spec.aug = read_mat(f_, member(j, "aug", key), spec.resolved.dim, t0.dim, key + ".aug");
        else
            spec.aug = read_mat(f_, member(j, "aug", key), t0.dim, spec.resolved.dim, key + ".aug");
        if (j.contains("maps")) {
            const auto& mj = j["maps"];
            if (!mj.is_array() || mj.size() + 1 != spec.pivots.size())
                throw Error(Errc::MalformedInput, key + ": one map per adjacent pivot pair");
            for (size_t k = 0; k < mj.size(); ++k) {
                const auto& src = spec.pivots[desc ? k + 1 : k].p;
                const auto& tgt = spec.pivots[desc ? k : k + 1].p;
                spec.maps.push_back(read_mat(f_, mj[k], tgt.dim, src.dim,
                                             key + ".maps[" + std::to_string(k) + "]"));
            }
        } else if (spec.pivots.size() != 1) {
            throw Error(Errc::MalformedInput, key + ": one map per adjacent pivot pair");
        }
        data_.flip_refs.emplace(key, std::move(refs));
        data_.flips.emplace(key, std::move(spec));
    }

    F f_;
    const json& root_;
    SessionData<F> data_;
};

const char* tag_name(BifunctorTag t) { return bifunctor_name(t); }

template <class F>
json emit_data(const SessionData<F>& s) {
    const F& f = s.f;
    json root;
    root["field"] = f.spec().str();
    if (!s.coalgebras.empty()) {
        json sec;
        for (const auto& [key, c] : s.coalgebras)
            sec[key] = {{"dim", c.dim}, {"delta", emit_mat(f, c.delta)},
                        {"counit", emit_vec(f, c.counit)}};
        root["coalgebras"] = std::move(sec);
    }
    if (!s.algebras.empty()) {
        json sec;
        for (const auto& [key, a] : s.algebras)
            sec[key] = {{"dim", a.dim}, {"mul", emit_mat(f, a.mul)}, {"unit", emit_vec(f, a.unit)}};
        root["algebras"] = std::move(sec);
    }
    if (!s.comodules.empty()) {
        json sec;
        for (const auto& [key, pc] : s.comodules) {
            json obj;
            obj["over"] = s.comodule_over.at(key);
            obj["dim"] = pc.right ? pc.right->dim : pc.left->dim;
            if (pc.right) obj["rho"] = emit_mat(f, pc.right->rho);
            if (pc.left) obj["lambda"] = emit_mat(f, pc.left->lambda);
            sec[key] = std::move(obj);
        }
        root["comodules"] = std::move(sec);
    }
    if (!s.bicomodules.empty()) {
        json sec;
        for (const auto& [key, b] : s.bicomodules) {
            const auto& refs = s.bicomodule_over.at(key);
            sec[key] = {{"left_over", refs.first},
                        {"right_over", refs.second},
                        {"dim", b.dim},
                        {"lambda", emit_mat(f, b.lambda)},
                        {"rho", emit_mat(f, b.rho)}};
        }
        root["bicomodules"] = std::move(sec);
    }
    if (!s.bimodules.empty()) {
        json sec;
        for (const auto& [key, b] : s.bimodules)
            sec[key] = {{"over", s.bimodule_over.at(key)},
                        {"dim", b.dim},
                        {"left_act", emit_mat(f, b.left_act)},
                        {"right_act", emit_mat(f, b.right_act)}};
        root["bimodules"] = std::move(sec);
    }
    if (!s.sequences.empty()) {
        json sec;
        for (const auto& [key, ses] : s.sequences) {
            const auto& refs = s.sequence_refs.at(key);
            sec[key] = {{"m", refs.m}, {"n", refs.n}, {"o", refs.o},
                        {"i", emit_mat(f, ses.i)}, {"p", emit_mat(f, ses.p)}};
        }
        root["sequences"] = std::move(sec);
    }
    if (!s.flips.empty()) {
        json sec;
        for (const auto& [key, flip] : s.flips) {
            const auto& refs = s.flip_refs.at(key);
            json pivots = json::array();
            for (size_t k = 0; k < flip.pivots.size(); ++k) {
                const auto& pv = flip.pivots[k];
                const auto& pr = refs.pivots[k];
                json pj = {{"f", tag_name(pv.f_tag)}, {"g", tag_name(pv.g_tag)},
                           {"p", pr.p},              {"i", pr.i}};
                pj["test_objects"] = pr.objects;
                json psi = json::array();
                for (const auto& w : pv.psi) psi.push_back(emit_mat(f, w));
                pj["psi"] = std::move(psi);
                json tms = json::array();
                for (const auto& tm : pv.test_morphisms)
                    tms.push_back({{"src", tm.src}, {"tgt", tm.tgt}, {"u", emit_mat(f, tm.u)}});
                pj["test_morphisms"] = std::move(tms);
                pivots.push_back(std::move(pj));
            }
            json fj = {{"resolved", refs.resolved}, {"aug", emit_mat(f, flip.aug)}};
            fj["pivots"] = std::move(pivots);
            json maps = json::array();
            for (const auto& m : flip.maps) maps.push_back(emit_mat(f, m));
            fj["maps"] = std::move(maps);
            sec[key] = std::move(fj);
        }
        root["flips"] = std::move(sec);
    }
    return root;
}

template <class F>
SessionData<F> builtin_corpus(F f) {
    using namespace fixtures;
    json root;
    root["field"] = f.spec().str();
    SessionData<F> s;
    s.f = f;
    auto claim = [&s](const std::string& key, const char* kind) { s.kinds.emplace(key, kind); };

    auto k1 = point_coalgebra(f);
    auto dp2 = divided_power2(f);
    auto mc2 = matrix_coalgebra2(f);
    auto g2 = grouplikes2(f);
    s.coalgebras = {{"K1", k1}, {"DP2", dp2}, {"MC2", mc2}, {"G2", g2}};
    for (const char* key : {"K1", "DP2", "MC2", "G2"}) claim(key, "coalgebra");

    auto a2 = dual_numbers(f);
    auto m2 = matrix_algebra2(f);
    s.algebras = {{"A2", a2}, {"M2", m2}};
    claim("A2", "algebra");
    claim("M2", "algebra");

    auto pt = grouplike_point(dp2, 0);
    auto gpt = grouplike_point(g2, 0);
    auto id3 = Mat<F>::ident(f, 3);
    s.comodules["k"] = PairedComodule<F>{pt.forget_left(), pt.forget_right()};
    s.comodules["kg"] = PairedComodule<F>{gpt.forget_left(), gpt.forget_right()};
    s.comodules["M"] = PairedComodule<F>{RightComodule<F>{k1, 3, id3}, LeftComodule<F>{k1, 3, id3}};
    s.comodules["S"] = PairedComodule<F>{simple_right_mc2(f), simple_left_mc2(f)};
    s.comodule_over = {{"k", "DP2"}, {"kg", "G2"}, {"M", "K1"}, {"S", "MC2"}};
    for (const char* key : {"k", "kg", "M", "S"}) claim(key, "comodule");

    auto kpt = regular_bicomodule(k1);
    auto id2 = Mat<F>::ident(f, 2);
    Bicomodule<F> nn{k1, k1, 2, id2, id2};
    auto creg = regular_bicomodule(dp2);
    Mat<F> lam(f, 2, 1), rho(f, 2, 1);
    lam.at(0, 0) = f.one();
    rho.at(0, 0) = f.one();
    Bicomodule<F> quot{dp2, dp2, 1, lam, rho};
    s.bicomodules = {{"kpt", kpt}, {"N", nn}, {"Creg", creg}, {"kb", pt}, {"quot", quot}};
    s.bicomodule_over = {{"kpt", {"K1", "K1"}},
                         {"N", {"K1", "K1"}},
                         {"Creg", {"DP2", "DP2"}},
                         {"kb", {"DP2", "DP2"}},
                         {"quot", {"DP2", "DP2"}}};
    for (const char* key : {"kpt", "N", "Creg", "kb", "quot"}) claim(key, "bicomodule");

    s.bimodules = {{"A", regular_bimodule(a2)}, {"AM2", regular_bimodule(m2)}};
    s.bimodule_over = {{"A", "A2"}, {"AM2", "M2"}};
    claim("A", "bimodule");
    claim("AM2", "bimodule");

    Mat<F> si(f, 2, 1), sp(f, 1, 2);
    si.at(0, 0) = f.one();
    sp.at(0, 1) = f.one();
    s.sequences["socle"] = SES<F>{pt, creg, quot, si, sp};
    s.sequence_refs["socle"] = SesRefs{"kb", "Creg", "quot"};
    claim("socle", "sequence");
    s.sequences["split"] = SES<F>{kpt, nn, kpt, si, sp};
    s.sequence_refs["split"] = SesRefs{"kpt", "N", "kpt"};
    claim("split", "sequence");

    auto id1 = Mat<F>::ident(f, 1);
    PivotSpec<F> pv;
    pv.f_tag = BifunctorTag::Cohom;
    pv.g_tag = BifunctorTag::Cotensor;
    pv.p = kpt;
    pv.i = kpt;
    pv.test_objects = {kpt};
    pv.psi = {id1};
    pv.test_morphisms = {{0, 0, id1}};
    s.flips["flipK1"] = FlipSpec<F>{kpt, {pv}, id1, {}};
    s.flip_refs["flipK1"] = FlipRefs{"kpt", {PivotRefs{"kpt", "kpt", {"kpt"}}}};
    claim("flipK1", "flip");
    return s;
}

} // namespace

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "Q") return FieldSpec{FieldSpec::Kind::Rationals, 0};
    if (text.rfind("Fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            size_t used = 0;
            p = std::stoull(text.substr(3), &used);
            if (used != text.size() - 3) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(Errc::MalformedInput, "bad field spec '" + text + "'");
        }
        PrimeField check(p);
        return check.spec();
    }
    throw Error(Errc::MalformedInput, "bad field spec '" + text + "' (use Q or Fp:<p>)");
}

FieldSpec session_field(const Session& s) {
    return std::visit([](const auto& data) { return data.f.spec(); }, s);
}

Session parse_session(const std::string& text) {
    json root = parse_checked(text);
    if (!root.is_object()) throw Error(Errc::MalformedInput, "session must be a JSON object");
    auto it = root.find("field");
    if (it == root.end() || !it->is_string())
        throw Error(Errc::MalformedInput, "session needs a \"field\" string");
    FieldSpec spec = parse_field_spec(it->get<std::string>());
    if (spec.kind == FieldSpec::Kind::Rationals)
        return Loader<Rationals>(Rationals{}, root).run();
    return Loader<PrimeField>(PrimeField(spec.p), root).run();
}

Session load_session(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::MalformedInput, "cannot open session file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

std::string emit_session(const Session& s) {
    json root = std::visit([](const auto& data) { return emit_data(data); }, s);
    return root.dump(2) + "\n";
}

Session builtin_session(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::Rationals) return builtin_corpus(Rationals{});
    return builtin_corpus(PrimeField(spec.p));
}

} // namespace coho
