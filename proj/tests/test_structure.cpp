#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coho/fixtures.hpp"
#include "coho/structure.hpp"

using namespace coho;
using namespace coho::fixtures;

namespace {

bool row_fails(const CheckReport& r, const std::string& label) {
    for (const auto& row : r.rows)
        if (row.label == label && !row.ok) return true;
    return false;
}

std::string note_of(const CheckReport& r, const std::string& label) {
    for (const auto& row : r.rows)
        if (row.label == label) return row.note;
    return {};
}

} // namespace

TEST_CASE("coalgebra axioms hold on the bundled examples") {
    Rationals q;
    PrimeField f2(2), f5(5);
    CHECK(validate_coalgebra(point_coalgebra(q)).pass());
    CHECK(validate_coalgebra(divided_power2(q)).pass());
    CHECK(validate_coalgebra(matrix_coalgebra2(q)).pass());
    CHECK(validate_coalgebra(grouplikes2(q)).pass());
    CHECK(validate_coalgebra(point_coalgebra(f2)).pass());
    CHECK(validate_coalgebra(grouplikes2(f2)).pass());
    CHECK(validate_coalgebra(divided_power2(f5)).pass());
}

TEST_CASE("corrupted coalgebras fail with the axiom and basis column named") {
    Rationals q;
    auto c = divided_power2(q);
    c.delta.at(0, 0) = q.zero();
    c.delta.at(1, 0) = q.one(); // delta(c0) = c0 (x) c1 is not coassociative
    auto rep = validate_coalgebra(c);
    CHECK(!rep.pass());
    CHECK(row_fails(rep, "coassociativity"));
    CHECK(note_of(rep, "coassociativity").find("basis") != std::string::npos);

    auto c2 = divided_power2(q);
    c2.delta.at(0, 1) = q.one(); // extra c0 (x) c0 in delta(c1) stays coassociative
    auto rep1 = validate_coalgebra(c2);
    CHECK(!rep1.pass());
    CHECK(!row_fails(rep1, "coassociativity"));
    CHECK(row_fails(rep1, "counit-left"));

    auto g = grouplikes2(q);
    g.counit.at(0, 1) = q.zero(); // grouplike g1 loses its counit value
    auto rep2 = validate_coalgebra(g);
    CHECK(!rep2.pass());
    CHECK((row_fails(rep2, "counit-left") || row_fails(rep2, "counit-right")));
}

TEST_CASE("algebra axioms hold and corruption is caught") {
    Rationals q;
    CHECK(validate_algebra(dual_numbers(q)).pass());
    CHECK(validate_algebra(matrix_algebra2(q)).pass());

    auto a = dual_numbers(q);
    a.unit.at(1, 0) = q.one();
    auto rep = validate_algebra(a);
    CHECK(!rep.pass());
    CHECK((row_fails(rep, "unit-left") || row_fails(rep, "unit-right")));

    auto m = matrix_algebra2(q);
    m.mul.at(0, 1) = q.one();
    CHECK(!validate_algebra(m).pass());
}

TEST_CASE("comodule and bicomodule axioms on the examples") {
    Rationals q;
    auto c = divided_power2(q);
    auto mc = matrix_coalgebra2(q);

    CHECK(validate_comodule(grouplike_point(c, 0).forget_left()).pass());
    CHECK(validate_comodule(grouplike_point(c, 0).forget_right()).pass());
    CHECK(validate_comodule(regular_bicomodule(c)).pass());
    CHECK(validate_comodule(regular_bicomodule(mc)).pass());
    CHECK(validate_comodule(simple_right_mc2(q)).pass());
    CHECK(validate_comodule(simple_left_mc2(q)).pass());
    CHECK(validate_comodule(free_over_point(point_coalgebra(q), 3).forget_left()).pass());

    auto x = regular_bicomodule(c);
    x.rho.at(0, 1) = q.one();
    auto rep = validate_comodule(x);
    CHECK(!rep.pass());
}

TEST_CASE("bimodule axioms on regular bimodules") {
    Rationals q;
    CHECK(validate_bimodule(regular_bimodule(dual_numbers(q))).pass());
    CHECK(validate_bimodule(regular_bimodule(matrix_algebra2(q))).pass());

    auto b = regular_bimodule(dual_numbers(q));
    b.left_act.at(0, 3) = q.one();
    CHECK(!validate_bimodule(b).pass());
}

TEST_CASE("zero-dimensional comodules are legal") {
    Rationals q;
    auto c = divided_power2(q);
    RightComodule<Rationals> z{c, 0, Mat<Rationals>(q, 0, 0)};
    CHECK(validate_comodule(z).pass());
    Bicomodule<Rationals> zb{c, c, 0, Mat<Rationals>(q, 0, 0), Mat<Rationals>(q, 0, 0)};
    CHECK(validate_comodule(zb).pass());
}

TEST_CASE("dualize matches hand-built duals and round-trips") {
    Rationals q;
    CHECK(dualize(divided_power2(q)) == dual_numbers(q));
    CHECK(dualize(matrix_coalgebra2(q)) == matrix_algebra2(q));
    CHECK(dualize(dualize(divided_power2(q))) == divided_power2(q));
    CHECK(dualize(dualize(grouplikes2(q))) == grouplikes2(q));
    CHECK(dualize(dualize(dual_numbers(q))) == dual_numbers(q));
    CHECK(validate_algebra(dualize(grouplikes2(q))).pass());

    auto bad = divided_power2(q);
    bad.delta.at(0, 1) = q.one();
    CHECK_THROWS_AS(dualize(bad), Error);
}

TEST_CASE("opposite coalgebra") {
    Rationals q;
    auto mc = matrix_coalgebra2(q);
    auto op = opposite(mc);
    CHECK(validate_coalgebra(op).pass());
    CHECK(opposite(op) == mc);
    // cocommutative examples are their own opposite
    CHECK(opposite(divided_power2(q)) == divided_power2(q));
    CHECK(opposite(grouplikes2(q)) == grouplikes2(q));
}

TEST_CASE("swap matrix exchanges tensor factors") {
    Rationals q;
    auto s = swap_mat(q, 2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat<Rationals> v(q, 6, 1);
            v.at(i * 3 + j, 0) = q.one();
            auto w = matmul(s, v);
            CHECK(w.at(j * 2 + i, 0) == 1);
        }
    CHECK(matmul(swap_mat(q, 3, 2), s) == Mat<Rationals>::ident(q, 6));
}

TEST_CASE("envelope of a point is the point") {
    Rationals q;
    CHECK(envelope(point_coalgebra(q)) == point_coalgebra(q));
}

TEST_CASE("envelope is a valid coalgebra with product counit") {
    Rationals q;
    PrimeField f2(2);
    for (const auto& c : {divided_power2(q), matrix_coalgebra2(q), grouplikes2(q)}) {
        auto e = envelope(c);
        CHECK(e.dim == c.dim * c.dim);
        CHECK(validate_coalgebra(e).pass());
    }
    CHECK(validate_coalgebra(envelope(grouplikes2(f2))).pass());

    auto e = envelope(divided_power2(q));
    CHECK(e.counit.at(0, 0) == 1); // c0 (x) c0
    CHECK(e.counit.at(0, 1) == 0); // c0 (x) c1
    CHECK(e.counit.at(0, 3) == 0); // c1 (x) c1
}

TEST_CASE("envelope view of a bicomodule coacts over the envelope") {
    Rationals q;
    auto c = divided_power2(q);
    for (const auto& x : {regular_bicomodule(c), grouplike_point(c, 0)}) {
        auto [right, left] = envelope_view(x);
        CHECK(right.dim == x.dim);
        CHECK(right.over.dim == c.dim * c.dim);
        CHECK(validate_comodule(right).pass());
        CHECK(validate_comodule(left).pass());
    }

    auto mc = matrix_coalgebra2(q);
    auto [vr, vl] = envelope_view(regular_bicomodule(mc));
    CHECK(validate_comodule(vr).pass());
    CHECK(validate_comodule(vl).pass());

    Bicomodule<Rationals> mixed{point_coalgebra(q), c, 1, Mat<Rationals>(q, 1, 1), Mat<Rationals>(q, 2, 1)};
    mixed.lambda.at(0, 0) = q.one();
    mixed.rho.at(0, 0) = q.one();
    CHECK(validate_comodule(mixed).pass());
    CHECK_THROWS_AS(envelope_view(mixed), Error);
}

TEST_CASE("colinear hom spaces have the expected dimensions") {
    Rationals q;
    auto c = divided_power2(q);
    auto creg = regular_bicomodule(c);
    auto k = grouplike_point(c, 0);

    CHECK(comodule_hom_space(k.forget_left(), creg.forget_left()).dim() == 1);
    CHECK(comodule_hom_space(creg.forget_left(), creg.forget_left()).dim() == 2);
    CHECK(comodule_hom_space(creg.forget_right(), creg.forget_right()).dim() == 2);
    CHECK(bicomodule_hom_space(creg, creg).dim() == 2);

    auto s = simple_right_mc2(q);
    CHECK(comodule_hom_space(s, s).dim() == 1);

    auto id2 = Mat<Rationals>::ident(q, 2);
    CHECK(is_colinear_map(creg.forget_left(), creg.forget_left(), id2));
    CHECK(is_bicolinear_map(creg, creg, id2));
    auto flip = mat_of(q, 2, 2, {0, 1, 1, 0});
    CHECK(!is_colinear_map(creg.forget_left(), creg.forget_left(), flip));
}

TEST_CASE("hom spaces across different coalgebras are rejected") {
    Rationals q;
    auto a = regular_bicomodule(divided_power2(q)).forget_left();
    auto b = regular_bicomodule(grouplikes2(q)).forget_left();
    CHECK_THROWS_AS(comodule_hom_space(a, b), Error);
}

TEST_CASE("center dimension of the bundled algebras") {
    Rationals q;
    CHECK(center_dim(dual_numbers(q)) == 2);
    CHECK(center_dim(matrix_algebra2(q)) == 1);
}

TEST_CASE("isomorphism verification accepts a true witness and rejects a false one") {
    Rationals q;
    auto k1 = point_coalgebra(q);
    auto w = Mat<Rationals>::ident(q, 1);
    auto good = iso_verify(envelope(k1), k1, w);
    CHECK(good.pass());

    auto dp = divided_power2(q);
    auto g2 = grouplikes2(q);
    auto bad = iso_verify(dp, g2, Mat<Rationals>::ident(q, 2));
    CHECK(!bad.pass());
    CHECK(row_fails(bad, "delta-intertwines"));

    auto sh = iso_verify(dp, dp, Mat<Rationals>(q, 2, 1));
    CHECK(!sh.pass());
    CHECK(row_fails(sh, "witness-shape"));

    auto sing = iso_verify(dp, dp, Mat<Rationals>::zeros(q, 2, 2));
    CHECK(!sing.pass());
    CHECK(row_fails(sing, "invertible"));
}

TEST_CASE("field mismatch between structures raises") {
    PrimeField f2(2), f5(5);
    auto c2 = point_coalgebra(f2);
    auto k5 = grouplike_point(point_coalgebra(f5), 0);
    CHECK_THROWS_AS(comodule_hom_space(k5.forget_left(), RightComodule<PrimeField>{c2, 1, Mat<PrimeField>(f2, 1, 1)}),
                    Error);
}
