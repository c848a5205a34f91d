#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coho/bicomplex.hpp"
#include "coho/complex.hpp"
#include "coho/fixtures.hpp"
#include "coho/resolution.hpp"

using namespace coho;
using namespace coho::fixtures;

namespace {

GradedDims dims_of(const std::vector<long>& d, int start = 0) { return GradedDims{start, d}; }

} // namespace

TEST_CASE("homology of tiny complexes") {
    Rationals q;
    // 0 -> k -> k -> 0 with the identity: acyclic
    auto unit = make_complex(q, 0, {1, 1}, {Mat<Rationals>::ident(q, 1)});
    CHECK(homology_dims(unit, 0, 1) == dims_of({0, 0}));

    // zero differentials: homology is the underlying dims
    auto zero = make_complex(q, 0, {2, 3, 1}, {Mat<Rationals>(q, 3, 2), Mat<Rationals>(q, 1, 3)});
    CHECK(homology_dims(zero, 0, 2) == dims_of({2, 3, 1}));

    // 0 -> Q -> Q^2 with (1,1)^t: injective, cokernel 1-dim
    auto inj = make_complex(q, 0, {1, 2}, {mat_of(q, 2, 1, {1, 1})});
    CHECK(homology_dims(inj, 0, 1) == dims_of({0, 1}));

    // degrees start wherever the caller says
    auto shifted = make_complex(q, -2, {1, 1}, {Mat<Rationals>(q, 1, 1)});
    CHECK(homology_dims(shifted, -2, -1) == dims_of({1, 1}, -2));
    CHECK(shifted.top_degree() == -1);

    CHECK_THROWS_AS(homology(unit, 2), Error);
    CHECK_THROWS_AS(homology(unit, -1), Error);
}

TEST_CASE("complexes with a nonzero composite are rejected") {
    Rationals q;
    auto one = Mat<Rationals>::ident(q, 1);
    CHECK_THROWS_AS(make_complex(q, 0, {1, 1, 1}, {one, one}), Error);
    // wrong shapes
    CHECK_THROWS_AS(make_complex(q, 0, {1, 2}, {Mat<Rationals>(q, 1, 1)}), Error);
    CHECK_THROWS_AS(make_complex(q, 0, {1, 1}, {}), Error);
}

TEST_CASE("cobar complex over the point is one-dimensional in every degree") {
    Rationals q;
    auto k1 = point_coalgebra(q);
    auto k = grouplike_point(k1, 0);
    auto c = cobar_complex(k.forget_left(), k.forget_right(), 3);
    CHECK(c.spaces == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(homology_dims(c, 0, 3) == dims_of({1, 0, 0, 0}));
}

TEST_CASE("cobar homology over the divided power coalgebra") {
    Rationals q;
    auto c = divided_power2(q);
    auto k = grouplike_point(c, 0);
    auto cx = cobar_complex(k.forget_left(), k.forget_right(), 3);
    for (int s = 0; s <= 4; ++s) CHECK(cx.spaces[s] == 1 << s);
    CHECK(cx.diffs[0].is_zero());
    CHECK(homology_dims(cx, 0, 3) == dims_of({1, 1, 1, 1}));
}

TEST_CASE("cobar homology of the simple comodule pair over the matrix coalgebra") {
    Rationals q;
    auto cx = cobar_complex(simple_right_mc2(q), simple_left_mc2(q), 3);
    CHECK(homology_dims(cx, 0, 3) == dims_of({1, 0, 0, 0}));
}

TEST_CASE("grouplike coalgebras are semisimple over every field") {
    Rationals q;
    PrimeField f2(2);
    auto kq = grouplike_point(grouplikes2(q), 0);
    auto cq = cobar_complex(kq.forget_left(), kq.forget_right(), 3);
    CHECK(homology_dims(cq, 0, 3) == dims_of({1, 0, 0, 0}));

    auto kp = grouplike_point(grouplikes2(f2), 0);
    auto cp = cobar_complex(kp.forget_left(), kp.forget_right(), 3);
    CHECK(homology_dims(cp, 0, 3) == dims_of({1, 0, 0, 0}));
}

TEST_CASE("cobar homology over the group-algebra dual depends on the characteristic") {
    Rationals q;
    PrimeField f2(2), f5(5);
    auto run = [](auto f) {
        auto c = group_dual2(f);
        auto k = group_dual2_point(c);
        return homology_dims(cobar_complex(k.forget_left(), k.forget_right(), 3), 0, 3);
    };
    CHECK(run(q) == dims_of({1, 0, 0, 0}));
    CHECK(run(f5) == dims_of({1, 0, 0, 0}));
    CHECK(run(f2) == dims_of({1, 1, 1, 1}));

    // in char 2 the group-algebra dual is divided powers in disguise
    PrimeField f2b(2);
    auto w = mat_of(f2b, 2, 2, {1, 0, 1, 1});
    CHECK(iso_verify(group_dual2(f2b), divided_power2(f2b), w).pass());
    CHECK(!iso_verify(group_dual2(Rationals{}), divided_power2(Rationals{}),
                      mat_of(Rationals{}, 2, 2, {1, 0, 1, 1}))
               .pass());

    // a basis vector that is not group-like is rejected
    CHECK_THROWS_AS(grouplike_point(group_dual2(q), 0), Error);
}

TEST_CASE("cobar rejects comodules over different coalgebras") {
    Rationals q;
    auto a = grouplike_point(divided_power2(q), 0);
    auto b = grouplike_point(point_coalgebra(q), 0);
    CHECK_THROWS_AS(cobar_complex(a.forget_left(), b.forget_right(), 2), Error);
}

TEST_CASE("algebra cochain homology of the dual numbers") {
    Rationals q;
    auto a = dual_numbers(q);
    auto m = regular_bimodule(a);
    auto cx = hochschild_complex(a, m, 3, HochschildVariant::Cochain);
    CHECK(cx.start_degree == 0);
    CHECK(cx.spaces == std::vector<int>{2, 4, 8, 16, 32});
    CHECK(homology_dims(cx, 0, 3) == dims_of({2, 1, 1, 1}));
    CHECK(homology(cx, 0).dim() == center_dim(a));
}

TEST_CASE("algebra chain homology of the dual numbers matches the cochain dims") {
    Rationals q;
    auto a = dual_numbers(q);
    auto m = regular_bimodule(a);
    auto cx = hochschild_complex(a, m, 3, HochschildVariant::Chain);
    CHECK(cx.start_degree == -4);
    CHECK(cx.top_degree() == 0);
    auto h = homology_dims(cx, -3, 0);
    CHECK(h.at_degree(0) == 2);
    CHECK(h.at_degree(-1) == 1);
    CHECK(h.at_degree(-2) == 1);
    CHECK(h.at_degree(-3) == 1);
}

TEST_CASE("algebra cochain homology of the 2x2 matrix algebra is trivial past degree 0") {
    Rationals q;
    auto m = regular_bimodule(matrix_algebra2(q));
    auto cx = hochschild_complex(matrix_algebra2(q), m, 2, HochschildVariant::Cochain);
    CHECK(homology_dims(cx, 0, 2) == dims_of({1, 0, 0}));
    CHECK(homology(cx, 0).dim() == center_dim(matrix_algebra2(q)));
}

TEST_CASE("cofree resolution over the point has zero fibers past the start") {
    Rationals q;
    auto x = regular_bicomodule(point_coalgebra(q));
    auto ra = cofree_resolution(x, 3);
    REQUIRE(ra.length() == 3);
    CHECK(ra.fiber_dim(0) == 1);
    CHECK(ra.fiber_dim(1) == 0);
    CHECK(ra.fiber_dim(2) == 0);
    CHECK(ra.fiber_dim(3) == 0);
    CHECK(validate_resolution(ra.as_cofree_complex(), "point").pass());
}

TEST_CASE("cofree resolution of the counit point over the divided power coalgebra") {
    Rationals q;
    auto c = divided_power2(q);
    auto ra = cofree_resolution(grouplike_point(c, 0), 3);
    CHECK(ra.fiber_dim(0) == 1);
    CHECK(ra.fiber_dim(1) == 3);
    CHECK(ra.fiber_dim(2) == 9);
    CHECK(ra.fiber_dim(3) == 27);
    CHECK(ra.term_dim(0) == 4);
    CHECK(ra.term_dim(1) == 12);

    auto rep = validate_resolution(ra.as_cofree_complex(), "dp2-point");
    CHECK(rep.pass());

    for (int s = 0; s <= 3; ++s) CHECK(validate_comodule(ra.fibers[s]).pass());
    for (int s = 0; s <= 3; ++s) {
        int w = ra.fiber_dim(s);
        CHECK(matmul(counit_retraction(c, w), ra.emb[s]) == Mat<Rationals>::ident(q, w));
    }
    for (size_t s = 0; s < ra.proj.size(); ++s) {
        CHECK(matmul(ra.proj[s], ra.reps[s]) == Mat<Rationals>::ident(q, ra.fiber_dim(static_cast<int>(s) + 1)));
        CHECK(matmul(ra.proj[s], ra.emb[s]).is_zero());
    }
}

TEST_CASE("cofree resolution works over a prime field") {
    PrimeField f2(2);
    auto g = grouplikes2(f2);
    auto ra = cofree_resolution(grouplike_point(g, 0), 2);
    CHECK(validate_resolution(ra.as_cofree_complex(), "f2").pass());
    CHECK(ra.fiber_dim(1) == 3);
}

TEST_CASE("chain maps lifted between identical resolutions are identities") {
    Rationals q;
    auto c = divided_power2(q);
    auto ra = cofree_resolution(grouplike_point(c, 0), 2);
    auto lift = fiber_chain_map(ra, ra, Mat<Rationals>::ident(q, 1), 2);
    REQUIRE(lift.size() == 3);
    for (int s = 0; s <= 2; ++s) CHECK(lift[s] == Mat<Rationals>::ident(q, ra.fiber_dim(s)));
}

TEST_CASE("tampered resolutions fail validation") {
    Rationals q;
    auto ra = cofree_resolution(grouplike_point(divided_power2(q), 0), 2);
    auto cx = ra.as_cofree_complex();
    cx.maps[0].at(0, 0) = q.add(cx.maps[0].at(0, 0), q.one());
    CHECK(!validate_resolution(cx, "tampered").pass());
}

TEST_CASE("resolutions require both sides over the same coalgebra") {
    Rationals q;
    Bicomodule<Rationals> mixed{point_coalgebra(q), divided_power2(q), 1, Mat<Rationals>(q, 1, 1),
                                Mat<Rationals>(q, 2, 1)};
    mixed.lambda.at(0, 0) = q.one();
    mixed.rho.at(0, 0) = q.one();
    CHECK_THROWS_AS(cofree_resolution(mixed, 1), Error);
}

TEST_CASE("bicomplex constructor enforces the axioms") {
    Rationals q;
    auto one = Mat<Rationals>::ident(q, 1);
    std::vector<std::vector<int>> dims{{1, 1}, {1, 1}};

    // identity squares commute instead of anticommuting
    std::vector<std::vector<Mat<Rationals>>> dh{{one, one}};
    std::vector<std::vector<Mat<Rationals>>> dv{{one}, {one}};
    CHECK_THROWS_AS(make_bicomplex(q, dims, dh, dv), Error);

    // flipping one vertical sign fixes it
    auto none = neg(one);
    std::vector<std::vector<Mat<Rationals>>> dv2{{one}, {none}};
    auto b = make_bicomplex(q, dims, dh, dv2);
    CHECK(b.np == 1);
    CHECK(b.nq == 1);
}

TEST_CASE("spectral pages of an acyclic square collapse") {
    Rationals q;
    auto one = Mat<Rationals>::ident(q, 1);
    auto none = neg(one);
    auto b = make_bicomplex(q, {{1, 1}, {1, 1}}, {{one, one}}, {{one}, {none}});

    auto e0 = spectral_page(b, Filtration::I, 0);
    CHECK(e0 == std::vector<std::vector<long>>{{1, 1}, {1, 1}});
    auto e1 = spectral_page(b, Filtration::I, 1);
    CHECK(e1 == std::vector<std::vector<long>>{{0, 0}, {0, 0}});
    auto e2 = spectral_page(b, Filtration::I, 2);
    CHECK(e2 == std::vector<std::vector<long>>{{0, 0}, {0, 0}});

    auto tot = total_homology(b);
    CHECK(tot == dims_of({0, 0, 0}));
    CHECK(euler_sum_grid(e2) == euler_sum_graded(tot));
}

TEST_CASE("second filtration agrees with the first on the transpose") {
    Rationals q;
    auto one = Mat<Rationals>::ident(q, 1);
    auto zero1 = Mat<Rationals>(q, 1, 1);
    // horizontal identities, zero verticals: rows are acyclic, columns are not
    auto b = make_bicomplex(q, {{1, 1}, {1, 1}}, {{one, one}}, {{zero1}, {zero1}});
    auto t = transpose_bicomplex(b);
    for (int r = 0; r <= 2; ++r) CHECK(spectral_page(b, Filtration::II, r) == spectral_page(t, Filtration::I, r));

    auto e2_i = spectral_page(b, Filtration::I, 2);
    auto e2_ii = spectral_page(b, Filtration::II, 2);
    auto tot = total_homology(b);
    CHECK(euler_sum_grid(e2_i) == euler_sum_graded(tot));
    CHECK(euler_sum_grid(e2_ii) == euler_sum_graded(tot));
}

TEST_CASE("a one-cell grid survives to every page") {
    Rationals q;
    std::vector<std::vector<int>> dims{{1, 0}, {0, 0}};
    std::vector<std::vector<Mat<Rationals>>> dh{{Mat<Rationals>(q, 0, 1), Mat<Rationals>(q, 0, 0)}};
    std::vector<std::vector<Mat<Rationals>>> dv{{Mat<Rationals>(q, 0, 1)}, {Mat<Rationals>(q, 0, 0)}};
    auto b = make_bicomplex(q, dims, dh, dv);
    CHECK(spectral_page(b, Filtration::I, 2) == std::vector<std::vector<long>>{{1, 0}, {0, 0}});
    CHECK(spectral_page(b, Filtration::II, 2) == std::vector<std::vector<long>>{{1, 0}, {0, 0}});
    CHECK(total_homology(b) == dims_of({1, 0, 0}));
}
