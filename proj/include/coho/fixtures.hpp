#pragma once

#include "coho/structure.hpp"

// Small structure-constant builders used by the bundled corpus and the test
// suites. Everything is deterministic; no randomness.
namespace coho::fixtures {

template <class F>
Mat<F> mat_of(F f, int rows, int cols, std::initializer_list<long> entries) {
    Mat<F> m(f, rows, cols);
    auto it = entries.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = f.from_long(*it++);
    return m;
}

// One group-like basis vector; the terminal coalgebra.
template <class F>
FinCoalgebra<F> point_coalgebra(F f) {
    return FinCoalgebra<F>{f, 1, mat_of(f, 1, 1, {1}), mat_of(f, 1, 1, {1})};
}

// Basis c0 group-like, c1 primitive over c0: Delta(c1) = c0 (x) c1 + c1 (x) c0.
// Dual algebra is k[x]/(x^2).
template <class F>
FinCoalgebra<F> divided_power2(F f) {
    auto delta = Mat<F>(f, 4, 2);
    delta.at(0, 0) = f.one();
    delta.at(1, 1) = f.one();
    delta.at(2, 1) = f.one();
    return FinCoalgebra<F>{f, 2, delta, mat_of(f, 1, 2, {1, 0})};
}

// Comatrix coalgebra on basis e_ij (index i*2+j): Delta(e_ij) = sum_k e_ik (x) e_kj.
template <class F>
FinCoalgebra<F> matrix_coalgebra2(F f) {
    auto delta = Mat<F>(f, 16, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int row = (i * 2 + k) * 4 + (k * 2 + j);
                delta.at(row, i * 2 + j) = f.one();
            }
    return FinCoalgebra<F>{f, 4, delta, mat_of(f, 1, 4, {1, 0, 0, 1})};
}

// Two group-likes g0, g1: the coalgebra of the set Z/2 (dual is the group algebra).
template <class F>
FinCoalgebra<F> grouplikes2(F f) {
    auto delta = Mat<F>(f, 4, 2);
    delta.at(0, 0) = f.one();
    delta.at(3, 1) = f.one();
    return FinCoalgebra<F>{f, 2, delta, mat_of(f, 1, 2, {1, 1})};
}

// Dual of the group algebra k[Z/2] on the basis (x0, x1) dual to (1, t):
// delta(x_k) = sum over i+j=k of x_i (x) x_j, counit = evaluation at 1.
// Semisimple when 2 is invertible, isomorphic to divided powers in char 2.
template <class F>
FinCoalgebra<F> group_dual2(F f) {
    auto delta = Mat<F>(f, 4, 2);
    delta.at(0, 0) = f.one();
    delta.at(3, 0) = f.one();
    delta.at(1, 1) = f.one();
    delta.at(2, 1) = f.one();
    return FinCoalgebra<F>{f, 2, delta, mat_of(f, 1, 2, {1, 0})};
}

// The trivial bicomodule over group_dual2, spanned by the group-like x0 + x1.
template <class F>
Bicomodule<F> group_dual2_point(const FinCoalgebra<F>& c) {
    auto v = mat_of(c.f, 2, 1, {1, 1});
    return Bicomodule<F>{c, c, 1, v, v};
}

// k[x]/(x^2) on basis (1, x).
template <class F>
FinAlgebra<F> dual_numbers(F f) {
    return FinAlgebra<F>{f, 2, mat_of(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0}), mat_of(f, 2, 1, {1, 0})};
}

// 2x2 matrix units E_ij (index i*2+j), E_ij E_kl = [j==k] E_il.
template <class F>
FinAlgebra<F> matrix_algebra2(F f) {
    auto mul = Mat<F>(f, 4, 16);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) mul.at(i * 2 + l, (i * 2 + j) * 4 + (j * 2 + l)) = f.one();
    return FinAlgebra<F>{f, 4, mul, mat_of(f, 4, 1, {1, 0, 0, 1})};
}

// 1-dimensional bicomodule through the group-like basis vector g; rejects a
// basis vector that is not actually group-like.
template <class F>
Bicomodule<F> grouplike_point(const FinCoalgebra<F>& c, int g) {
    bool ok = c.f.eq(c.counit.at(0, g), c.f.one());
    for (int r = 0; ok && r < c.dim * c.dim; ++r) {
        auto want = r == g * c.dim + g ? c.f.one() : c.f.zero();
        ok = c.f.eq(c.delta.at(r, g), want);
    }
    if (!ok) throw Error(Errc::MalformedInput, "basis vector " + std::to_string(g) + " is not group-like");
    Mat<F> lam(c.f, c.dim, 1), rho(c.f, c.dim, 1);
    lam.at(g, 0) = c.f.one();
    rho.at(g, 0) = c.f.one();
    return Bicomodule<F>{c, c, 1, lam, rho};
}

// Any space is a bicomodule over the point with identity coactions.
template <class F>
Bicomodule<F> free_over_point(const FinCoalgebra<F>& point, int dim) {
    auto id = Mat<F>::ident(point.f, dim);
    return Bicomodule<F>{point, point, dim, id, id};
}

// The 2-dim simple right comodule over the comatrix coalgebra:
// rho(s_j) = sum_k s_k (x) e_kj.
template <class F>
RightComodule<F> simple_right_mc2(F f) {
    auto c = matrix_coalgebra2(f);
    Mat<F> rho(f, 8, 2);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) rho.at(k * 4 + (k * 2 + j), j) = f.one();
    return RightComodule<F>{c, 2, rho};
}

// Its left twin: lambda(s_i) = sum_k e_ik (x) s_k.
template <class F>
LeftComodule<F> simple_left_mc2(F f) {
    auto c = matrix_coalgebra2(f);
    Mat<F> lam(f, 8, 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) lam.at((i * 2 + k) * 2 + k, i) = f.one();
    return LeftComodule<F>{c, 2, lam};
}

// A acting on itself on both sides.
template <class F>
Bimodule<F> regular_bimodule(const FinAlgebra<F>& a) {
    return Bimodule<F>{a, a.dim, a.mul, a.mul};
}

} // namespace coho::fixtures
