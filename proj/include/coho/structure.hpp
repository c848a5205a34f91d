#pragma once

#include <utility>

#include "coho/check_report.hpp"
#include "coho/linalg.hpp"

namespace coho {

// Finite-dimensional coalgebra by structure constants: column i of delta is
// Delta(e_i) in tensor indexing (e_j (x) e_k at row j*dim + k), counit is a
// single row.
template <class F>
struct FinCoalgebra {
    F f{};
    int dim = 0;
    Mat<F> delta;
    Mat<F> counit;

    bool operator==(const FinCoalgebra& o) const {
        return f.same(o.f) && dim == o.dim && delta == o.delta && counit == o.counit;
    }
};

template <class F>
struct FinAlgebra {
    F f{};
    int dim = 0;
    Mat<F> mul;  // d x d^2, column j*d+k = e_j * e_k
    Mat<F> unit; // d x 1

    bool operator==(const FinAlgebra& o) const {
        return f.same(o.f) && dim == o.dim && mul == o.mul && unit == o.unit;
    }
};

template <class F>
struct RightComodule {
    FinCoalgebra<F> over;
    int dim = 0;
    Mat<F> rho; // (dim * d) x dim, rho: M -> M (x) C
};

template <class F>
struct LeftComodule {
    FinCoalgebra<F> over;
    int dim = 0;
    Mat<F> lambda; // (d * dim) x dim, lambda: M -> C (x) M
};

template <class F>
struct Bicomodule {
    FinCoalgebra<F> left_over;
    FinCoalgebra<F> right_over;
    int dim = 0;
    Mat<F> lambda;
    Mat<F> rho;

    RightComodule<F> forget_left() const { return RightComodule<F>{right_over, dim, rho}; }
    LeftComodule<F> forget_right() const { return LeftComodule<F>{left_over, dim, lambda}; }
};

template <class F>
struct Bimodule {
    FinAlgebra<F> over;
    int dim = 0;
    Mat<F> left_act;  // dim x (d * dim)
    Mat<F> right_act; // dim x (dim * d)
};

namespace detail {

// First column where two equal-shaped matrices differ; -1 when equal.
template <class F>
int first_bad_column(const Mat<F>& a, const Mat<F>& b) {
    for (int j = 0; j < a.cols; ++j)
        for (int i = 0; i < a.rows; ++i)
            if (!a.f.eq(a.at(i, j), b.at(i, j))) return j;
    return -1;
}

template <class F>
void report_identity(CheckReport& rep, const std::string& label, const Mat<F>& lhs, const Mat<F>& rhs) {
    int bad = first_bad_column(lhs, rhs);
    if (bad < 0) {
        rep.add(label, true);
    } else {
        rep.add(label, false, "fails at basis " + std::to_string(bad));
    }
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::MalformedInput, what);
}

} // namespace detail

template <class F>
CheckReport validate_coalgebra(const FinCoalgebra<F>& c, const std::string& name = "coalgebra") {
    detail::require(c.delta.rows == c.dim * c.dim && c.delta.cols == c.dim, name + ": delta must be d^2 x d");
    detail::require(c.counit.rows == 1 && c.counit.cols == c.dim, name + ": counit must be 1 x d");
    CheckReport rep{name, {}};
    auto id = Mat<F>::ident(c.f, c.dim);
    detail::report_identity(rep, "coassociativity",
                            matmul(kron(id, c.delta), c.delta),
                            matmul(kron(c.delta, id), c.delta));
    detail::report_identity(rep, "counit-left", matmul(kron(c.counit, id), c.delta), id);
    detail::report_identity(rep, "counit-right", matmul(kron(id, c.counit), c.delta), id);
    return rep;
}

template <class F>
CheckReport validate_algebra(const FinAlgebra<F>& a, const std::string& name = "algebra") {
    detail::require(a.mul.rows == a.dim && a.mul.cols == a.dim * a.dim, name + ": mul must be d x d^2");
    detail::require(a.unit.rows == a.dim && a.unit.cols == 1, name + ": unit must be d x 1");
    CheckReport rep{name, {}};
    auto id = Mat<F>::ident(a.f, a.dim);
    detail::report_identity(rep, "associativity",
                            matmul(a.mul, kron(a.mul, id)),
                            matmul(a.mul, kron(id, a.mul)));
    detail::report_identity(rep, "unit-left", matmul(a.mul, kron(a.unit, id)), id);
    detail::report_identity(rep, "unit-right", matmul(a.mul, kron(id, a.unit)), id);
    return rep;
}

template <class F>
CheckReport validate_comodule(const RightComodule<F>& m, const std::string& name = "right comodule") {
    int d = m.over.dim;
    detail::require(m.rho.rows == m.dim * d && m.rho.cols == m.dim, name + ": rho must be (m*d) x m");
    CheckReport rep{name, {}};
    auto idm = Mat<F>::ident(m.over.f, m.dim);
    auto idc = Mat<F>::ident(m.over.f, d);
    detail::report_identity(rep, "coaction-coassociativity",
                            matmul(kron(m.rho, idc), m.rho),
                            matmul(kron(idm, m.over.delta), m.rho));
    detail::report_identity(rep, "coaction-counit", matmul(kron(idm, m.over.counit), m.rho), idm);
    return rep;
}

template <class F>
CheckReport validate_comodule(const LeftComodule<F>& m, const std::string& name = "left comodule") {
    int d = m.over.dim;
    detail::require(m.lambda.rows == d * m.dim && m.lambda.cols == m.dim, name + ": lambda must be (d*m) x m");
    CheckReport rep{name, {}};
    auto idm = Mat<F>::ident(m.over.f, m.dim);
    auto idc = Mat<F>::ident(m.over.f, d);
    detail::report_identity(rep, "coaction-coassociativity",
                            matmul(kron(m.over.delta, idm), m.lambda),
                            matmul(kron(idc, m.lambda), m.lambda));
    detail::report_identity(rep, "coaction-counit", matmul(kron(m.over.counit, idm), m.lambda), idm);
    return rep;
}

template <class F>
CheckReport validate_comodule(const Bicomodule<F>& m, const std::string& name = "bicomodule") {
    CheckReport rep{name, {}};
    auto right = validate_comodule(m.forget_left(), name);
    auto left = validate_comodule(m.forget_right(), name);
    for (auto& r : left.rows) rep.rows.push_back({"left-" + r.label, r.ok, r.lhs, r.rhs, r.note});
    for (auto& r : right.rows) rep.rows.push_back({"right-" + r.label, r.ok, r.lhs, r.rhs, r.note});
    auto idl = Mat<F>::ident(m.left_over.f, m.left_over.dim);
    auto idr = Mat<F>::ident(m.right_over.f, m.right_over.dim);
    detail::report_identity(rep, "compatibility",
                            matmul(kron(m.lambda, idr), m.rho),
                            matmul(kron(idl, m.rho), m.lambda));
    return rep;
}

template <class F>
CheckReport validate_bimodule(const Bimodule<F>& m, const std::string& name = "bimodule") {
    int d = m.over.dim;
    detail::require(m.left_act.rows == m.dim && m.left_act.cols == d * m.dim,
                    name + ": left_act must be m x (d*m)");
    detail::require(m.right_act.rows == m.dim && m.right_act.cols == m.dim * d,
                    name + ": right_act must be m x (m*d)");
    CheckReport rep{name, {}};
    auto idm = Mat<F>::ident(m.over.f, m.dim);
    auto idd = Mat<F>::ident(m.over.f, d);
    detail::report_identity(rep, "left-associativity",
                            matmul(m.left_act, kron(idd, m.left_act)),
                            matmul(m.left_act, kron(m.over.mul, idm)));
    detail::report_identity(rep, "left-unit", matmul(m.left_act, kron(m.over.unit, idm)), idm);
    detail::report_identity(rep, "right-associativity",
                            matmul(m.right_act, kron(m.right_act, idd)),
                            matmul(m.right_act, kron(idm, m.over.mul)));
    detail::report_identity(rep, "right-unit", matmul(m.right_act, kron(idm, m.over.unit)), idm);
    detail::report_identity(rep, "actions-commute",
                            matmul(m.left_act, kron(idd, m.right_act)),
                            matmul(m.right_act, kron(m.left_act, idd)));
    return rep;
}

namespace detail {

template <class T>
void require_valid(const CheckReport& rep) {
    for (const auto& r : rep.rows)
        if (!r.ok)
            throw Error(Errc::MalformedInput, rep.name + ": axiom '" + r.label + "' " +
                                                  (r.note.empty() ? "failed" : r.note));
}

} // namespace detail

// Transpose duality between coalgebras and algebras.
template <class F>
FinAlgebra<F> dualize(const FinCoalgebra<F>& c) {
    detail::require_valid<FinCoalgebra<F>>(validate_coalgebra(c));
    return FinAlgebra<F>{c.f, c.dim, c.delta.t(), c.counit.t()};
}

template <class F>
FinCoalgebra<F> dualize(const FinAlgebra<F>& a) {
    detail::require_valid<FinAlgebra<F>>(validate_algebra(a));
    return FinCoalgebra<F>{a.f, a.dim, a.mul.t(), a.unit.t()};
}

template <class F>
Mat<F> swap_mat(F f, int da, int db) {
    // sends e_i (x) e_j (index i*db + j) to e_j (x) e_i (index j*da + i)
    std::vector<int> perm(static_cast<size_t>(da) * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) perm[static_cast<size_t>(j) * da + i] = i * db + j;
    return perm_mat(f, perm);
}

template <class F>
FinCoalgebra<F> opposite(const FinCoalgebra<F>& c) {
    return FinCoalgebra<F>{c.f, c.dim, matmul(swap_mat(c.f, c.dim, c.dim), c.delta), c.counit};
}

// Enveloping coalgebra C^e = C (x) C^op with
// Delta_e(c (x) d) = (c1 (x) d2) (x) (c2 (x) d1) and eps_e = eps (x) eps.
template <class F>
FinCoalgebra<F> envelope(const FinCoalgebra<F>& c) {
    int d = c.dim;
    auto t1 = kron(c.delta, opposite(c).delta); // c1 c2 d2 d1, shape d^4 x d^2
    std::vector<int> perm(static_cast<size_t>(d) * d * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int x = 0; x < d; ++x)
                for (int e = 0; e < d; ++e)
                    perm[((static_cast<size_t>(a) * d + x) * d + b) * d + e] = ((a * d + b) * d + x) * d + e;
    auto delta_e = matmul(perm_mat(c.f, perm), t1);
    return FinCoalgebra<F>{c.f, d * d, delta_e, kron(c.counit, c.counit)};
}

/// One-sided views of a (C,C)-bicomodule over E = C^e:
//   right coaction  m -> m0 (x) (m1 (x) m(-1))
//   left coaction   m -> (m(-1) (x) m1) (x) m0
// Both satisfy the comodule axioms; note they do NOT assemble into an
// (E,E)-bicomodule (the compatibility square fails), which is why the engine
// works with one view at a time.
template <class F>
std::pair<RightComodule<F>, LeftComodule<F>> envelope_view(const Bicomodule<F>& m) {
    if (!(m.left_over == m.right_over))
        throw Error(Errc::MixedCoalgebras, "envelope view needs equal left and right coalgebras");
    const int d = m.left_over.dim, n = m.dim;
    auto e = envelope(m.left_over);
    auto step = matmul(kron(m.lambda, Mat<F>::ident(m.left_over.f, d)), m.rho);
    // step index (i*n + j)*d + k encodes (m(-1)=i, m0=j, m1=k)
    Mat<F> rho_e(m.left_over.f, n * d * d, n);
    Mat<F> lambda_e(m.left_over.f, d * d * n, n);
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < d; ++k) {
                    const auto& v = step.at((i * n + j) * d + k, col);
                    if (m.left_over.f.is_zero(v)) continue;
                    rho_e.at((j * d + k) * d + i, col) = m.left_over.f.add(rho_e.at((j * d + k) * d + i, col), v);
                    lambda_e.at((i * d + k) * n + j, col) = m.left_over.f.add(lambda_e.at((i * d + k) * n + j, col), v);
                }
    }
    return {RightComodule<F>{e, n, rho_e}, LeftComodule<F>{e, n, lambda_e}};
}

namespace detail {

// Linear constraints cutting out the right-colinear maps M -> N inside the
// n x m matrix space (entries flattened row-major, phi at index i*m + j).
template <class F>
Mat<F> right_hom_constraints(const RightComodule<F>& m, const RightComodule<F>& n) {
    const int d = m.over.dim, mm = m.dim, nn = n.dim;
    const F f = m.over.f;
    Mat<F> k(f, nn * d * mm, nn * mm);
    for (int i = 0; i < nn; ++i)
        for (int c = 0; c < d; ++c)
            for (int j = 0; j < mm; ++j) {
                int row = (i * d + c) * mm + j;
                for (int i2 = 0; i2 < nn; ++i2) {
                    const auto& v = n.rho.at(i * d + c, i2);
                    if (!f.is_zero(v)) k.at(row, i2 * mm + j) = f.add(k.at(row, i2 * mm + j), v);
                }
                for (int j2 = 0; j2 < mm; ++j2) {
                    const auto& v = m.rho.at(j2 * d + c, j);
                    if (!f.is_zero(v)) k.at(row, i * mm + j2) = f.sub(k.at(row, i * mm + j2), v);
                }
            }
    return k;
}

template <class F>
Mat<F> left_hom_constraints(const LeftComodule<F>& m, const LeftComodule<F>& n) {
    const int d = m.over.dim, mm = m.dim, nn = n.dim;
    const F f = m.over.f;
    Mat<F> k(f, d * nn * mm, nn * mm);
    for (int c = 0; c < d; ++c)
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < mm; ++j) {
                int row = (c * nn + i) * mm + j;
                for (int i2 = 0; i2 < nn; ++i2) {
                    const auto& v = n.lambda.at(c * nn + i, i2);
                    if (!f.is_zero(v)) k.at(row, i2 * mm + j) = f.add(k.at(row, i2 * mm + j), v);
                }
                for (int j2 = 0; j2 < mm; ++j2) {
                    const auto& v = m.lambda.at(c * mm + j2, j);
                    if (!f.is_zero(v)) k.at(row, i * mm + j2) = f.sub(k.at(row, i * mm + j2), v);
                }
            }
    return k;
}

} // namespace detail

template <class F>
Subspace<F> comodule_hom_space(const RightComodule<F>& m, const RightComodule<F>& n) {
    if (!(m.over == n.over)) throw Error(Errc::MixedCoalgebras, "hom over different coalgebras");
    return kernel_subspace(detail::right_hom_constraints(m, n));
}

template <class F>
Subspace<F> comodule_hom_space(const LeftComodule<F>& m, const LeftComodule<F>& n) {
    if (!(m.over == n.over)) throw Error(Errc::MixedCoalgebras, "hom over different coalgebras");
    return kernel_subspace(detail::left_hom_constraints(m, n));
}

// Maps colinear for both coactions: one stacked kernel.
template <class F>
Subspace<F> bicomodule_hom_space(const Bicomodule<F>& m, const Bicomodule<F>& n) {
    if (!(m.left_over == n.left_over) || !(m.right_over == n.right_over))
        throw Error(Errc::MixedCoalgebras, "hom over different coalgebras");
    return kernel_subspace(vcat(detail::right_hom_constraints(m.forget_left(), n.forget_left()),
                                detail::left_hom_constraints(m.forget_right(), n.forget_right())));
}

template <class F>
bool is_colinear_map(const RightComodule<F>& m, const RightComodule<F>& n, const Mat<F>& phi) {
    auto idc = Mat<F>::ident(m.over.f, m.over.dim);
    return matmul(n.rho, phi) == matmul(kron(phi, idc), m.rho);
}

template <class F>
bool is_colinear_map(const LeftComodule<F>& m, const LeftComodule<F>& n, const Mat<F>& phi) {
    auto idc = Mat<F>::ident(m.over.f, m.over.dim);
    return matmul(n.lambda, phi) == matmul(kron(idc, phi), m.lambda);
}

template <class F>
bool is_bicolinear_map(const Bicomodule<F>& m, const Bicomodule<F>& n, const Mat<F>& phi) {
    return is_colinear_map(m.forget_left(), n.forget_left(), phi) &&
           is_colinear_map(m.forget_right(), n.forget_right(), phi);
}

// Dimension of the center by a direct commutant solve, independent of any
// complex machinery.
template <class F>
int center_dim(const FinAlgebra<F>& a) {
    const int d = a.dim;
    Mat<F> k(a.f, d * d, d);
    for (int i = 0; i < d; ++i)
        for (int r = 0; r < d; ++r)
            for (int z = 0; z < d; ++z)
                k.at(i * d + r, z) = a.f.sub(a.mul.at(r, i * d + z), a.mul.at(r, z * d + i));
    return kernel_subspace(k).dim();
}

// C itself with both coactions equal to Delta.
template <class F>
Bicomodule<F> regular_bicomodule(const FinCoalgebra<F>& c) {
    return Bicomodule<F>{c, c, c.dim, c.delta, c.delta};
}

// Linear dual of a finite comodule, structured by the evaluation pairing
// f(0)(m) f(1) = f(m(0)) m(-1).  Dualizing twice returns the original matrix.
template <class F>
RightComodule<F> dual_comodule(const LeftComodule<F>& m) {
    const int d = m.over.dim, l = m.dim;
    Mat<F> rho(m.over.f, l * d, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int c = 0; c < d; ++c) rho.at(j * d + c, i) = m.lambda.at(c * l + i, j);
    return RightComodule<F>{m.over, l, rho};
}

template <class F>
LeftComodule<F> dual_comodule(const RightComodule<F>& m) {
    const int d = m.over.dim, r = m.dim;
    Mat<F> lambda(m.over.f, d * r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < d; ++c) lambda.at(c * r + j, i) = m.rho.at(i * d + c, j);
    return LeftComodule<F>{m.over, r, lambda};
}

template <class F>
CheckReport iso_verify(const FinCoalgebra<F>& x, const FinCoalgebra<F>& y, const Mat<F>& w,
                       const std::string& name = "iso") {
    CheckReport rep{name, {}};
    rep.add_cmp("dimension", x.dim, y.dim);
    if (x.dim != y.dim) return rep;
    if (w.rows != y.dim || w.cols != x.dim) {
        rep.add("witness-shape", false, "witness must be dim x dim");
        return rep;
    }
    rep.add("invertible", is_invertible(w));
    if (!rep.pass()) return rep;
    rep.add("delta-intertwines", matmul(y.delta, w) == matmul(kron(w, w), x.delta));
    rep.add("counit-intertwines", matmul(y.counit, w) == x.counit);
    return rep;
}

} // namespace coho
