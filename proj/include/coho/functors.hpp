#pragma once

#include "coho/resolution.hpp"

namespace coho {

template <class F>
Mat<F> cotensor_matrix(const RightComodule<F>& m, const LeftComodule<F>& n) {
    if (!(m.over == n.over)) throw Error(Errc::MixedCoalgebras, "cotensor needs one shared coalgebra");
    const F f = m.over.f;
    return sub(kron(m.rho, Mat<F>::ident(f, n.dim)), kron(Mat<F>::ident(f, m.dim), n.lambda));
}

// M box N inside M (x) N, basis index i * n.dim + j.
template <class F>
Subspace<F> cotensor(const RightComodule<F>& m, const LeftComodule<F>& n) {
    return kernel_subspace(cotensor_matrix(m, n));
}

// Cotensor over the middle coalgebra; the outer coactions restrict to the
// kernel (a theorem for valid input, so failure to restrict is an engine
// error, not a user one).
template <class F>
Bicomodule<F> cotensor_bicomodule(const Bicomodule<F>& x, const Bicomodule<F>& y) {
    if (!(x.right_over == y.left_over))
        throw Error(Errc::MixedCoalgebras, "cotensor needs one shared middle coalgebra");
    auto sp = cotensor(x.forget_left(), y.forget_right());
    const F f = x.left_over.f;
    auto lam = solve(kron(Mat<F>::ident(f, x.left_over.dim), sp.basis),
                     matmul(kron(x.lambda, Mat<F>::ident(f, y.dim)), sp.basis));
    auto rho = solve(kron(sp.basis, Mat<F>::ident(f, y.right_over.dim)),
                     matmul(kron(Mat<F>::ident(f, x.dim), y.rho), sp.basis));
    if (!lam || !rho)
        throw Error(Errc::RestrictionFailed, "outer coactions do not restrict to the cotensor");
    return Bicomodule<F>{x.left_over, y.right_over, sp.dim(), *lam, *rho};
}

// X box N with the left coaction inherited from the bicomodule X.
template <class F>
LeftComodule<F> cotensor_left_object(const Bicomodule<F>& x, const LeftComodule<F>& n) {
    auto sp = cotensor(x.forget_left(), n);
    const F f = x.left_over.f;
    auto lam = solve(kron(Mat<F>::ident(f, x.left_over.dim), sp.basis),
                     matmul(kron(x.lambda, Mat<F>::ident(f, n.dim)), sp.basis));
    if (!lam) throw Error(Errc::RestrictionFailed, "left coaction does not restrict to the cotensor");
    return LeftComodule<F>{x.left_over, sp.dim(), *lam};
}

template <class F>
GradedDims cotor(const RightComodule<F>& m, const LeftComodule<F>& n, int max_degree) {
    if (max_degree < 0) throw Error(Errc::MalformedInput, "max degree must be nonnegative");
    return homology_dims(cobar_complex(m, n, max_degree), 0, max_degree);
}

// h(X, M) is the linear dual of Hom(M, X); the space below is that hom space,
// which doubles as a coordinate frame for h itself.
template <class F>
Subspace<F> cohom_space(const RightComodule<F>& x, const RightComodule<F>& m) {
    return comodule_hom_space(m, x);
}

template <class F>
Subspace<F> cohom_space(const Bicomodule<F>& x, const Bicomodule<F>& m) {
    return bicomodule_hom_space(m, x);
}

// h(X, M) materialized as a right comodule when X is a (C,C)-bicomodule:
// Hom(M, X) carries a left coaction by postcomposing lambda_X, and dualizing
// flips the side.
template <class F>
RightComodule<F> cohom_object(const Bicomodule<F>& x, const RightComodule<F>& m) {
    if (!(x.left_over == m.over) || !(x.right_over == m.over))
        throw Error(Errc::MixedCoalgebras, "cohom needs one shared coalgebra");
    auto h = comodule_hom_space(m, x.forget_left()); // inside X (x) M^*, index i * m.dim + j
    const F f = m.over.f;
    auto lam = solve(kron(Mat<F>::ident(f, m.over.dim), h.basis),
                     matmul(kron(x.lambda, Mat<F>::ident(f, m.dim)), h.basis));
    if (!lam) throw Error(Errc::RestrictionFailed, "left coaction does not preserve the hom space");
    return dual_comodule(LeftComodule<F>{m.over, h.dim(), *lam});
}

namespace detail {

// One pseudo-coext differential Hom(M, W_s) -> Hom(M, W_{s+1}) in vec
// coordinates (f stored at index a * mdim + b). Column (a, b) is the fiber
// image g . (1 (x) E_ab (x) 1) . em contracted without materializing the
// middle Kronecker factor.
template <class F>
Mat<F> coext_step(const FinCoalgebra<F>& c, const Mat<F>& g, int w, const Mat<F>& em, int mdim) {
    const F f = c.f;
    const int d = c.dim, wp = g.rows;
    Mat<F> out(f, wp * mdim, w * mdim);
    for (int tp = 0; tp < wp; ++tp)
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < w; ++a)
                for (int j = 0; j < d; ++j) {
                    const auto& gv = g.at(tp, (i * w + a) * d + j);
                    if (f.is_zero(gv)) continue;
                    for (int b = 0; b < mdim; ++b)
                        for (int y = 0; y < mdim; ++y) {
                            const auto& ev = em.at((i * mdim + b) * d + j, y);
                            if (f.is_zero(ev)) continue;
                            auto& slot = out.at(tp * mdim + y, a * mdim + b);
                            slot = f.add(slot, f.mul(gv, ev));
                        }
                }
    return out;
}

// Right-exact indexing: degree 0 is a cokernel, higher degrees are honest
// subquotients of the dualized hom complex.
template <class F>
GradedDims coext_from_steps(const std::vector<long>& t, const std::vector<Mat<F>>& steps,
                            int max_degree) {
    std::vector<long> r;
    for (const auto& dm : steps) r.push_back(rank(dm));
    GradedDims g{0, {}};
    for (int s = 0; s <= max_degree; ++s) {
        long v = t[s] - r[s] - (s > 0 ? r[s - 1] : 0);
        if (v < 0) throw Error(Errc::NotAComplex, "pseudo-coext rank bookkeeping went negative");
        g.dims.push_back(v);
    }
    return g;
}

template <class F>
void require_coefficients(const FinCoalgebra<F>& c, const Bicomodule<F>& m) {
    if (!(m.left_over == c) || !(m.right_over == c))
        throw Error(Errc::MixedCoalgebras, "coefficients must live over the resolved coalgebra");
}

} // namespace detail

// Pseudo-coext of X with coefficients M, both (C,C)-bicomodules, through the
// canonical cofree resolution of X.
template <class F>
GradedDims pseudo_coext(const Bicomodule<F>& x, const Bicomodule<F>& m, int max_degree) {
    if (max_degree < 0) throw Error(Errc::MalformedInput, "max degree must be nonnegative");
    if (!(x.left_over == x.right_over))
        throw Error(Errc::MixedCoalgebras, "pseudo-coext needs equal left and right coalgebras");
    detail::require_coefficients(x.left_over, m);
    auto ra = cofree_resolution(x, max_degree + 1);
    auto em = canonical_embedding(m);
    std::vector<long> t;
    std::vector<Mat<F>> steps;
    for (int s = 0; s <= max_degree; ++s) {
        t.push_back(static_cast<long>(ra.fiber_dim(s)) * m.dim);
        steps.push_back(detail::coext_step(ra.c, ra.proj[s], ra.fiber_dim(s), em, m.dim));
    }
    return detail::coext_from_steps(t, steps, max_degree);
}

// Same computation over a supplied resolution. The complex is audited first;
// a truncated tail is read as zero, which is only sound when the supplied
// complex really ends there.
template <class F>
GradedDims pseudo_coext(const CofreeComplex<F>& rc, const Bicomodule<F>& m, int max_degree) {
    if (max_degree < 0) throw Error(Errc::MalformedInput, "max degree must be nonnegative");
    auto audit = validate_resolution(rc);
    for (const auto& row : audit.rows)
        if (!row.ok)
            throw Error(Errc::MalformedInput, "supplied resolution fails '" + row.label + "'");
    detail::require_coefficients(rc.c, m);
    auto em = canonical_embedding(m);
    const int top = static_cast<int>(rc.w.size()) - 1;
    std::vector<long> t;
    std::vector<Mat<F>> steps;
    for (int s = 0; s <= max_degree; ++s) {
        t.push_back(s <= top ? static_cast<long>(rc.w[s]) * m.dim : 0L);
        if (s + 1 <= top)
            steps.push_back(detail::coext_step(
                rc.c, matmul(counit_retraction(rc.c, rc.w[s + 1]), rc.maps[s]), rc.w[s], em, m.dim));
        else
            steps.push_back(Mat<F>(rc.c.f, 0, s <= top ? rc.w[s] * m.dim : 0));
    }
    return detail::coext_from_steps(t, steps, max_degree);
}

// Core X = C box_{C^e} C^op, transported back to a (C,C)-bicomodule along
// (eps (x) 1)|_X. Dimension and invertibility are theorems for valid input,
// so a throw here means engine trouble rather than bad data.
template <class F>
Bicomodule<F> adjoined_core(const FinCoalgebra<F>& c) {
    auto views = envelope_view(regular_bicomodule(c));
    auto sp = cotensor(views.first, views.second);
    const F f = c.f;
    if (sp.dim() != c.dim)
        throw Error(Errc::NotWellDefined, "adjoined core has dimension " + std::to_string(sp.dim()) +
                                              ", expected " + std::to_string(c.dim));
    auto phi = matmul(kron(c.counit, Mat<F>::ident(f, c.dim)), sp.basis);
    if (!is_invertible(phi))
        throw Error(Errc::NotWellDefined, "counit transport on the adjoined core is singular");
    auto phi_inv = inverse(phi);
    auto lam = matmul(kron(Mat<F>::ident(f, c.dim), phi_inv), matmul(c.delta, phi));
    auto rho = matmul(kron(phi_inv, Mat<F>::ident(f, c.dim)), matmul(c.delta, phi));
    return Bicomodule<F>{c, c, sp.dim(), std::move(lam), std::move(rho)};
}

struct AdjoinedLegs {
    GradedDims via_core;
    GradedDims direct;
};

template <class F>
AdjoinedLegs adjoined_legs(const FinCoalgebra<F>& c, const Bicomodule<F>& m, int max_degree) {
    return AdjoinedLegs{pseudo_coext(adjoined_core(c), m, max_degree),
                        pseudo_coext(regular_bicomodule(c), m, max_degree)};
}

// Adjoined homology computes both legs and insists they agree.
template <class F>
GradedDims adjoined_homology(const FinCoalgebra<F>& c, const Bicomodule<F>& m, int max_degree) {
    auto legs = adjoined_legs(c, m, max_degree);
    if (!(legs.via_core == legs.direct))
        throw Error(Errc::NotWellDefined, "adjoined homology legs disagree");
    return legs.direct;
}

template <class F>
GradedDims hochschild_dims(const FinAlgebra<F>& a, const Bimodule<F>& m, int max_degree,
                           HochschildVariant variant) {
    if (max_degree < 0) throw Error(Errc::MalformedInput, "max degree must be nonnegative");
    auto cx = hochschild_complex(a, m, max_degree, variant);
    return variant == HochschildVariant::Cochain ? homology_dims(cx, 0, max_degree)
                                                 : homology_dims(cx, -max_degree, 0);
}

// Hochschild cohomology of the coalgebra C with coefficients in M, as Cotor
// over the enveloping coalgebra of the two one-sided views.
template <class F>
GradedDims coalgebra_hochschild(const FinCoalgebra<F>& c, const Bicomodule<F>& m, int max_degree) {
    detail::require_coefficients(c, m);
    auto mr = envelope_view(m).first;
    auto cl = envelope_view(regular_bicomodule(c)).second;
    return cotor(mr, cl, max_degree);
}

// N (x) M as a bimodule over the dual algebra, by a . x = x0 a(x1) and
// y . b = b(y(-1)) y0.
template <class F>
Bimodule<F> pairing_bimodule(const RightComodule<F>& n, const LeftComodule<F>& m) {
    if (!(n.over == m.over)) throw Error(Errc::MixedCoalgebras, "pairing needs one shared coalgebra");
    auto a = dualize(n.over);
    const F f = a.f;
    const int d = a.dim, nn = n.dim, mm = m.dim, w = nn * mm;
    Mat<F> la(f, w, d * w), ra(f, w, w * d);
    for (int x = 0; x < nn; ++x)
        for (int aa = 0; aa < d; ++aa)
            for (int x2 = 0; x2 < nn; ++x2) {
                const auto& v = n.rho.at(x2 * d + aa, x);
                if (f.is_zero(v)) continue;
                for (int y = 0; y < mm; ++y) la.at(x2 * mm + y, aa * w + x * mm + y) = v;
            }
    for (int y = 0; y < mm; ++y)
        for (int bb = 0; bb < d; ++bb)
            for (int y2 = 0; y2 < mm; ++y2) {
                const auto& v = m.lambda.at(bb * mm + y2, y);
                if (f.is_zero(v)) continue;
                for (int x = 0; x < nn; ++x) ra.at(x * mm + y2, (x * mm + y) * d + bb) = v;
            }
    return Bimodule<F>{a, w, std::move(la), std::move(ra)};
}

} // namespace coho
