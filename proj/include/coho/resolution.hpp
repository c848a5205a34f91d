#pragma once

#include "coho/complex.hpp"

namespace coho {

// Cofree bicomodule C (x) k^w (x) C with coactions delta (x) 1 (x) 1 and
// 1 (x) 1 (x) delta on the nose. Basis index (i*w + t)*d + j.
template <class F>
Bicomodule<F> cofree_term(const FinCoalgebra<F>& c, int w) {
    auto lam = kron(c.delta, Mat<F>::ident(c.f, w * c.dim));
    auto rho = kron(Mat<F>::ident(c.f, c.dim * w), c.delta);
    return Bicomodule<F>{c, c, c.dim * w * c.dim, lam, rho};
}

// Canonical split embedding x -> C (x) X (x) C, x |-> x(-1) (x) x(0) (x) x(1);
// the two-sided counit is a retraction, so it is injective.
template <class F>
Mat<F> canonical_embedding(const Bicomodule<F>& x) {
    auto idd = Mat<F>::ident(x.left_over.f, x.right_over.dim);
    return matmul(kron(x.lambda, idd), x.rho);
}

// Two-sided counit retraction C (x) W (x) C -> W as a sparse matrix.
template <class F>
Mat<F> counit_retraction(const FinCoalgebra<F>& c, int w) {
    const int d = c.dim;
    Mat<F> pi(c.f, w, d * w * d);
    for (int i = 0; i < d; ++i) {
        if (c.f.is_zero(c.counit.at(0, i))) continue;
        for (int j = 0; j < d; ++j) {
            if (c.f.is_zero(c.counit.at(0, j))) continue;
            auto v = c.f.mul(c.counit.at(0, i), c.counit.at(0, j));
            for (int t = 0; t < w; ++t) pi.at(t, (i * w + t) * d + j) = v;
        }
    }
    return pi;
}

// Augmented complex of cofree terms in explicit form: terms are determined by
// their fiber dims, maps are plain matrices between the term spaces.
template <class F>
struct CofreeComplex {
    FinCoalgebra<F> c;
    Bicomodule<F> resolved;
    std::vector<int> w;
    Mat<F> augmentation;
    std::vector<Mat<F>> maps;

    Bicomodule<F> term(int s) const { return cofree_term(c, w[s]); }
};

// Canonical resolution, stored through its fiber data: fibers[s] is the s-th
// cokernel W_s as a bicomodule (fibers[0] is the resolved object), emb[s] its
// split embedding into term s, and (proj, reps) present term s as
// im(emb[s]) (+) a complement with W_{s+1}-coordinates. The differential
// emb[s+1] . proj[s] is assembled on demand; the derived-functor fast path
// only ever touches proj.
template <class F>
struct ResolutionData {
    FinCoalgebra<F> c;
    std::vector<Bicomodule<F>> fibers;
    std::vector<Mat<F>> emb;
    std::vector<Mat<F>> proj;
    std::vector<Mat<F>> reps;

    int length() const { return static_cast<int>(fibers.size()) - 1; }
    int fiber_dim(int s) const { return fibers[s].dim; }
    int term_dim(int s) const { return c.dim * fibers[s].dim * c.dim; }
    const Bicomodule<F>& resolved() const { return fibers[0]; }
    Bicomodule<F> term(int s) const { return cofree_term(c, fibers[s].dim); }
    Mat<F> augmentation() const { return emb[0]; }
    Mat<F> map(int s) const { return matmul(emb[s + 1], proj[s]); }

    CofreeComplex<F> as_cofree_complex() const {
        CofreeComplex<F> out{c, fibers[0], {}, emb[0], {}};
        for (const auto& fb : fibers) out.w.push_back(fb.dim);
        for (int s = 0; s + 1 <= length(); ++s) out.maps.push_back(map(s));
        return out;
    }
};

namespace detail {

// lambda of the quotient W' = term/im(emb): (1 (x) proj) . lambda_term . reps,
// using the Kronecker structure of lambda_term instead of materializing it.
template <class F>
Mat<F> quotient_lambda(const FinCoalgebra<F>& c, int w, const Mat<F>& proj, const Mat<F>& reps) {
    const F f = c.f;
    const int d = c.dim, n = d * w * d, k = w * d, wp = proj.rows;
    Mat<F> a(f, d * n, reps.cols); // lambda_term . reps
    for (int rd = 0; rd < d * d; ++rd)
        for (int cd = 0; cd < d; ++cd) {
            const auto& dv = c.delta.at(rd, cd);
            if (f.is_zero(dv)) continue;
            for (int t = 0; t < k; ++t)
                for (int col = 0; col < reps.cols; ++col) {
                    const auto& rv = reps.at(cd * k + t, col);
                    if (f.is_zero(rv)) continue;
                    a.at(rd * k + t, col) = f.add(a.at(rd * k + t, col), f.mul(dv, rv));
                }
        }
    Mat<F> out(f, d * wp, reps.cols);
    for (int tp = 0; tp < wp; ++tp)
        for (int r = 0; r < n; ++r) {
            const auto& pv = proj.at(tp, r);
            if (f.is_zero(pv)) continue;
            for (int blk = 0; blk < d; ++blk)
                for (int col = 0; col < reps.cols; ++col) {
                    const auto& av = a.at(blk * n + r, col);
                    if (f.is_zero(av)) continue;
                    out.at(blk * wp + tp, col) = f.add(out.at(blk * wp + tp, col), f.mul(pv, av));
                }
        }
    return out;
}

template <class F>
Mat<F> quotient_rho(const FinCoalgebra<F>& c, int w, const Mat<F>& proj, const Mat<F>& reps) {
    const F f = c.f;
    const int d = c.dim, n = d * w * d, wp = proj.rows;
    Mat<F> a(f, n * d, reps.cols); // rho_term . reps
    for (int v = 0; v < d * d; ++v)
        for (int cd = 0; cd < d; ++cd) {
            const auto& dv = c.delta.at(v, cd);
            if (f.is_zero(dv)) continue;
            for (int u = 0; u < d * w; ++u)
                for (int col = 0; col < reps.cols; ++col) {
                    const auto& rv = reps.at(u * d + cd, col);
                    if (f.is_zero(rv)) continue;
                    a.at(u * d * d + v, col) = f.add(a.at(u * d * d + v, col), f.mul(dv, rv));
                }
        }
    Mat<F> out(f, wp * d, reps.cols);
    for (int tp = 0; tp < wp; ++tp)
        for (int r = 0; r < n; ++r) {
            const auto& pv = proj.at(tp, r);
            if (f.is_zero(pv)) continue;
            for (int e = 0; e < d; ++e)
                for (int col = 0; col < reps.cols; ++col) {
                    const auto& av = a.at(r * d + e, col);
                    if (f.is_zero(av)) continue;
                    out.at(tp * d + e, col) = f.add(out.at(tp * d + e, col), f.mul(pv, av));
                }
        }
    return out;
}

} // namespace detail

// Canonical cofree resolution with terms 0..length. Each step splits term s as
// im(emb[s]) (+) ker(counit retraction) and takes the complement as the next
// fiber, which keeps every piece deterministic and no denominators large.
template <class F>
ResolutionData<F> cofree_resolution(const Bicomodule<F>& x, int length) {
    if (!(x.left_over == x.right_over))
        throw Error(Errc::MixedCoalgebras, "resolution needs equal left and right coalgebras");
    if (length < 0) throw Error(Errc::MalformedInput, "resolution length must be nonnegative");
    const auto c = x.left_over;
    const F f = c.f;
    const int d = c.dim;
    ResolutionData<F> r{c, {x}, {}, {}, {}};
    for (int s = 0; s <= length; ++s) {
        const auto& fb = r.fibers[s];
        r.emb.push_back(matmul(kron(fb.lambda, Mat<F>::ident(f, d)), fb.rho));
        if (s == length) break;
        const int w = fb.dim, n = d * w * d;
        auto pi = counit_retraction(c, w);
        auto rr = reduce(pi);
        if (rr.rank != w) throw Error(Errc::NotAComplex, "counit retraction lost rank");
        auto k = kernel(pi);
        std::vector<char> is_pivot(n, 0);
        for (int p : rr.pivots) is_pivot[p] = 1;
        std::vector<int> free;
        for (int i = 0; i < n; ++i)
            if (!is_pivot[i]) free.push_back(i);
        const int wp = n - w;
        // proj = rows of (1 - emb . retraction) at the kernel's free indices;
        // it kills im(emb) and is the identity on the reps columns.
        Mat<F> proj(f, wp, n);
        for (int tp = 0; tp < wp; ++tp) {
            proj.at(tp, free[tp]) = f.one();
            for (int i = 0; i < d; ++i) {
                const auto& ei = c.counit.at(0, i);
                if (f.is_zero(ei)) continue;
                for (int j = 0; j < d; ++j) {
                    const auto& ej = c.counit.at(0, j);
                    if (f.is_zero(ej)) continue;
                    for (int t = 0; t < w; ++t) {
                        const auto& ev = r.emb[s].at(free[tp], t);
                        if (f.is_zero(ev)) continue;
                        int col = (i * w + t) * d + j;
                        proj.at(tp, col) = f.sub(proj.at(tp, col), f.mul(ev, f.mul(ei, ej)));
                    }
                }
            }
        }
        auto lam = detail::quotient_lambda(c, w, proj, k);
        auto rho = detail::quotient_rho(c, w, proj, k);
        r.fibers.push_back(Bicomodule<F>{c, c, wp, std::move(lam), std::move(rho)});
        r.proj.push_back(std::move(proj));
        r.reps.push_back(std::move(k));
    }
    return r;
}

// Lift of a bicolinear map u: ra.resolved -> rb.resolved to fiber maps
// g[s]: W^a_s -> W^b_s commuting with the resolutions.
template <class F>
std::vector<Mat<F>> fiber_chain_map(const ResolutionData<F>& ra, const ResolutionData<F>& rb,
                                    const Mat<F>& u, int upto) {
    if (!(ra.c == rb.c)) throw Error(Errc::MixedCoalgebras, "chain map across different coalgebras");
    auto idd = Mat<F>::ident(ra.c.f, ra.c.dim);
    std::vector<Mat<F>> g{u};
    for (int s = 0; s < upto; ++s) {
        auto level = kron(idd, kron(g.back(), idd));
        g.push_back(matmul(rb.proj[s], matmul(level, ra.reps[s])));
    }
    return g;
}

// Full audit of an explicit cofree complex: bicolinearity of every map with
// respect to the on-the-nose cofree coactions, zero composites, and exactness
// by rank count through the truncation.
template <class F>
CheckReport validate_resolution(const CofreeComplex<F>& r, const std::string& name = "resolution") {
    CheckReport rep{name, {}};
    const int L = static_cast<int>(r.w.size()) - 1;
    detail::require(static_cast<int>(r.maps.size()) == L, name + ": need one map per adjacent term pair");
    detail::require(r.augmentation.rows == r.c.dim * r.w[0] * r.c.dim &&
                        r.augmentation.cols == r.resolved.dim,
                    name + ": augmentation shape");
    for (int s = 0; s < L; ++s)
        detail::require(r.maps[s].rows == r.c.dim * r.w[s + 1] * r.c.dim &&
                            r.maps[s].cols == r.c.dim * r.w[s] * r.c.dim,
                        name + ": map " + std::to_string(s) + " shape");
    rep.add("augmentation-colinear", is_bicolinear_map(r.resolved, r.term(0), r.augmentation));
    int prev_rank = rank(r.augmentation);
    rep.add_cmp("augmentation-injective", prev_rank, r.resolved.dim);
    for (int s = 0; s < L; ++s) {
        auto lbl = std::to_string(s);
        rep.add("map-" + lbl + "-colinear", is_bicolinear_map(r.term(s), r.term(s + 1), r.maps[s]));
        auto prev = s == 0 ? r.augmentation : r.maps[s - 1];
        rep.add("composite-" + lbl + "-zero", matmul(r.maps[s], prev).is_zero());
        int rk = rank(r.maps[s]);
        rep.add_cmp("exact-at-term-" + lbl, rk + prev_rank, r.c.dim * r.w[s] * r.c.dim);
        prev_rank = rk;
    }
    return rep;
}

} // namespace coho
