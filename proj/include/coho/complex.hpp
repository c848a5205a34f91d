#pragma once

#include "coho/structure.hpp"

namespace coho {

// Cochain complex with ascending differentials diffs[i]: spaces[i] -> spaces[i+1]
// in degree start_degree + i. Chain complexes are carried by negating degrees.
template <class F>
struct AscComplex {
    F f{};
    int start_degree = 0;
    std::vector<int> spaces;
    std::vector<Mat<F>> diffs;

    int top_degree() const { return start_degree + static_cast<int>(spaces.size()) - 1; }
};

template <class F>
void check_complex(const AscComplex<F>& c) {
    if (c.spaces.empty()) {
        if (!c.diffs.empty()) throw Error(Errc::NotAComplex, "differentials without spaces");
        return;
    }
    if (c.diffs.size() + 1 != c.spaces.size())
        throw Error(Errc::NotAComplex, "space/differential count mismatch");
    for (size_t i = 0; i < c.diffs.size(); ++i)
        if (c.diffs[i].rows != c.spaces[i + 1] || c.diffs[i].cols != c.spaces[i])
            throw Error(Errc::NotAComplex, "differential " + std::to_string(i) + " has wrong shape");
    for (size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!matmul(c.diffs[i + 1], c.diffs[i]).is_zero())
            throw Error(Errc::NotAComplex, "composite at step " + std::to_string(i) + " is nonzero");
}

template <class F>
AscComplex<F> make_complex(F f, int start_degree, std::vector<int> spaces, std::vector<Mat<F>> diffs) {
    AscComplex<F> c{f, start_degree, std::move(spaces), std::move(diffs)};
    check_complex(c);
    return c;
}

// Homology at a degree inside the stored window. Differentials beyond either
// end are zero maps, so edge degrees see a full kernel or empty image.
template <class F>
Subquotient<F> homology(const AscComplex<F>& c, int n) {
    int i = n - c.start_degree;
    if (i < 0 || i >= static_cast<int>(c.spaces.size()))
        throw Error(Errc::MalformedInput, "homology degree out of range");
    auto cycles = i < static_cast<int>(c.diffs.size()) ? kernel_subspace(c.diffs[i])
                                                       : full_subspace(c.f, c.spaces[i]);
    auto boundaries = i > 0 ? image_subspace(c.diffs[i - 1]) : zero_subspace(c.f, c.spaces[i]);
    return make_subquotient(cycles, boundaries);
}

template <class F>
GradedDims homology_dims(const AscComplex<F>& c, int lo, int hi) {
    GradedDims g{lo, {}};
    for (int n = lo; n <= hi; ++n) g.dims.push_back(homology(c, n).dim());
    return g;
}

// Cobar complex M (x) C^{(x)s} (x) N for 0 <= s <= max_degree + 1 with the
// alternating-insertion differential; its degree-0 map is exactly the
// cotensor-defining map rho (x) 1 - 1 (x) lambda.
template <class F>
AscComplex<F> cobar_complex(const RightComodule<F>& m, const LeftComodule<F>& n, int max_degree) {
    if (!(m.over == n.over)) throw Error(Errc::MixedCoalgebras, "cobar needs one shared coalgebra");
    const F f = m.over.f;
    const int d = m.over.dim;
    const int top = max_degree + 1;
    auto pow = [&](int e) {
        long v = 1;
        for (int i = 0; i < e; ++i) v *= d;
        return static_cast<int>(v);
    };
    std::vector<int> spaces;
    for (int s = 0; s <= top; ++s) spaces.push_back(m.dim * pow(s) * n.dim);
    std::vector<Mat<F>> diffs;
    for (int s = 0; s < top; ++s) {
        Mat<F> ds = kron(m.rho, Mat<F>::ident(f, pow(s) * n.dim));
        for (int i = 1; i <= s; ++i) {
            auto term = kron(Mat<F>::ident(f, m.dim * pow(i - 1)),
                             kron(m.over.delta, Mat<F>::ident(f, pow(s - i) * n.dim)));
            ds = (i % 2 == 0) ? add(ds, term) : sub(ds, term);
        }
        auto last = kron(Mat<F>::ident(f, m.dim * pow(s)), n.lambda);
        ds = (s % 2 == 0) ? sub(ds, last) : add(ds, last);
        diffs.push_back(std::move(ds));
    }
    return make_complex(f, 0, std::move(spaces), std::move(diffs));
}

enum class HochschildVariant { Cochain, Chain };

namespace detail {

/// Coboundary of a single cochain f: A^{(x)s} -> M given as an m x d^s matrix.
template <class F>
Mat<F> hochschild_coboundary(const Bimodule<F>& m, const Mat<F>& fm, int s) {
    const F f = m.over.f;
    const int d = m.over.dim;
    auto idd = Mat<F>::ident(f, d);
    Mat<F> out = matmul(m.left_act, kron(idd, fm));
    int dpow = 1;
    for (int i = 1; i <= s; ++i) {
        auto term = matmul(fm, kron(Mat<F>::ident(f, dpow),
                                    kron(m.over.mul, Mat<F>::ident(f, fm.cols / (dpow * d)))));
        out = (i % 2 == 0) ? add(out, term) : sub(out, term);
        dpow *= d;
    }
    auto last = matmul(m.right_act, kron(fm, idd));
    return (s % 2 == 0) ? sub(out, last) : add(out, last);
}

// Boundary of a single chain in M (x) A^{(x)s}, s >= 1, given as a column.
template <class F>
Mat<F> hochschild_boundary(const Bimodule<F>& m, const Mat<F>& v, int s) {
    const F f = m.over.f;
    const int d = m.over.dim;
    const int md = m.dim;
    auto pow = [&](int e) {
        long r = 1;
        for (int i = 0; i < e; ++i) r *= d;
        return static_cast<int>(r);
    };
    Mat<F> out(f, md * pow(s - 1), 1);
    auto bump = [&](int row, const typename F::Elem& x) { out.at(row, 0) = f.add(out.at(row, 0), x); };
    for (int idx = 0; idx < v.rows; ++idx) {
        const auto& coef = v.at(idx, 0);
        if (f.is_zero(coef)) continue;
        int word = idx % pow(s);
        int j = idx / pow(s);
        std::vector<int> a(s);
        for (int t = s - 1, w = word; t >= 0; --t, w /= d) a[t] = w % d;
        auto word_without = [&](int drop, int subst_pos, int subst) {
            int w2 = 0;
            for (int t = 0; t < s; ++t) {
                if (t == drop) continue;
                w2 = w2 * d + (t == subst_pos ? subst : a[t]);
            }
            return w2;
        };
        // m . a_1, dropping the first letter
        for (int r = 0; r < md; ++r) {
            const auto& av = m.right_act.at(r, j * d + a[0]);
            if (!f.is_zero(av)) bump(r * pow(s - 1) + word_without(0, -1, 0), f.mul(coef, av));
        }
        // inner products a_i a_{i+1} with sign (-1)^i, module slot kept
        for (int i = 1; i < s; ++i) {
            for (int r = 0; r < d; ++r) {
                const auto& pv = m.over.mul.at(r, a[i - 1] * d + a[i]);
                if (f.is_zero(pv)) continue;
                auto x = f.mul(coef, pv);
                if (i % 2 == 1) x = f.neg(x);
                bump(j * pow(s - 1) + word_without(i, i - 1, r), x);
            }
        }
        // a_s . m with sign (-1)^s, dropping the last letter
        for (int r = 0; r < md; ++r) {
            const auto& av = m.left_act.at(r, a[s - 1] * md + j);
            if (f.is_zero(av)) continue;
            auto x = f.mul(coef, av);
            if (s % 2 == 1) x = f.neg(x);
            bump(r * pow(s - 1) + word_without(s - 1, -1, 0), x);
        }
    }
    return out;
}

} // namespace detail

// Standard Hochschild complexes. Cochain: degree-s space Hom(A^{(x)s}, M) of
// dimension m*d^s, ascending coboundary, degrees 0..max_degree+1. Chain:
// degree-s space M (x) A^{(x)s} stored at ascending index -s, so homology H_s
// is read off at degree -s.
template <class F>
AscComplex<F> hochschild_complex(const FinAlgebra<F>& a, const Bimodule<F>& m, int max_degree,
                                 HochschildVariant variant) {
    if (!(m.over == a)) throw Error(Errc::MalformedInput, "bimodule is not over the given algebra");
    const F f = a.f;
    const int d = a.dim;
    const int top = max_degree + 1;
    auto pow = [&](int e) {
        long v = 1;
        for (int i = 0; i < e; ++i) v *= d;
        return static_cast<int>(v);
    };
    if (variant == HochschildVariant::Cochain) {
        std::vector<int> spaces;
        for (int s = 0; s <= top; ++s) spaces.push_back(m.dim * pow(s));
        std::vector<Mat<F>> diffs;
        for (int s = 0; s < top; ++s) {
            Mat<F> ds(f, spaces[s + 1], spaces[s]);
            for (int col = 0; col < spaces[s]; ++col) {
                Mat<F> basis(f, m.dim, pow(s));
                basis.at(col / pow(s), col % pow(s)) = f.one();
                auto img = detail::hochschild_coboundary(m, basis, s);
                for (int i = 0; i < img.rows; ++i)
                    for (int w = 0; w < img.cols; ++w) ds.at(i * img.cols + w, col) = img.at(i, w);
            }
            diffs.push_back(std::move(ds));
        }
        return make_complex(f, 0, std::move(spaces), std::move(diffs));
    }
    std::vector<int> spaces;
    for (int s = top; s >= 0; --s) spaces.push_back(m.dim * pow(s));
    std::vector<Mat<F>> diffs;
    for (int s = top; s >= 1; --s) {
        Mat<F> ds(f, m.dim * pow(s - 1), m.dim * pow(s));
        for (int col = 0; col < ds.cols; ++col) {
            Mat<F> basis(f, ds.cols, 1);
            basis.at(col, 0) = f.one();
            auto img = detail::hochschild_boundary(m, basis, s);
            for (int i = 0; i < img.rows; ++i) ds.at(i, col) = img.at(i, 0);
        }
        diffs.push_back(std::move(ds));
    }
    return make_complex(f, -top, std::move(spaces), std::move(diffs));
}

} // namespace coho
