#pragma once

#include <optional>
#include <vector>

#include "coho/matrix.hpp"

namespace coho {

template <class F>
struct Rref {
    Mat<F> rref;
    int rank = 0;
    std::vector<int> pivots;
};

namespace detail {

// Deterministic Gauss-Jordan: leftmost pivot column, topmost unused row,
// eliminate above and below immediately. Same arithmetic (and therefore the
// same output) with and without OpenMP; elimination of distinct rows is
// independent work.
template <class F>
Rref<F> reduce_impl(const Mat<F>& m, bool parallel) {
    Rref<F> out{m, 0, {}};
    Mat<F>& r = out.rref;
    const F f = m.f;
    for (int c = 0; c < r.cols && out.rank < r.rows; ++c) {
        int prow = -1;
        for (int i = out.rank; i < r.rows; ++i) {
            if (!f.is_zero(r.at(i, c))) { prow = i; break; }
        }
        if (prow < 0) continue;
        if (prow != out.rank) {
            for (int k = c; k < r.cols; ++k) std::swap(r.at(prow, k), r.at(out.rank, k));
        }
        const int pr = out.rank;
        if (!f.eq(r.at(pr, c), f.one())) {
            auto piv_inv = f.inv(r.at(pr, c));
            for (int k = c; k < r.cols; ++k) r.at(pr, k) = f.mul(r.at(pr, k), piv_inv);
        }
        auto eliminate = [&](int i) {
            if (i == pr || f.is_zero(r.at(i, c))) return;
            auto factor = r.at(i, c);
            for (int k = c; k < r.cols; ++k) {
                if (f.is_zero(r.at(pr, k))) continue;
                r.at(i, k) = f.sub(r.at(i, k), f.mul(factor, r.at(pr, k)));
            }
        };
#ifdef _OPENMP
        if (parallel && static_cast<long>(r.rows) * (r.cols - c) >= kParallelCutoff) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < r.rows; ++i) eliminate(i);
        } else {
            for (int i = 0; i < r.rows; ++i) eliminate(i);
        }
#else
        (void)parallel;
        for (int i = 0; i < r.rows; ++i) eliminate(i);
#endif
        out.pivots.push_back(c);
        ++out.rank;
    }
    return out;
}

} // namespace detail

template <class F>
Rref<F> reduce(const Mat<F>& m) {
    return detail::reduce_impl(m, true);
}

template <class F>
Rref<F> reduce_serial(const Mat<F>& m) {
    return detail::reduce_impl(m, false);
}

template <class F>
int rank(const Mat<F>& m) {
    return reduce(m).rank;
}

// Canonical kernel basis: one column per free column, with unit entry at the
// free index and back-substituted pivot entries (the RREF free-variable basis).
template <class F>
Mat<F> kernel(const Mat<F>& m) {
    Rref<F> rr = reduce(m);
    const F f = m.f;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    Mat<F> basis(f, m.cols, m.cols - rr.rank);
    int out = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.at(c, out) = f.one();
        for (int r = 0; r < rr.rank; ++r) basis.at(rr.pivots[r], out) = f.neg(rr.rref.at(r, c));
        ++out;
    }
    return basis;
}

// Deterministic column-space basis: the original columns sitting at the RREF
// pivot indices.
template <class F>
Mat<F> image(const Mat<F>& m) {
    return col_slice(m, reduce(m).pivots);
}

// Solve A X = B exactly. Returns the particular solution with all free
// variables zero, or nullopt when inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
    check_same_field(a, b);
    if (a.rows != b.rows) throw Error(Errc::MalformedInput, "shape mismatch in solve");
    Rref<F> rr = reduce(hcat(a, b));
    for (int c : rr.pivots)
        if (c >= a.cols) return std::nullopt;
    Mat<F> x(a.f, a.cols, b.cols);
    for (int r = 0; r < rr.rank; ++r)
        for (int j = 0; j < b.cols; ++j) x.at(rr.pivots[r], j) = rr.rref.at(r, a.cols + j);
    return x;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
    if (a.rows != a.cols) throw Error(Errc::MalformedInput, "inverse of non-square matrix");
    auto x = solve(a, Mat<F>::ident(a.f, a.rows));
    if (!x || rank(a) != a.rows) throw Error(Errc::MalformedInput, "singular matrix");
    return *x;
}

template <class F>
bool is_invertible(const Mat<F>& a) {
    return a.rows == a.cols && rank(a) == a.rows;
}

template <class F>
struct Subspace {
    int ambient = 0;
    Mat<F> basis; // columns, linearly independent
    int dim() const { return basis.cols; }
};

template <class F>
Subspace<F> kernel_subspace(const Mat<F>& m) {
    return Subspace<F>{m.cols, kernel(m)};
}

template <class F>
Subspace<F> image_subspace(const Mat<F>& m) {
    return Subspace<F>{m.rows, image(m)};
}

template <class F>
Subspace<F> full_subspace(F f, int n) {
    return Subspace<F>{n, Mat<F>::ident(f, n)};
}

template <class F>
Subspace<F> zero_subspace(F f, int n) {
    return Subspace<F>{n, Mat<F>(f, n, 0)};
}

// Span of the given columns as a Subspace with an independent deterministic
// basis (pivot-column subset).
template <class F>
Subspace<F> span_subspace(const Mat<F>& vecs) {
    return Subspace<F>{vecs.rows, image(vecs)};
}

template <class F>
bool subspace_contains(const Subspace<F>& s, const Mat<F>& vecs) {
    if (s.ambient != vecs.rows) throw Error(Errc::MalformedInput, "ambient mismatch");
    return solve(s.basis, vecs).has_value();
}

template <class F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b) {
    return a.ambient == b.ambient && a.dim() == b.dim() && subspace_contains(a, b.basis);
}

// Subquotient numerator/denominator with frozen representatives: the
// numerator basis columns that complete the denominator basis, picked by one
// deterministic reduction of [den | num].
template <class F>
struct Subquotient {
    int ambient = 0;
    Subspace<F> num;
    Subspace<F> den;
    Mat<F> reps;
    int dim() const { return reps.cols; }
};

template <class F>
std::pair<int, Mat<F>> subquotient_dim(const Subspace<F>& cycles, const Subspace<F>& boundaries) {
    if (cycles.ambient != boundaries.ambient) throw Error(Errc::MalformedInput, "ambient mismatch");
    if (!subspace_contains(cycles, boundaries.basis))
        throw Error(Errc::NotContained, "boundaries not contained in cycles");
    Rref<F> rr = reduce(hcat(boundaries.basis, cycles.basis));
    std::vector<int> chosen;
    for (int c : rr.pivots)
        if (c >= boundaries.basis.cols) chosen.push_back(c - boundaries.basis.cols);
    return {cycles.dim() - boundaries.dim(), col_slice(cycles.basis, chosen)};
}

template <class F>
Subquotient<F> make_subquotient(const Subspace<F>& cycles, const Subspace<F>& boundaries) {
    auto [d, reps] = subquotient_dim(cycles, boundaries);
    (void)d;
    return Subquotient<F>{cycles.ambient, cycles, boundaries, reps};
}

// Coordinates of ambient vectors in the representative basis, modulo the
// denominator. Fails (nullopt) when a vector lies outside the numerator span.
template <class F>
std::optional<Mat<F>> subquotient_coords(const Subquotient<F>& q, const Mat<F>& vecs) {
    auto sol = solve(hcat(q.den.basis, q.reps), vecs);
    if (!sol) return std::nullopt;
    Mat<F> out(vecs.f, q.dim(), vecs.cols);
    for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < vecs.cols; ++j) out.at(i, j) = sol->at(q.den.dim() + i, j);
    return out;
}

// Matrix of the map induced by f on representatives. Preconditions checked:
// f(num_src) inside num_tgt and f(den_src) inside den_tgt.
template <class F>
Mat<F> induced_map(const Mat<F>& f, const Subquotient<F>& src, const Subquotient<F>& tgt) {
    if (f.cols != src.ambient || f.rows != tgt.ambient)
        throw Error(Errc::MalformedInput, "induced_map shape mismatch");
    if (!subspace_contains(tgt.num, matmul(f, src.num.basis)))
        throw Error(Errc::NotWellDefined, "map does not send cycles to cycles");
    if (!subspace_contains(tgt.den, matmul(f, src.den.basis)))
        throw Error(Errc::NotWellDefined, "map does not send boundaries to boundaries");
    auto coords = subquotient_coords(tgt, matmul(f, src.reps));
    if (!coords) throw Error(Errc::NotWellDefined, "image of representative escapes target");
    return *coords;
}

// Projection ambient -> representative coordinates for full-numerator
// subquotients (quotient spaces).
template <class F>
Mat<F> quotient_projector(const Subquotient<F>& q) {
    if (q.num.dim() != q.ambient)
        throw Error(Errc::MalformedInput, "projector needs a full numerator");
    auto coords = subquotient_coords(q, Mat<F>::ident(q.reps.f, q.ambient));
    if (!coords) throw Error(Errc::MalformedInput, "projector solve failed");
    return *coords;
}

} // namespace coho
