#pragma once

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coho/errors.hpp"
#include "coho/field.hpp"

namespace coho {

// Work threshold below which the OpenMP kernels stay serial. Outputs are
// bit-identical either way; this only avoids threading overhead on the tiny
// matrices that dominate the structure-constant layer.
inline constexpr long kParallelCutoff = 1 << 14;

// Dense row-major matrix over an exact field. Immutable by convention once
// built: every operation returns a fresh matrix.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    F f{};
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(F fld, int r, int c) : f(fld), rows(r), cols(c), a(static_cast<size_t>(r) * c, fld.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat zeros(F f, int r, int c) { return Mat(f, r, c); }

    static Mat ident(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_zero() const {
        for (const Elem& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }

    Mat t() const {
        Mat r(f, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }
};

template <class F>
void check_same_field(const Mat<F>& a, const Mat<F>& b) {
    if (!a.f.same(b.f)) throw Error(Errc::FieldMismatch, "matrices over different fields");
}

template <class F>
Mat<F> add(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::MalformedInput, "shape mismatch in add");
    Mat<F> r(x.f, x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.add(x.a[i], y.a[i]);
    return r;
}

template <class F>
Mat<F> sub(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::MalformedInput, "shape mismatch in sub");
    Mat<F> r(x.f, x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.sub(x.a[i], y.a[i]);
    return r;
}

template <class F>
Mat<F> neg(const Mat<F>& x) {
    Mat<F> r(x.f, x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.neg(x.a[i]);
    return r;
}

template <class F>
Mat<F> scale(const Mat<F>& x, const typename F::Elem& c) {
    Mat<F> r(x.f, x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.mul(x.a[i], c);
    return r;
}

template <class F>
void matmul_row(const Mat<F>& x, const Mat<F>& y, Mat<F>& out, int i) {
    for (int k = 0; k < x.cols; ++k) {
        const auto& xv = x.at(i, k);
        if (x.f.is_zero(xv)) continue;
        for (int j = 0; j < y.cols; ++j) {
            const auto& yv = y.at(k, j);
            if (x.f.is_zero(yv)) continue;
            out.at(i, j) = x.f.add(out.at(i, j), x.f.mul(xv, yv));
        }
    }
}

template <class F>
Mat<F> matmul_serial(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.cols != y.rows) throw Error(Errc::MalformedInput, "shape mismatch in mul");
    Mat<F> r(x.f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) matmul_row(x, y, r, i);
    return r;
}

template <class F>
Mat<F> matmul(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.cols != y.rows) throw Error(Errc::MalformedInput, "shape mismatch in mul");
    Mat<F> r(x.f, x.rows, y.cols);
#ifdef _OPENMP
    if (static_cast<long>(x.rows) * x.cols * y.cols >= kParallelCutoff) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < x.rows; ++i) matmul_row(x, y, r, i);
        return r;
    }
#endif
    for (int i = 0; i < x.rows; ++i) matmul_row(x, y, r, i);
    return r;
}

template <class F>
Mat<F> operator*(const Mat<F>& x, const Mat<F>& y) {
    return matmul(x, y);
}

// Kronecker product with the global row-major tensor convention:
// e_i (x) e_j maps to index i*dim_b + j, so kron(a,b)(x (x) y) = (a x) (x) (b y).
template <class F>
void kron_row(const Mat<F>& x, const Mat<F>& y, Mat<F>& out, int i) {
    int ia = i / y.rows, ib = i % y.rows;
    for (int ja = 0; ja < x.cols; ++ja) {
        const auto& xv = x.at(ia, ja);
        if (x.f.is_zero(xv)) continue;
        for (int jb = 0; jb < y.cols; ++jb) {
            const auto& yv = y.at(ib, jb);
            if (x.f.is_zero(yv)) continue;
            out.at(i, ja * y.cols + jb) = x.f.mul(xv, yv);
        }
    }
}

template <class F>
Mat<F> kron_serial(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    Mat<F> r(x.f, x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < r.rows; ++i) kron_row(x, y, r, i);
    return r;
}

template <class F>
Mat<F> kron(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    Mat<F> r(x.f, x.rows * y.rows, x.cols * y.cols);
#ifdef _OPENMP
    if (static_cast<long>(r.rows) * r.cols >= kParallelCutoff) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < r.rows; ++i) kron_row(x, y, r, i);
        return r;
    }
#endif
    for (int i = 0; i < r.rows; ++i) kron_row(x, y, r, i);
    return r;
}

template <class F>
Mat<F> hcat(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.rows != y.rows) throw Error(Errc::MalformedInput, "shape mismatch in hcat");
    Mat<F> r(x.f, x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

template <class F>
Mat<F> vcat(const Mat<F>& x, const Mat<F>& y) {
    check_same_field(x, y);
    if (x.cols != y.cols) throw Error(Errc::MalformedInput, "shape mismatch in vcat");
    Mat<F> r(x.f, x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

template <class F>
Mat<F> col_slice(const Mat<F>& x, const std::vector<int>& cols) {
    Mat<F> r(x.f, x.rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < x.rows; ++i) r.at(i, static_cast<int>(j)) = x.at(i, cols[j]);
    return r;
}

template <class F>
Mat<F> col(const Mat<F>& x, int j) {
    Mat<F> r(x.f, x.rows, 1);
    for (int i = 0; i < x.rows; ++i) r.at(i, 0) = x.at(i, j);
    return r;
}

// Matrix of the permutation sending basis vector e_{perm[i]} to e_i, i.e.
// (P v)[i] = v[perm[i]].
template <class F>
Mat<F> perm_mat(F f, const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    Mat<F> r(f, n, n);
    for (int i = 0; i < n; ++i) r.at(i, perm[i]) = f.one();
    return r;
}

} // namespace coho
