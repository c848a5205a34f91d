#pragma once

#include "coho/complex.hpp"

namespace coho {

// First-quadrant bicomplex on a finite grid, p in 0..np and q in 0..nq.
// Differentials dh[p][q]: (p,q) -> (p+1,q) and dv[p][q]: (p,q) -> (p,q+1);
// the vertical maps are stored already sign-twisted so that dh and dv
// anticommute (constructor-checked).
template <class F>
struct Bicomplex {
    F f{};
    int np = 0, nq = 0;
    std::vector<std::vector<int>> dims;
    std::vector<std::vector<Mat<F>>> dh;
    std::vector<std::vector<Mat<F>>> dv;
};

template <class F>
void check_bicomplex(const Bicomplex<F>& b) {
    auto bad = [](const std::string& what) { throw Error(Errc::NotABicomplex, what); };
    if (static_cast<int>(b.dims.size()) != b.np + 1) bad("dims grid has wrong width");
    for (const auto& col : b.dims)
        if (static_cast<int>(col.size()) != b.nq + 1) bad("dims grid has wrong height");
    auto at = [&](const std::vector<std::vector<Mat<F>>>& g, int p, int q) -> const Mat<F>& {
        return g[p][q];
    };
    for (int p = 0; p <= b.np; ++p)
        for (int q = 0; q <= b.nq; ++q) {
            if (p < b.np) {
                const auto& m = at(b.dh, p, q);
                if (m.rows != b.dims[p + 1][q] || m.cols != b.dims[p][q]) bad("horizontal map shape");
            }
            if (q < b.nq) {
                const auto& m = at(b.dv, p, q);
                if (m.rows != b.dims[p][q + 1] || m.cols != b.dims[p][q]) bad("vertical map shape");
            }
        }
    for (int p = 0; p + 2 <= b.np; ++p)
        for (int q = 0; q <= b.nq; ++q)
            if (!matmul(b.dh[p + 1][q], b.dh[p][q]).is_zero()) bad("horizontal composite nonzero");
    for (int p = 0; p <= b.np; ++p)
        for (int q = 0; q + 2 <= b.nq; ++q)
            if (!matmul(b.dv[p][q + 1], b.dv[p][q]).is_zero()) bad("vertical composite nonzero");
    for (int p = 0; p + 1 <= b.np; ++p)
        for (int q = 0; q + 1 <= b.nq; ++q)
            if (!add(matmul(b.dv[p + 1][q], b.dh[p][q]), matmul(b.dh[p][q + 1], b.dv[p][q])).is_zero())
                bad("squares do not anticommute");
}

template <class F>
Bicomplex<F> make_bicomplex(F f, std::vector<std::vector<int>> dims,
                            std::vector<std::vector<Mat<F>>> dh, std::vector<std::vector<Mat<F>>> dv) {
    Bicomplex<F> b{f, static_cast<int>(dims.size()) - 1,
                   dims.empty() ? -1 : static_cast<int>(dims[0].size()) - 1, std::move(dims),
                   std::move(dh), std::move(dv)};
    if (b.np < 0 || b.nq < 0) throw Error(Errc::NotABicomplex, "empty grid");
    check_bicomplex(b);
    return b;
}

// Swaps the two directions; used to compute the second filtration through the
// first-filtration code path. The twist convention still anticommutes.
template <class F>
Bicomplex<F> transpose_bicomplex(const Bicomplex<F>& b) {
    Bicomplex<F> t{b.f, b.nq, b.np, {}, {}, {}};
    t.dims.assign(b.nq + 1, std::vector<int>(b.np + 1, 0));
    t.dh.assign(b.nq + 1, {});
    t.dv.assign(b.nq + 1, {});
    for (int p = 0; p <= b.nq; ++p) {
        for (int q = 0; q <= b.np; ++q) t.dims[p][q] = b.dims[q][p];
        for (int q = 0; q <= b.np; ++q) {
            if (p < b.nq) t.dh[p].push_back(b.dv[q][p]);
            if (q < b.np) t.dv[p].push_back(b.dh[q][p]);
        }
    }
    check_bicomplex(t);
    return t;
}

enum class Filtration { I, II };

namespace detail {

template <class F>
std::vector<std::vector<Subquotient<F>>> vertical_homology(const Bicomplex<F>& b) {
    std::vector<std::vector<Subquotient<F>>> e1;
    for (int p = 0; p <= b.np; ++p) {
        e1.emplace_back();
        for (int q = 0; q <= b.nq; ++q) {
            auto cycles = q < b.nq ? kernel_subspace(b.dv[p][q]) : full_subspace(b.f, b.dims[p][q]);
            auto bounds = q > 0 ? image_subspace(b.dv[p][q - 1]) : zero_subspace(b.f, b.dims[p][q]);
            e1.back().push_back(make_subquotient(cycles, bounds));
        }
    }
    return e1;
}

template <class F>
std::vector<std::vector<long>> first_filtration_page(const Bicomplex<F>& b, int r) {
    std::vector<std::vector<long>> out(b.np + 1, std::vector<long>(b.nq + 1, 0));
    if (r == 0) {
        for (int p = 0; p <= b.np; ++p)
            for (int q = 0; q <= b.nq; ++q) out[p][q] = b.dims[p][q];
        return out;
    }
    auto e1 = vertical_homology(b);
    if (r == 1) {
        for (int p = 0; p <= b.np; ++p)
            for (int q = 0; q <= b.nq; ++q) out[p][q] = e1[p][q].dim();
        return out;
    }
    // r == 2: homology of the horizontal maps induced on the E1 subquotients
    for (int q = 0; q <= b.nq; ++q) {
        std::vector<Mat<F>> ind;
        for (int p = 0; p < b.np; ++p) ind.push_back(induced_map(b.dh[p][q], e1[p][q], e1[p + 1][q]));
        for (int p = 0; p <= b.np; ++p) {
            auto cycles = p < b.np ? kernel_subspace(ind[p]) : full_subspace(b.f, e1[p][q].dim());
            auto bounds = p > 0 ? image_subspace(ind[p - 1]) : zero_subspace(b.f, e1[p][q].dim());
            out[p][q] = subquotient_dim(cycles, bounds).first;
        }
    }
    return out;
}

} // namespace detail

// Page dims of the chosen filtration. Page 1 of filtration I is vertical
// homology; page 2 adds the induced horizontal differential. Filtration II is
// computed on the transposed grid, so its page indices come back transposed
// relative to the original (p counts the original q).
template <class F>
std::vector<std::vector<long>> spectral_page(const Bicomplex<F>& b, Filtration filt, int r) {
    if (r < 0 || r > 2) throw Error(Errc::MalformedInput, "spectral page must be 0, 1, or 2");
    if (filt == Filtration::I) return detail::first_filtration_page(b, r);
    return detail::first_filtration_page(transpose_bicomplex(b), r);
}

// Homology of the total complex Tot^n = (+)_{p+q=n} K[p][q], blocks ordered by
// ascending p, differential dh + dv.
template <class F>
GradedDims total_homology(const Bicomplex<F>& b) {
    const int top = b.np + b.nq;
    std::vector<int> spaces;
    std::vector<std::vector<std::pair<int, int>>> cells; // per total degree
    std::vector<std::vector<int>> offs;
    for (int n = 0; n <= top; ++n) {
        cells.emplace_back();
        offs.emplace_back();
        int total = 0;
        for (int p = 0; p <= b.np; ++p) {
            int q = n - p;
            if (q < 0 || q > b.nq) continue;
            cells.back().push_back({p, q});
            offs.back().push_back(total);
            total += b.dims[p][q];
        }
        spaces.push_back(total);
    }
    std::vector<Mat<F>> diffs;
    for (int n = 0; n < top; ++n) {
        Mat<F> d(b.f, spaces[n + 1], spaces[n]);
        auto place = [&](const Mat<F>& blk, int tp, int tq, int src_off) {
            for (size_t t = 0; t < cells[n + 1].size(); ++t) {
                if (cells[n + 1][t] != std::make_pair(tp, tq)) continue;
                int ro = offs[n + 1][t];
                for (int i = 0; i < blk.rows; ++i)
                    for (int j = 0; j < blk.cols; ++j)
                        if (!b.f.is_zero(blk.at(i, j))) d.at(ro + i, src_off + j) = blk.at(i, j);
            }
        };
        for (size_t s = 0; s < cells[n].size(); ++s) {
            auto [p, q] = cells[n][s];
            if (p < b.np) place(b.dh[p][q], p + 1, q, offs[n][s]);
            if (q < b.nq) place(b.dv[p][q], p, q + 1, offs[n][s]);
        }
        diffs.push_back(std::move(d));
    }
    auto tot = make_complex(b.f, 0, std::move(spaces), std::move(diffs));
    return homology_dims(tot, 0, top);
}

// Both sides of the finite-grid Euler identity: the signed sum over a page-2
// grid must equal the signed sum of total homology dims.
inline long euler_sum_grid(const std::vector<std::vector<long>>& grid) {
    long acc = 0;
    for (size_t p = 0; p < grid.size(); ++p)
        for (size_t q = 0; q < grid[p].size(); ++q) acc += ((p + q) % 2 == 0 ? 1 : -1) * grid[p][q];
    return acc;
}

inline long euler_sum_graded(const GradedDims& g) {
    long acc = 0;
    for (size_t i = 0; i < g.dims.size(); ++i) {
        int n = g.start_degree + static_cast<int>(i);
        acc += (((n % 2) + 2) % 2 == 0 ? 1 : -1) * g.dims[i];
    }
    return acc;
}

} // namespace coho
