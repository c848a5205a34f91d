#pragma once

#include <string>
#include <vector>

#include "coho/bicomplex.hpp"
#include "coho/functors.hpp"
#include "coho/resolution.hpp"

// Catalog of the two-argument functors that can fill a bicomplex grid, plus
// the builder that evaluates one on a pair of object complexes. Each catalog
// entry knows three things: the cell a pair of bicomodules spans, how a map in
// the first slot acts on cells, and how a map in the second slot acts. The
// grid builder only composes these, so adding a catalog entry is local.

namespace coho {

enum class BifunctorTag { PlainTensor, Cotensor, ComoduleHom, Cohom };

inline const char* bifunctor_name(BifunctorTag t) {
    switch (t) {
        case BifunctorTag::PlainTensor: return "plain-tensor";
        case BifunctorTag::Cotensor: return "cotensor";
        case BifunctorTag::ComoduleHom: return "comodule-hom";
        case BifunctorTag::Cohom: return "cohom";
    }
    return "?";
}

// Hom-type entries consume a map in the first slot, tensor-type entries
// produce one; the second slot is covariant for every entry.
inline bool contravariant_first(BifunctorTag t) {
    return t == BifunctorTag::ComoduleHom || t == BifunctorTag::Cohom;
}

// Cell spanned by the pair (x, y). For ComoduleHom the cell sits inside
// Y (x) X^* and for Cohom inside X (x) Y^*; both are hom spaces, the Cohom
// cell being the frame of the dual in which induced maps get transposed.
template <class F>
Subspace<F> bifunctor_cell(BifunctorTag t, const Bicomodule<F>& x, const Bicomodule<F>& y) {
    switch (t) {
        case BifunctorTag::PlainTensor:
            return full_subspace(x.lambda.f, x.dim * y.dim);
        case BifunctorTag::Cotensor:
            return cotensor(x.forget_left(), y.forget_right());
        case BifunctorTag::ComoduleHom:
            return bicomodule_hom_space(x, y);
        case BifunctorTag::Cohom:
            return bicomodule_hom_space(y, x);
    }
    throw Error(Errc::MalformedInput, "unknown bifunctor tag");
}

namespace detail {

// Coordinates of an ambient-space map between two cells. Fails when the
// ambient map does not carry the source cell into the target cell, which is
// how ill-typed grid data surfaces.
template <class F>
Mat<F> cell_restrict(const Mat<F>& amb, const Subspace<F>& from, const Subspace<F>& to) {
    auto sol = solve(to.basis, matmul(amb, from.basis));
    if (!sol) throw Error(Errc::RestrictionFailed, "induced map escapes the catalog cell");
    return *sol;
}

} // namespace detail

// Action of a first-slot map on cells at fixed second object y. For covariant
// entries u runs source to target; for contravariant entries u runs target to
// source, matching a descending complex. Either way the returned matrix maps
// cell_p to cell_p1.
template <class F>
Mat<F> first_slot_map(BifunctorTag t, const Mat<F>& u, const Bicomodule<F>& y,
                      const Subspace<F>& cell_p, const Subspace<F>& cell_p1) {
    auto idy = Mat<F>::ident(y.lambda.f, y.dim);
    switch (t) {
        case BifunctorTag::PlainTensor:
        case BifunctorTag::Cotensor:
            return detail::cell_restrict(kron(u, idy), cell_p, cell_p1);
        case BifunctorTag::ComoduleHom:
            return detail::cell_restrict(kron(idy, u.t()), cell_p, cell_p1);
        case BifunctorTag::Cohom:
            return detail::cell_restrict(kron(u, idy), cell_p1, cell_p).t();
    }
    throw Error(Errc::MalformedInput, "unknown bifunctor tag");
}

// Action of a second-slot map v (always source to target) at fixed first
// object x.
template <class F>
Mat<F> second_slot_map(BifunctorTag t, const Bicomodule<F>& x, const Mat<F>& v,
                       const Subspace<F>& cell_q, const Subspace<F>& cell_q1) {
    auto idx = Mat<F>::ident(x.lambda.f, x.dim);
    switch (t) {
        case BifunctorTag::PlainTensor:
        case BifunctorTag::Cotensor:
            return detail::cell_restrict(kron(idx, v), cell_q, cell_q1);
        case BifunctorTag::ComoduleHom:
            return detail::cell_restrict(kron(v, idx), cell_q, cell_q1);
        case BifunctorTag::Cohom:
            return detail::cell_restrict(kron(idx, v.t()), cell_q1, cell_q).t();
    }
    throw Error(Errc::MalformedInput, "unknown bifunctor tag");
}

// Finite complex of bicomodules. Ascending means maps[s] runs objects[s] to
// objects[s+1]; descending reverses every arrow, the natural shape for a
// resolution read off toward its augmentation target.
template <class F>
struct ObjComplex {
    std::vector<Bicomodule<F>> objects;
    std::vector<Mat<F>> maps;
    bool ascending = true;
};

template <class F>
ObjComplex<F> resolution_complex(const ResolutionData<F>& r) {
    ObjComplex<F> out;
    out.ascending = true;
    for (int s = 0; s <= r.length(); ++s) out.objects.push_back(r.term(s));
    for (int s = 0; s + 1 <= r.length(); ++s) out.maps.push_back(r.map(s));
    return out;
}

// Evaluate a catalog entry on a pair of object complexes. The first complex
// must run in the entry's first-slot direction (descending for hom-type
// entries, ascending otherwise) and the second must ascend; a mismatch is a
// catalog error, not a shape error. The vertical maps carry the (-1)^p sign
// so the result anticommutes, and the bicomplex constructor verifies both
// squares of differentials, so non-complex inputs are rejected here.
template <class F>
Bicomplex<F> bifunctor_bicomplex(const ObjComplex<F>& pres, const ObjComplex<F>& qres,
                                 BifunctorTag tag) {
    detail::require(!pres.objects.empty() && !qres.objects.empty(),
                    "object complexes must be nonempty");
    detail::require(pres.maps.size() + 1 == pres.objects.size() &&
                        qres.maps.size() + 1 == qres.objects.size(),
                    "object complex needs one map per adjacent pair");
    if (contravariant_first(tag) == pres.ascending)
        throw Error(Errc::CatalogMismatch,
                    std::string(bifunctor_name(tag)) +
                        (contravariant_first(tag) ? " needs a descending first complex"
                                                  : " needs an ascending first complex"));
    if (!qres.ascending)
        throw Error(Errc::CatalogMismatch, "second complex must ascend");
    const F f = pres.objects[0].lambda.f;
    const int np = static_cast<int>(pres.objects.size()) - 1;
    const int nq = static_cast<int>(qres.objects.size()) - 1;
    for (int p = 0; p < np; ++p) {
        const auto& u = pres.maps[p];
        int src = pres.ascending ? p : p + 1;
        int tgt = pres.ascending ? p + 1 : p;
        detail::require(u.rows == pres.objects[tgt].dim && u.cols == pres.objects[src].dim,
                        "first-complex map shape mismatch");
    }
    for (int q = 0; q < nq; ++q)
        detail::require(qres.maps[q].rows == qres.objects[q + 1].dim &&
                            qres.maps[q].cols == qres.objects[q].dim,
                        "second-complex map shape mismatch");

    std::vector<std::vector<Subspace<F>>> cells;
    std::vector<std::vector<int>> dims(np + 1, std::vector<int>(nq + 1, 0));
    for (int p = 0; p <= np; ++p) {
        cells.emplace_back();
        for (int q = 0; q <= nq; ++q) {
            cells[p].push_back(bifunctor_cell(tag, pres.objects[p], qres.objects[q]));
            dims[p][q] = cells[p][q].dim();
        }
    }
    std::vector<std::vector<Mat<F>>> dh, dv;
    for (int p = 0; p < np; ++p) {
        dh.emplace_back();
        for (int q = 0; q <= nq; ++q)
            dh[p].push_back(first_slot_map(tag, pres.maps[p], qres.objects[q], cells[p][q],
                                           cells[p + 1][q]));
    }
    for (int p = 0; p <= np; ++p) {
        dv.emplace_back();
        for (int q = 0; q < nq; ++q) {
            auto step = second_slot_map(tag, pres.objects[p], qres.maps[q], cells[p][q],
                                        cells[p][q + 1]);
            dv[p].push_back(p % 2 == 1 ? neg(step) : step);
        }
    }
    return make_bicomplex(f, dims, dh, dv);
}

} // namespace coho
