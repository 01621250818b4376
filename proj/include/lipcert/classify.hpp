#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lipcert/groebner.hpp"
#include "lipcert/unfolding.hpp"

namespace lipcert {

enum class JetKind { ReducedPoint, FatPoint, NotIsolated };

inline const char* jet_kind_name(JetKind k) {
    switch (k) {
        case JetKind::ReducedPoint: return "REDUCED_POINT";
        case JetKind::FatPoint: return "FAT_POINT";
        case JetKind::NotIsolated: return "NOT_ISOLATED";
    }
    return "?";
}

struct JetType {
    JetKind kind;
    size_t linear_rank;
    size_t ambient_dimension;
};

/// Rank of the matrix of linear parts of the given germs (each must vanish at
/// the origin). Exact Gaussian elimination over the rationals.
inline size_t linear_part_rank(const std::vector<Polynomial>& entries) {
    if (entries.empty()) return 0;
    const size_t q = entries[0].context().size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& h : entries) {
        require_same_context(h.context(), entries[0].context(), "linear_part_rank");
        if (!h.constant_term().is_zero())
            throw Error("linear_part_rank: entry does not vanish at the origin");
        rows.push_back(h.linear_coefficients());
    }
    size_t rank = 0;
    for (size_t col = 0; col < q && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < q; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Classifies the zero fibre of the matrix germ at the origin:
/// full linear rank means a reduced point, a zero-dimensional entries ideal
/// of deficient rank means a fat point, anything else is not isolated.
inline JetType jet_type(const MatrixGerm& F) {
    const size_t q = F.context().size();
    size_t rank = linear_part_rank(F.entries);
    if (rank == q) return JetType{JetKind::ReducedPoint, rank, q};
    Ideal entries = Ideal::make(F.context(), F.entries);
    if (entries.is_zero()) return JetType{JetKind::NotIsolated, rank, q};
    bool zd = zero_dimensional(entries);
    return JetType{zd ? JetKind::FatPoint : JetKind::NotIsolated, rank, q};
}

/// One catalog entry: the matrix and the deformation direction.
struct Family {
    MatrixGerm F;
    MatrixGerm theta;
};

namespace detail {

inline Polynomial geometric_sum(const VarContext& ctx, const std::string& var, unsigned count) {
    Polynomial v = Polynomial::variable(ctx, var);
    Polynomial acc = Polynomial::zero(ctx);
    for (unsigned i = 0; i < count; ++i) acc += v.pow(i);
    return acc;
}

}  // namespace detail

/// 2x3 family with a reduced-point jet: F = [[w^l, y, x], [z, w, y^k]],
/// theta = [[1+w+...+w^(l-1), 0, 0], [0, 0, 1+y+...+y^(k-1)]]; l, k >= 2.
inline Family family_e1(unsigned l, unsigned k) {
    if (l < 2 || k < 2) throw Error("family e1: parameters must be >= 2");
    VarContext ctx({"x", "y", "z", "w"});
    auto P = [&](const std::string& s) { return Polynomial::variable(ctx, s); };
    MatrixGerm F = MatrixGerm::make(2, 3,
                                    {P("w").pow(l), P("y"), P("x"), P("z"), P("w"), P("y").pow(k)});
    Polynomial zero = Polynomial::zero(ctx);
    MatrixGerm theta = MatrixGerm::make(
        2, 3,
        {detail::geometric_sum(ctx, "w", l), zero, zero, zero, zero,
         detail::geometric_sum(ctx, "y", k)});
    return Family{std::move(F), std::move(theta)};
}

/// 2x3 family with a fat-point jet: F = [[z, y+w^2, x^2], [w^k, x, y]],
/// theta = [[0, 1, xw+w], [1+w+...+w^(k-1), w, w]]; k >= 2.
inline Family family_e2(unsigned k) {
    if (k < 2) throw Error("family e2: parameter must be >= 2");
    VarContext ctx({"x", "y", "z", "w"});
    auto P = [&](const std::string& s) { return Polynomial::variable(ctx, s); };
    MatrixGerm F = MatrixGerm::make(
        2, 3,
        {P("z"), P("y") + P("w").pow(2), P("x").pow(2), P("w").pow(k), P("x"), P("y")});
    MatrixGerm theta = MatrixGerm::make(
        2, 3,
        {Polynomial::zero(ctx), Polynomial::constant(ctx, Rational(1)), P("x") * P("w") + P("w"),
         detail::geometric_sum(ctx, "w", k), P("w"), P("w")});
    return Family{std::move(F), std::move(theta)};
}

}  // namespace lipcert
