#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lipcert/doubles.hpp"
#include "lipcert/polynomial.hpp"

namespace lipcert {

/// n x p matrix of polynomial germs over a shared context x_1..x_q.
/// Entries are stored row-major. The context never contains the unfolding
/// parameter.
struct MatrixGerm {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Polynomial> entries;  // row-major, rows*cols

    static MatrixGerm make(size_t rows, size_t cols, std::vector<Polynomial> entries) {
        if (rows == 0 || cols == 0) throw Error("matrix germ must have positive dimensions");
        if (entries.size() != rows * cols) throw Error("matrix germ entry count mismatch");
        for (size_t i = 1; i < entries.size(); ++i)
            require_same_context(entries[i].context(), entries[0].context(), "matrix germ");
        return MatrixGerm{rows, cols, std::move(entries)};
    }

    const VarContext& context() const { return entries.at(0).context(); }

    const Polynomial& at(size_t r, size_t c) const {
        if (r >= rows || c >= cols) throw Error("matrix germ index out of range");
        return entries[r * cols + c];
    }

    bool same_shape(const MatrixGerm& o) const { return rows == o.rows && cols == o.cols; }

    friend bool operator==(const MatrixGerm& a, const MatrixGerm& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// The 1-parameter unfolding (y, F(x) + y*theta(x)) of a matrix germ, with
/// its ambient context [param] ++ vars(F) and the doubled ambient context.
/// components[0] is the bare parameter; the rest is the row-major flattening
/// of F + param*theta.
struct Unfolding {
    std::string param;
    MatrixGerm F;
    MatrixGerm theta;
    VarContext ambient;
    std::vector<Polynomial> components;
    DoubledContext doubled;

    size_t matrix_component_count() const { return F.rows * F.cols; }

    /// Matrix component (r,c) as a polynomial over the ambient context.
    const Polynomial& matrix_component(size_t r, size_t c) const {
        return components.at(1 + r * F.cols + c);
    }
};

inline Unfolding build_unfolding(const MatrixGerm& F, const MatrixGerm& theta,
                                 const std::string& param) {
    if (!F.same_shape(theta)) throw Error("build_unfolding: F and theta shapes differ");
    require_same_context(F.context(), theta.context(), "build_unfolding");
    if (F.context().contains(param))
        throw Error("build_unfolding: parameter '" + param + "' collides with a variable");

    std::vector<std::string> names;
    names.reserve(1 + F.context().size());
    names.push_back(param);
    for (const auto& n : F.context().names()) names.push_back(n);
    VarContext ambient(std::move(names));

    Polynomial y = Polynomial::variable(ambient, size_t{0});
    std::vector<Polynomial> components;
    components.reserve(1 + F.rows * F.cols);
    components.push_back(y);
    for (size_t i = 0; i < F.entries.size(); ++i)
        components.push_back(F.entries[i].extend_to(ambient) + y * theta.entries[i].extend_to(ambient));

    DoubledContext dc = DoubledContext::of(ambient);
    return Unfolding{param, F, theta, ambient, std::move(components), dc};
}

/// I_D of the unfolding: doubles of all components over the doubled ambient
/// context. The first component is the parameter itself, so by default the
/// ideal carries the parameter double as a generator; the convention switch
/// drops that single generator (the matrix components are doubled as-is
/// either way).
inline Ideal unfolding_doubles(const Unfolding& u, bool include_param_double = true) {
    std::vector<Polynomial> comps;
    comps.reserve(u.components.size());
    size_t start = include_param_double ? 0 : 1;
    for (size_t i = start; i < u.components.size(); ++i) comps.push_back(u.components[i]);
    return doubles_ideal(u.doubled, comps);
}

/// I_D(theta): doubles of the flattened theta entries over the doubled
/// ambient context. The zero ideal exactly when theta is constant.
inline Ideal theta_doubles(const Unfolding& u) {
    std::vector<Polynomial> comps;
    comps.reserve(u.theta.entries.size());
    for (const auto& e : u.theta.entries) comps.push_back(e.extend_to(u.ambient));
    return doubles_ideal(u.doubled, comps);
}

}  // namespace lipcert
