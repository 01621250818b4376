#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "lipcert/errors.hpp"

namespace lipcert {

/// Exponent vector. Its length always equals the size of the owning
/// polynomial's variable context.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    static Monomial one(size_t nvars) { return Monomial(std::vector<uint32_t>(nvars, 0)); }

    size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (uint32_t x : e)
            if (x != 0) return false;
        return true;
    }

    uint64_t total_degree() const {
        uint64_t d = 0;
        for (uint32_t x : e) d += x;
        return d;
    }

    Monomial mul(const Monomial& o) const {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check(o);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o; requires o.divides(*this).
    Monomial divide(const Monomial& o) const {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) {
            if (o.e[i] > r.e[i]) throw Error("monomial division not exact");
            r.e[i] -= o.e[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check(o);
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i)
            if (o.e[i] > r.e[i]) r.e[i] = o.e[i];
        return r;
    }

    bool coprime(const Monomial& o) const {
        check(o);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

private:
    void check(const Monomial& o) const {
        if (e.size() != o.e.size()) throw ContextMismatchError("monomials of different context size");
    }
};

/// Structural order used only for canonical term storage inside Polynomial.
/// Not a monomial order in the algebraic sense.
struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

enum class OrderKind { Grevlex, Lex };

/// A monomial order: total, multiplicative, and a well-order (1 is minimal).
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex}; }
    static MonomialOrder lex() { return {OrderKind::Lex}; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.kind == b.kind; }
};

inline const char* order_name(MonomialOrder o) {
    return o.kind == OrderKind::Grevlex ? "grevlex" : "lex";
}

/// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.nvars() != b.nvars()) throw ContextMismatchError("compare: monomials of different context size");
    switch (order.kind) {
        case OrderKind::Lex: {
            for (size_t i = 0; i < a.e.size(); ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::Grevlex: {
            uint64_t da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db ? -1 : 1;
            // Same degree: scan from the last variable; at the last position
            // where they differ, the smaller exponent wins.
            for (size_t i = a.e.size(); i-- > 0;) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return compare(a, b, order) < 0;
}

}  // namespace lipcert
