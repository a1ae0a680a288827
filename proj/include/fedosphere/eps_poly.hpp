#pragma once

#include <vector>

#include "fedosphere/errors.hpp"

namespace fedosphere {

/// Truncated polynomial in a nilpotent parameter: eps^N = 0. The element type
/// only needs ring operations and construction from small integers.
template <class T>
struct EpsPoly {
    std::vector<T> c; // c[i] multiplies eps^i

    explicit EpsPoly(int n) : c(static_cast<std::size_t>(n)) {
        if (n < 2) throw TruncationTooSmall();
    }
    static EpsPoly constant(int n, T v) {
        EpsPoly r(n);
        r.c[0] = std::move(v);
        return r;
    }
    int order() const { return static_cast<int>(c.size()); }

    bool is_zero() const {
        for (auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }
    /// True when every coefficient of eps^1 .. eps^{N-1} vanishes.
    bool higher_orders_vanish() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }

    EpsPoly operator-() const {
        EpsPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
        EpsPoly r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
        EpsPoly r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
        EpsPoly r(a.order());
        for (int i = 0; i < a.order(); ++i)
            for (int j = 0; i + j < a.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }

    /// Inverse when the constant term is the ring unit: Neumann series in the
    /// nilpotent remainder.
    EpsPoly inv() const {
        if (!(c[0] == T(1)))
            throw EngineError("EpsPoly inverse needs unit constant term");
        EpsPoly one = constant(order(), T(1));
        EpsPoly nil = one - *this;
        EpsPoly r = one, powacc = one;
        for (int m = 1; m < order(); ++m) {
            powacc = powacc * nil;
            r = r + powacc;
        }
        return r;
    }

    /// Applies fn coefficient-wise (derivations are eps-linear).
    template <class F>
    EpsPoly map(F&& fn) const {
        EpsPoly r(order());
        for (int i = 0; i < order(); ++i) r.c[i] = fn(c[i]);
        return r;
    }
};

} // namespace fedosphere
