#pragma once

#include <utility>
#include <vector>

#include "fedosphere/poly.hpp"

namespace fedosphere {

/// Rational function num / prod(factor_i ^ exp_i) over a coefficient field K.
/// Denominator factors stay in factored form with leading coefficient 1;
/// cancellation is by structural factor matching plus exact trial division.
/// Equality is decided by cross-multiplication, so full GCD reduction is an
/// optimization we do not need.
template <class K, int NV>
struct Fraction {
    using P = Poly<K, NV>;
    P num;
    std::vector<std::pair<P, int>> den;

    Fraction() = default;
    explicit Fraction(K c) : num(P(std::move(c))) {}
    explicit Fraction(P p) : num(std::move(p)) {}
    Fraction(P n, P d) : num(std::move(n)) {
        if (d.is_zero()) throw DivisionByZero();
        push_den(std::move(d), 1);
        reduce();
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return den.empty() && num.is_one(); }
    bool is_poly() const { return den.empty(); }

    void push_den(P f, int e) {
        if (f.is_constant()) {
            K c = f.constant_value();
            if (c.is_zero()) throw DivisionByZero();
            num = num.scaled(pow_inv(c, e));
            return;
        }
        K lc = f.lead().second;
        if (!lc.is_one()) {
            f = f.scaled(lc.inv());
            num = num.scaled(pow_inv(lc, e));
        }
        for (auto& [g, ge] : den) {
            if (g == f) {
                ge += e;
                return;
            }
        }
        den.push_back({std::move(f), e});
        std::sort(den.begin(), den.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
    }

    static K pow_inv(const K& c, int e) {
        K ci = c.inv(), r(1);
        for (int i = 0; i < e; ++i) r *= ci;
        return r;
    }

    void reduce() {
        if (num.is_zero()) {
            den.clear();
            return;
        }
        for (auto& [f, e] : den) {
            while (e > 0) {
                auto q = num.divide_exact(f);
                if (!q) break;
                num = std::move(*q);
                --e;
            }
        }
        den.erase(std::remove_if(den.begin(), den.end(),
                                 [](auto& fe) { return fe.second == 0; }),
                  den.end());
    }

    P den_expanded() const {
        P d(K(1));
        for (auto& [f, e] : den)
            for (int i = 0; i < e; ++i) d *= f;
        return d;
    }

    Fraction operator-() const {
        Fraction r = *this;
        r.num = -r.num;
        return r;
    }

    /// Product with operand-level cancellation. Each operand is reduced against
    /// its own denominator, so for irreducible factors nothing new can cancel
    /// in the product; cross-cancellation is attempted on the smaller operand
    /// numerators before multiplying. (Reducible user factors may miss a
    /// cancellation, which only affects size, not correctness.)
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        Fraction r;
        if (a.num.is_zero() || b.num.is_zero()) return r;
        P na = a.num, nb = b.num;
        std::vector<std::pair<P, int>> da = a.den, db = b.den;
        for (auto& [f, e] : db) {
            while (e > 0) {
                auto q = na.divide_exact(f);
                if (!q) break;
                na = std::move(*q);
                --e;
            }
        }
        for (auto& [f, e] : da) {
            while (e > 0) {
                auto q = nb.divide_exact(f);
                if (!q) break;
                nb = std::move(*q);
                --e;
            }
        }
        r.num = na * nb;
        if (r.num.is_zero()) return r;
        r.den = std::move(da);
        for (auto& [f, e] : db) {
            if (e == 0) continue;
            bool merged = false;
            for (auto& [g, ge] : r.den)
                if (g == f) {
                    ge += e;
                    merged = true;
                    break;
                }
            if (!merged) r.den.push_back({f, e});
        }
        r.den.erase(std::remove_if(r.den.begin(), r.den.end(),
                                   [](auto& fe) { return fe.second == 0; }),
                    r.den.end());
        std::sort(r.den.begin(), r.den.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        return r;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // common denominator: factor-wise max exponent
        Fraction r;
        r.den = a.den;
        for (auto& [f, e] : b.den) {
            bool found = false;
            for (auto& [g, ge] : r.den)
                if (g == f) {
                    ge = std::max(ge, e);
                    found = true;
                    break;
                }
            if (!found) r.den.push_back({f, e});
        }
        std::sort(r.den.begin(), r.den.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        P na = a.num, nb = b.num;
        for (auto& [f, e] : r.den) {
            int ea = e - exp_of(a.den, f), eb = e - exp_of(b.den, f);
            for (int i = 0; i < ea; ++i) na *= f;
            for (int i = 0; i < eb; ++i) nb *= f;
        }
        r.num = na + nb;
        r.reduce();
        return r;
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

    Fraction& operator+=(const Fraction& o) { *this = *this + o; return *this; }
    Fraction& operator-=(const Fraction& o) { *this = *this - o; return *this; }
    Fraction& operator*=(const Fraction& o) { *this = *this * o; return *this; }

    Fraction inv() const {
        if (num.is_zero()) throw DivisionByZero();
        Fraction r;
        r.num = P(K(1));
        for (auto& [f, e] : den)
            for (int i = 0; i < e; ++i) r.num *= f;
        r.push_den(num, 1);
        r.reduce();
        return r;
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inv(); }

    bool operator==(const Fraction& o) const {
        if (num.is_zero()) return o.num.is_zero();
        if (o.num.is_zero()) return false;
        if (den == o.den) return num == o.num;
        return (num * o.den_expanded() - o.num * den_expanded()).is_zero();
    }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction scaled(const K& c) const {
        Fraction r = *this;
        r.num = r.num.scaled(c);
        if (r.num.is_zero()) r.den.clear();
        return r;
    }

    /// Lifts a derivation on polynomials through the quotient rule.
    template <class DP>
    Fraction apply_derivation(DP&& dp) const {
        Fraction r;
        r.num = dp(num);
        r.den = den;
        r.reduce();
        for (auto& [f, e] : den) {
            Fraction piece;
            piece.num = num * dp(f);
            piece.num = piece.num.scaled(K(-static_cast<long>(e)));
            piece.den = den;
            piece.push_den(f, 1);
            piece.reduce();
            r += piece;
        }
        return r;
    }

    template <class F>
    auto map_coeffs(F&& fn) const {
        using K2 = decltype(fn(std::declval<const K&>()));
        Fraction<K2, NV> r;
        r.num = num.map_coeffs(fn);
        for (auto& [f, e] : den) r.push_den_raw(f.map_coeffs(fn), e);
        return r;
    }
    void push_den_raw(P f, int e) { // used by map_coeffs across rings
        if (f.is_zero()) throw DivisionByZero();
        push_den(std::move(f), e);
        reduce();
    }

    static int exp_of(const std::vector<std::pair<P, int>>& d, const P& f) {
        for (auto& [g, e] : d)
            if (g == f) return e;
        return 0;
    }
};

} // namespace fedosphere
