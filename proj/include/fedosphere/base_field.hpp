#pragma once

#include <array>
#include <random>

#include "fedosphere/fraction.hpp"
#include "fedosphere/rational.hpp"

namespace fedosphere {

// Base layer: functions of (x, p) on the dense chart x3 != 0 of T*S^2.
// Independent variables are x1, x2, p1, p2; x3 is adjoined with x3^2 = 1 - x1^2 - x2^2
// and p3 is only ever the alias -(x1 p1 + x2 p2)/x3.

inline constexpr int VX1 = 0, VX2 = 1, VP1 = 2, VP2 = 3;

using BasePoly = Poly<CRat, 4>;
using BaseRat = Fraction<CRat, 4>;

/// 1 - x1^2 - x2^2, the square of x3.
inline const BasePoly& x3_square_poly() {
    static const BasePoly q = BasePoly(CRat(1)) - BasePoly::var(VX1, 2) - BasePoly::var(VX2, 2);
    return q;
}

/// Element a + b*x3 of the quadratic extension over the rational function field.
struct BaseElem {
    BaseRat a, b;

    BaseElem() = default;
    BaseElem(long n) : a(CRat(n)) {}
    BaseElem(long n, long d) : a(CRat(n, d)) {}
    explicit BaseElem(CRat c) : a(std::move(c)) {}
    explicit BaseElem(BaseRat r) : a(std::move(r)) {}
    BaseElem(BaseRat ra, BaseRat rb) : a(std::move(ra)), b(std::move(rb)) {}

    static BaseElem variable(int v) { return BaseElem(BaseRat(BasePoly::var(v))); }
    static BaseElem x1() { return variable(VX1); }
    static BaseElem x2() { return variable(VX2); }
    static BaseElem p1() { return variable(VP1); }
    static BaseElem p2() { return variable(VP2); }
    static BaseElem x3() { return BaseElem(BaseRat(), BaseRat(CRat(1))); }
    /// p3 := -(x1 p1 + x2 p2)/x3 = -(x1 p1 + x2 p2) x3 / (1 - x1^2 - x2^2)
    static BaseElem p3_alias() {
        BasePoly n = -(BasePoly::var(VX1) * BasePoly::var(VP1) +
                       BasePoly::var(VX2) * BasePoly::var(VP2));
        return BaseElem(BaseRat(), BaseRat(n, x3_square_poly()));
    }
    static BaseElem i_unit() { return BaseElem(CRat::i_unit()); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_one() const { return b.is_zero() && a.is_one(); }

    BaseElem operator-() const { return BaseElem(-a, -b); }
    friend BaseElem operator+(const BaseElem& u, const BaseElem& v) {
        return BaseElem(u.a + v.a, u.b + v.b);
    }
    friend BaseElem operator-(const BaseElem& u, const BaseElem& v) {
        return BaseElem(u.a - v.a, u.b - v.b);
    }
    static const BaseRat& q_rat() {
        static const BaseRat q{x3_square_poly()};
        return q;
    }
    friend BaseElem operator*(const BaseElem& u, const BaseElem& v) {
        if (u.b.is_zero() && v.b.is_zero()) return BaseElem(u.a * v.a);
        if (u.b.is_zero()) return BaseElem(u.a * v.a, u.a * v.b);
        if (v.b.is_zero()) return BaseElem(u.a * v.a, u.b * v.a);
        return BaseElem(u.a * v.a + (u.b * v.b) * q_rat(), u.a * v.b + u.b * v.a);
    }
    BaseElem& operator+=(const BaseElem& o) { a += o.a; b += o.b; return *this; }
    BaseElem& operator-=(const BaseElem& o) { a -= o.a; b -= o.b; return *this; }
    BaseElem& operator*=(const BaseElem& o) { *this = *this * o; return *this; }

    BaseElem inv() const {
        if (is_zero()) throw DivisionByZero();
        if (b.is_zero()) return BaseElem(a.inv());
        BaseRat n = a * a - b * b * q_rat(); // nonzero: x3 is not a rational function
        return BaseElem(a / n, -(b / n));
    }
    friend BaseElem operator/(const BaseElem& u, const BaseElem& v) { return u * v.inv(); }

    bool operator==(const BaseElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const BaseElem& o) const { return !(*this == o); }
    bool operator<(const BaseElem& o) const {
        if (!(a.num == o.a.num)) return a.num < o.a.num;
        if (!(a.den == o.a.den)) return a.den < o.a.den;
        if (!(b.num == o.b.num)) return b.num < o.b.num;
        return b.den < o.b.den;
    }
};

inline BaseElem operator*(const CRat& c, const BaseElem& e) {
    return BaseElem(e.a.scaled(c), e.b.scaled(c));
}

namespace modspec {
/// Fixed residues for (x1, x2, p1, p2) and a consistent x3 with x3^2 = 1-x1^2-x2^2.
struct BasePointMod {
    uint64_t x1, x2, p1, p2, x3;
};
inline const BasePointMod& base_point_mod() {
    static const BasePointMod pt = [] {
        BasePointMod r{104659, 0, 15487469, 32452867, 0};
        for (uint64_t x2 = 2038074001ULL;; ++x2) {
            uint64_t q = sub(1, add(mul(r.x1, r.x1), mul(x2, x2)));
            if (auto s = sqrt_mod(q); s && *s != 0) {
                r.x2 = x2;
                r.x3 = *s;
                break;
            }
        }
        return r;
    }();
    return pt;
}
} // namespace modspec

/// Specialization residue of a base element; nullopt when inconclusive.
inline std::optional<uint64_t> modspec_eval(const BaseElem& e) {
    const auto& pt = modspec::base_point_mod();
    const uint64_t vals[4] = {pt.x1, pt.x2, pt.p1, pt.p2};
    auto eval_poly = [&](const BasePoly& p) -> std::optional<uint64_t> {
        uint64_t acc = 0;
        for (auto& [m, c] : p.t) {
            auto cr = modspec_eval(c);
            if (!cr) return std::nullopt;
            uint64_t v = *cr;
            for (int w = 0; w < 4; ++w)
                if (m[w]) v = modspec::mul(v, modspec::pow(vals[w], m[w]));
            acc = modspec::add(acc, v);
        }
        return acc;
    };
    auto eval_rat = [&](const BaseRat& r) -> std::optional<uint64_t> {
        auto n = eval_poly(r.num);
        if (!n) return std::nullopt;
        uint64_t d = 1;
        for (auto& [g, e2] : r.den) {
            auto gv = eval_poly(g);
            if (!gv || *gv == 0) return std::nullopt;
            d = modspec::mul(d, modspec::pow(*gv, e2));
        }
        return modspec::mul(*n, modspec::inv(d));
    };
    auto av = eval_rat(e.a);
    if (!av) return std::nullopt;
    if (e.b.is_zero()) return av;
    auto bv = eval_rat(e.b);
    if (!bv) return std::nullopt;
    return modspec::add(*av, modspec::mul(*bv, pt.x3));
}

/// Partial derivative in one of the independent variables, chaining through x3.
inline BaseElem d_base(const BaseElem& f, int v) {
    auto dp = [v](const BasePoly& p) { return p.derivative(v); };
    BaseRat da = f.a.apply_derivation(dp);
    BaseRat db = f.b.apply_derivation(dp);
    if (v == VX1 || v == VX2) {
        // d(x3)/dx_v = -x_v x3 / (1 - x1^2 - x2^2)
        BaseRat chain(-BasePoly::var(v), x3_square_poly());
        db += f.b * chain;
    }
    return BaseElem(std::move(da), std::move(db));
}

/// Exact rational point on the constraint variety, from stereographic data.
struct SpherePoint {
    BigRat a, b, c, d;
    std::array<CRat, 3> x, p;

    SpherePoint(BigRat a_, BigRat b_, BigRat c_, BigRat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        BigRat D = 1 + a * a + b * b;
        x[0] = CRat(2 * a / D);
        x[1] = CRat(2 * b / D);
        x[2] = CRat((1 - a * a - b * b) / D);
        BigRat D2 = D * D;
        std::array<BigRat, 3> dxa = {2 * (1 - a * a + b * b) / D2, -4 * a * b / D2,
                                     -4 * a / D2};
        std::array<BigRat, 3> dxb = {-4 * a * b / D2, 2 * (1 + a * a - b * b) / D2,
                                     -4 * b / D2};
        for (int i = 0; i < 3; ++i) p[i] = CRat(c * dxa[i] + d * dxb[i]);
    }
};

inline SpherePoint random_point(std::mt19937_64& rng, int bound = 8) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    for (;;) {
        BigRat a = make_rat(num(rng), den(rng));
        BigRat b = make_rat(num(rng), den(rng));
        if (a * a + b * b == 1) continue; // x3 = 0: off the chart
        BigRat c = make_rat(num(rng), den(rng));
        BigRat d = make_rat(num(rng), den(rng));
        return SpherePoint(a, b, c, d);
    }
}

inline CRat eval_base_poly(const BasePoly& p, const SpherePoint& pt) {
    return p.eval({pt.x[0], pt.x[1], pt.p[0], pt.p[1]});
}

inline CRat eval_base_rat(const BaseRat& f, const SpherePoint& pt) {
    CRat n = eval_base_poly(f.num, pt);
    CRat d(1);
    for (auto& [g, e] : f.den) {
        CRat gv = eval_base_poly(g, pt);
        if (gv.is_zero()) throw PoleAtPoint();
        for (int i = 0; i < e; ++i) d *= gv;
    }
    return n / d;
}

/// Exact evaluation of a + b*x3 at a rational point of the variety.
inline CRat eval_base_at(const BaseElem& f, const SpherePoint& pt) {
    return eval_base_rat(f.a, pt) + eval_base_rat(f.b, pt) * pt.x[2];
}

} // namespace fedosphere
