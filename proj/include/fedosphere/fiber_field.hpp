#pragma once

#include <map>
#include <vector>

#include "fedosphere/base_field.hpp"

namespace fedosphere {

// Fiber layer: functions of the commuting fiber components s1, s2 over the base
// field, extended by the atomic root R with R^2 = SS + 1, plus optional formal
// jet symbols F^(j) standing for the j-th derivative of an arbitrary function
// of s^2.

inline constexpr int VS1 = 0, VS2 = 1;

using FiberPoly = Poly<BaseElem, 2>;
using FiberRat = Fraction<BaseElem, 2>;

/// SS = s.s with s3 eliminated: s1^2 + s2^2 + ((x1 s1 + x2 s2)/x3)^2.
inline const FiberPoly& ss_poly() {
    static const FiberPoly ss = [] {
        BaseRat q(x3_square_poly());
        BaseRat x1(BasePoly::var(VX1)), x2(BasePoly::var(VX2));
        FiberPoly p;
        p += FiberPoly::mono_term({2, 0}, BaseElem(BaseRat(CRat(1)) + x1 * x1 / q));
        p += FiberPoly::mono_term({0, 2}, BaseElem(BaseRat(CRat(1)) + x2 * x2 / q));
        p += FiberPoly::mono_term({1, 1}, BaseElem((x1 * x2 / q).scaled(CRat(2))));
        return p;
    }();
    return ss;
}

/// SS + 1, the square of the root symbol R.
inline const FiberPoly& ss1_poly() {
    static const FiberPoly p = ss_poly() + FiberPoly(BaseElem(1));
    return p;
}

/// a + b*R over the fiber rational function field.
struct FiberCore {
    FiberRat a, b;

    FiberCore() = default;
    FiberCore(long n) : a(BaseElem(n)) {}
    explicit FiberCore(BaseElem e) : a(FiberRat(std::move(e))) {}
    explicit FiberCore(FiberRat r) : a(std::move(r)) {}
    FiberCore(FiberRat ra, FiberRat rb) : a(std::move(ra)), b(std::move(rb)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_one() const { return b.is_zero() && a.is_one(); }

    FiberCore operator-() const { return FiberCore(-a, -b); }
    friend FiberCore operator+(const FiberCore& u, const FiberCore& v) {
        return FiberCore(u.a + v.a, u.b + v.b);
    }
    friend FiberCore operator-(const FiberCore& u, const FiberCore& v) {
        return FiberCore(u.a - v.a, u.b - v.b);
    }
    static const FiberRat& rr_rat() {
        static const FiberRat rr{ss1_poly()};
        return rr;
    }
    friend FiberCore operator*(const FiberCore& u, const FiberCore& v) {
        if (u.b.is_zero() && v.b.is_zero()) return FiberCore(u.a * v.a);
        if (u.b.is_zero()) return FiberCore(u.a * v.a, u.a * v.b);
        if (v.b.is_zero()) return FiberCore(u.a * v.a, u.b * v.a);
        return FiberCore(u.a * v.a + u.b * v.b * rr_rat(), u.a * v.b + u.b * v.a);
    }
    FiberCore& operator+=(const FiberCore& o) { a += o.a; b += o.b; return *this; }
    FiberCore& operator-=(const FiberCore& o) { a -= o.a; b -= o.b; return *this; }
    FiberCore& operator*=(const FiberCore& o) { *this = *this * o; return *this; }

    FiberCore inv() const {
        if (is_zero()) throw DivisionByZero();
        if (b.is_zero()) return FiberCore(a.inv());
        FiberRat n = a * a - b * b * rr_rat(); // nonzero: SS+1 is not a square in the field
        return FiberCore(a / n, -(b / n));
    }
    friend FiberCore operator/(const FiberCore& u, const FiberCore& v) { return u * v.inv(); }

    bool operator==(const FiberCore& o) const { return a == o.a && b == o.b; }
};

// ---------------------------------------------------------------------------
// Jet symbols

enum JetSym : uint8_t { JF = 0, JG, JH, JV, JW, JY, JT, JQ, JN, JU, JET_SYM_COUNT };

inline const char* jet_name(int sym) {
    static const char* names[JET_SYM_COUNT] = {"f", "g", "h", "v", "w",
                                               "y", "t", "q", "n", "u"};
    return names[sym];
}

/// Configurable jet order bound J; differentiating an order-J jet throws.
inline int& jet_order_limit() {
    static int J = 3;
    return J;
}

using JetMono = std::vector<uint16_t>; // sorted packed (sym << 8) | order, with repetition

inline uint16_t jet_pack(int sym, int ord) {
    return static_cast<uint16_t>((sym << 8) | ord);
}

/// Commutative coefficient scalar of the whole engine: fiber field element with
/// optional jet-symbol monomials.
struct FiberScalar {
    std::map<JetMono, FiberCore> t;

    FiberScalar() = default;
    FiberScalar(long n) {
        if (n != 0) t[{}] = FiberCore(n);
    }
    explicit FiberScalar(FiberCore c) {
        if (!c.is_zero()) t[{}] = std::move(c);
    }
    explicit FiberScalar(BaseElem e) : FiberScalar(FiberCore(std::move(e))) {}
    explicit FiberScalar(FiberRat r) : FiberScalar(FiberCore(std::move(r))) {}

    static FiberScalar s_var(int i) {
        return FiberScalar(FiberRat(FiberPoly::var(i)));
    }
    static FiberScalar ss() { return FiberScalar(FiberRat(ss_poly())); }
    static FiberScalar ss1() { return FiberScalar(FiberRat(ss1_poly())); }
    static FiberScalar root() {
        return FiberScalar(FiberCore(FiberRat(), FiberRat(BaseElem(1))));
    }
    static FiberScalar root_inv() { return root().inv(); }
    static FiberScalar jet(int sym, int ord) {
        if (ord > jet_order_limit()) throw JetOverflow(ord, jet_order_limit());
        FiberScalar r;
        r.t[{jet_pack(sym, ord)}] = FiberCore(1);
        return r;
    }
    static FiberScalar rat(long n, long d = 1) {
        FiberScalar r;
        FiberCore c(BaseElem(n, d));
        if (!c.is_zero()) r.t[{}] = std::move(c);
        return r;
    }

    bool is_zero() const { return t.empty(); }
    bool has_jets() const {
        for (auto& [m, c] : t)
            if (!m.empty()) return true;
        return false;
    }
    FiberCore jet_free_part() const {
        auto it = t.find({});
        return it == t.end() ? FiberCore() : it->second;
    }

    void insert(JetMono m, FiberCore c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace(std::move(m), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    FiberScalar operator-() const {
        FiberScalar r;
        for (auto& [m, c] : t) r.t[m] = -c;
        return r;
    }
    friend FiberScalar operator+(const FiberScalar& u, const FiberScalar& v) {
        FiberScalar r = u;
        for (auto& [m, c] : v.t) r.insert(m, c);
        return r;
    }
    friend FiberScalar operator-(const FiberScalar& u, const FiberScalar& v) {
        FiberScalar r = u;
        for (auto& [m, c] : v.t) r.insert(m, -c);
        return r;
    }
    friend FiberScalar operator*(const FiberScalar& u, const FiberScalar& v) {
        FiberScalar r;
        for (auto& [mu, cu] : u.t)
            for (auto& [mv, cv] : v.t) {
                FiberCore c = cu * cv;
                if (c.is_zero()) continue;
                JetMono m = mu;
                m.insert(m.end(), mv.begin(), mv.end());
                std::sort(m.begin(), m.end());
                r.insert(std::move(m), std::move(c));
            }
        return r;
    }
    FiberScalar& operator+=(const FiberScalar& o) {
        for (auto& [m, c] : o.t) insert(m, c);
        return *this;
    }
    FiberScalar& operator-=(const FiberScalar& o) {
        for (auto& [m, c] : o.t) insert(m, -c);
        return *this;
    }
    FiberScalar& operator*=(const FiberScalar& o) { *this = *this * o; return *this; }

    FiberScalar inv() const {
        if (is_zero()) throw DivisionByZero();
        if (has_jets())
            throw DivisionByZero("cannot invert a scalar with jet content");
        return FiberScalar(jet_free_part().inv());
    }
    friend FiberScalar operator/(const FiberScalar& u, const FiberScalar& v) {
        return u * v.inv();
    }

    /// Zero cores are pruned and polynomial numerators are canonical, so equal
    /// values have identical jet support; fractions compare by cross-multiplication.
    bool operator==(const FiberScalar& o) const {
        if (t.size() != o.t.size()) return false;
        auto it = o.t.begin();
        for (auto& [m, c] : t) {
            if (m != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const FiberScalar& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Structural partials: R and jets treated as atoms, chain rules assembled by
// the callers (d_fiber below, the connection in frame.cpp).

inline FiberCore core_dpart_s(const FiberCore& c, int v) {
    auto dp = [v](const FiberPoly& p) { return p.derivative(v); };
    return FiberCore(c.a.apply_derivation(dp), c.b.apply_derivation(dp));
}

inline FiberScalar dpart_s(const FiberScalar& f, int v) {
    FiberScalar r;
    for (auto& [m, c] : f.t) r.insert(m, core_dpart_s(c, v));
    return r;
}

inline FiberCore core_dpart_base(const FiberCore& c, int v) {
    auto dp = [v](const FiberPoly& p) {
        FiberPoly r;
        for (auto& [m, k] : p.t) {
            BaseElem dk = d_base(k, v);
            if (!dk.is_zero()) r.t.push_back({m, std::move(dk)});
        }
        r.normalize();
        return r;
    };
    return FiberCore(c.a.apply_derivation(dp), c.b.apply_derivation(dp));
}

inline FiberScalar dpart_base(const FiberScalar& f, int v) {
    FiberScalar r;
    for (auto& [m, c] : f.t) r.insert(m, core_dpart_base(c, v));
    return r;
}

inline FiberScalar dpart_root(const FiberScalar& f) {
    FiberScalar r;
    for (auto& [m, c] : f.t) r.insert(m, FiberCore(c.b));
    return r;
}

struct JetPartial {
    int sym, ord;
    FiberScalar coeff;
};

inline std::vector<JetPartial> dpart_jets(const FiberScalar& f) {
    std::vector<JetPartial> out;
    for (auto& [m, c] : f.t) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;
            int mult = static_cast<int>(std::count(m.begin(), m.end(), m[i]));
            JetMono rest;
            bool dropped = false;
            for (auto g : m) {
                if (!dropped && g == m[i]) {
                    dropped = true;
                    continue;
                }
                rest.push_back(g);
            }
            FiberScalar piece;
            FiberCore cc = c;
            cc.a = cc.a.scaled(BaseElem(mult));
            cc.b = cc.b.scaled(BaseElem(mult));
            piece.insert(std::move(rest), std::move(cc));
            int sym = m[i] >> 8, ord = m[i] & 0xff;
            bool merged = false;
            for (auto& jp : out)
                if (jp.sym == sym && jp.ord == ord) {
                    jp.coeff += piece;
                    merged = true;
                    break;
                }
            if (!merged) out.push_back({sym, ord, std::move(piece)});
        }
    }
    return out;
}

/// True when f actually involves the fiber: s-monomials, the root, or jets.
inline bool s_dependent(const FiberScalar& f) {
    auto poly_has_s = [](const FiberPoly& p) {
        for (auto& [m, c] : p.t)
            if (m[0] || m[1]) return true;
        return false;
    };
    auto rat_has_s = [&](const FiberRat& r) {
        if (poly_has_s(r.num)) return true;
        for (auto& [g, e] : r.den)
            if (poly_has_s(g)) return true;
        return false;
    };
    for (auto& [m, c] : f.t) {
        if (!m.empty()) return true; // jets are functions of s^2
        if (!c.b.is_zero()) return true; // R depends on s
        if (rat_has_s(c.a) || rat_has_s(c.b)) return true;
    }
    return false;
}

/// d/ds_v with the chain rule through R (dR = dSS/(2R)) and through jets
/// (dF^(j) = F^(j+1) dSS).
inline FiberScalar d_fiber(const FiberScalar& f, int v) {
    if (!s_dependent(f)) return FiberScalar();
    static const FiberScalar dss_cache[2] = {
        FiberScalar{FiberRat(ss_poly().derivative(0))},
        FiberScalar{FiberRat(ss_poly().derivative(1))}};
    const FiberScalar& dss = dss_cache[v];
    FiberScalar r = dpart_s(f, v);
    FiberScalar dr = dpart_root(f);
    if (!dr.is_zero()) {
        // 1/(2R) = R/(2(SS+1))
        FiberScalar half_rinv(FiberCore(FiberRat(),
                                        FiberRat(FiberPoly(BaseElem(1, 2)), ss1_poly())));
        r += dr * dss * half_rinv;
    }
    for (auto& jp : dpart_jets(f)) {
        if (jp.ord + 1 > jet_order_limit())
            throw JetOverflow(jp.ord + 1, jet_order_limit());
        r += jp.coeff * FiberScalar::jet(jp.sym, jp.ord + 1) * dss;
    }
    return r;
}

/// Substitutes every jet symbol by concrete derivative values: vals[sym][j]
/// replaces the order-j jet of sym.
inline FiberScalar subst_jets(const FiberScalar& f,
                              const std::map<int, std::vector<FiberScalar>>& vals) {
    FiberScalar r;
    for (auto& [m, c] : f.t) {
        FiberScalar term(c);
        for (auto g : m) {
            int sym = g >> 8, ord = g & 0xff;
            auto it = vals.find(sym);
            if (it == vals.end() || ord >= static_cast<int>(it->second.size()))
                throw EngineError(std::string("no substitution value for jet ") +
                                  jet_name(sym) + "^(" + std::to_string(ord) + ")");
            term *= it->second[ord];
        }
        r += term;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Evaluation

inline BaseElem eval_fiber_poly_s0(const FiberPoly& p) {
    BaseElem r;
    for (auto& [m, c] : p.t)
        if (m[0] == 0 && m[1] == 0) r += c;
    return r;
}

/// Value at s1 = s2 = 0 with R -> 1; PoleAtOrigin on a vanishing denominator.
inline BaseElem eval_core_s0(const FiberCore& c) {
    auto eval_rat = [](const FiberRat& f) {
        BaseElem n = eval_fiber_poly_s0(f.num);
        BaseElem d(1);
        for (auto& [g, e] : f.den) {
            BaseElem gv = eval_fiber_poly_s0(g);
            if (gv.is_zero()) throw PoleAtOrigin();
            for (int i = 0; i < e; ++i) d *= gv;
        }
        return n / d;
    };
    return eval_rat(c.a) + eval_rat(c.b);
}

/// Maps all base coefficients to exact constants at a sphere point; the result
/// stays a FiberScalar, still symbolic in s1, s2, R and jets.
FiberScalar eval_base_point(const FiberScalar& f, const SpherePoint& pt);

/// Probabilistic zero test used by the points verification mode: evaluates the
/// numerators at seeded rational points of the variety and of the fiber.
bool probably_zero(const FiberScalar& f, std::mt19937_64& rng, int npoints);

} // namespace fedosphere
