#pragma once

#include <string>
#include <vector>

#include "fedosphere/frame.hpp"
#include "fedosphere/weyl_generic.hpp"

namespace fedosphere {

// Independent brute-force backend: the same expressions are built twice, once
// through the engine (eliminated representation, symbolic base) and once in an
// ambient three-component Weyl algebra with numeric projector commutators at a
// rational point; the ambient normal form is then pushed into the eliminated
// representation and compared.

/// Ambient algebra at a rational point: [s_a, k_b] = delta_ab - x_a x_b (numeric).
struct AmbientAlgebra {
    using Scalar = WExpr<CRat>;
    using Vec = WVec<CRat>;

    WeylAlg<CRat> A;
    SpherePoint pt;

    explicit AmbientAlgebra(SpherePoint p) : pt(std::move(p)) {
        A.n = 3;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                A.comm[a][b] = (a == b ? CRat(1) : CRat(0)) - pt.x[a] * pt.x[b];
    }

    Vec x() const { return constants(pt.x); }
    Vec p() const { return constants(pt.p); }
    Vec s() const { return {Scalar::s_gen(0), Scalar::s_gen(1), Scalar::s_gen(2)}; }
    Vec k() const { return {Scalar::k_gen(0), Scalar::k_gen(1), Scalar::k_gen(2)}; }
    Vec theta() const {
        return {Scalar::form_gen(0), Scalar::form_gen(1), Scalar::form_gen(2)};
    }
    Vec alpha() const {
        return {Scalar::form_gen(3), Scalar::form_gen(4), Scalar::form_gen(5)};
    }

    Scalar dot(const Vec& a, const Vec& b) const { return wdot(A, a, b); }
    Vec cross(const Vec& a, const Vec& b) const { return wcross(A, a, b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return A.mul(a, b); }
    Scalar comm(const Scalar& a, const Scalar& b) const {
        return A.graded_commutator(a, b);
    }
    Scalar rat(long n, long d = 1) const { return Scalar(CRat(n, d)); }
    Scalar unit() const { return Scalar::unit(); }
    Vec smul(const Scalar& c, const Vec& v) const {
        return {A.mul(c, v[0]), A.mul(c, v[1]), A.mul(c, v[2])};
    }

private:
    Vec constants(const std::array<CRat, 3>& v) const {
        return {Scalar(v[0]), Scalar(v[1]), Scalar(v[2])};
    }
};

/// The engine seen through the same combinator surface.
struct EngineAlgebra {
    using Scalar = OpExpr;
    using Vec = VecOp;

    const FrameCatalog& F;

    Vec x() const { return F.x; }
    Vec p() const { return F.p; }
    Vec s() const { return F.s; }
    Vec k() const { return F.k; }
    Vec theta() const { return F.theta; }
    Vec alpha() const { return F.alpha; }

    Scalar dot(const Vec& a, const Vec& b) const { return vec_dot(a, b); }
    Vec cross(const Vec& a, const Vec& b) const { return vec_cross(a, b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normal_mul(a, b); }
    Scalar comm(const Scalar& a, const Scalar& b) const { return graded_comm(a, b); }
    Scalar rat(long n, long d = 1) const { return OpExpr(FiberScalar::rat(n, d)); }
    Scalar unit() const { return OpExpr::unit(); }
    Vec smul(const Scalar& c, const Vec& v) const { return op_mul(c, v); }
};

/// One generic catalog, instantiated through either algebra.
template <class Pol>
std::vector<std::pair<std::string, typename Pol::Scalar>> oracle_catalog(const Pol& P) {
    using S = typename Pol::Scalar;
    using V = typename Pol::Vec;
    std::vector<std::pair<std::string, S>> out;
    auto add = [&](const std::string& name, S e) { out.push_back({name, std::move(e)}); };
    auto addv = [&](const std::string& name, const V& v) {
        for (int i = 0; i < 3; ++i) add(name + "-" + std::to_string(i + 1), v[i]);
    };

    V x = P.x(), p = P.p(), s = P.s(), k = P.k(), th = P.theta(), al = P.alpha();
    V z = p - P.cross(x, k);
    V xs = P.cross(x, s);
    S ss = P.dot(s, s);
    S sth = P.dot(s, th);
    S kth = P.dot(k, th);
    S ks = P.dot(k, s);
    S omega = P.dot(al, th);
    S omt = P.mul(P.rat(1, 2), P.dot(x, P.cross(th, th)));
    S r0 = P.mul(P.rat(1, 3), P.mul(kth, ss) - P.mul(ks, sth));

    add("proj-s3k3", P.comm(s[2], k[2]));
    add("rel-xs", P.dot(x, s));
    add("rel-xk", P.dot(x, k));
    add("shift-ks-s1", P.comm(ks, s[0]));
    add("zxs-split", P.dot(z, xs) - (P.dot(p, xs) - ks));
    addv("zxx", P.cross(z, x) - (P.cross(p, x) - k));
    add("r0", r0);
    addv("r0-s", {{P.comm(r0, s[0]), P.comm(r0, s[1]), P.comm(r0, s[2])}});
    add("r0-sth", P.comm(r0, sth));
    add("r0-ss", P.comm(r0, ss));
    add("zs-ss", P.comm(P.dot(z, s), ss));
    addv("r0-k", {{P.comm(r0, k[0]), P.comm(r0, k[1]), P.comm(r0, k[2])}});
    add("ss-xks", P.comm(ss, P.dot(P.cross(x, k), s)));
    // theta^a theta^b = omt eps^{abc} x_c (a,b) = (1,2),(2,3),(3,1)
    add("thth-12", P.mul(th[0], th[1]) - P.mul(omt, x[2]));
    add("thth-23", P.mul(th[1], th[2]) - P.mul(omt, x[0]));
    add("thth-31", P.mul(th[2], th[0]) - P.mul(omt, x[1]));
    // (v.theta)(x cross w).theta = omt (v.w)
    {
        const V* vs[4] = {&s, &k, &z, &p};
        const char* names[4] = {"s", "k", "z", "p"};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                add(std::string("contract-") + names[i] + names[j],
                    P.mul(P.dot(*vs[i], th), P.dot(P.cross(x, *vs[j]), th)) -
                        P.mul(omt, P.dot(*vs[i], *vs[j])));
    }
    // transverse pairs: v cross w = ((v cross w).x) x
    addv("transverse-sk", P.cross(s, k) - P.smul(P.dot(P.cross(s, k), x), x));
    addv("transverse-sxs", P.cross(s, xs) - P.smul(P.dot(P.cross(s, xs), x), x));
    // shift rule s_a f(k.s) = f(k.s + 1) s_a for f = t^d, d <= 3
    for (int d = 0; d <= 3; ++d) {
        S ksd = P.unit(), ks1d = P.unit();
        for (int i = 0; i < d; ++i) {
            ksd = P.mul(ksd, ks);
            ks1d = P.mul(ks1d, ks + P.unit());
        }
        for (int a = 0; a < 3; ++a)
            add("shift-d" + std::to_string(d) + "-" + std::to_string(a + 1),
                P.mul(s[a], ksd) - P.mul(ks1d, s[a]));
    }
    // Omega and its commutators
    S Om = P.mul(P.rat(1, 3), P.mul(P.dot(s, al), sth) - P.mul(ss, omega)) +
           P.mul(P.dot(P.cross(x, k), s), omt);
    add("Omega", Om);
    addv("Omega-s", {{P.comm(Om, s[0]) - P.mul(omt, P.cross(x, s)[0]),
                      P.comm(Om, s[1]) - P.mul(omt, P.cross(x, s)[1]),
                      P.comm(Om, s[2]) - P.mul(omt, P.cross(x, s)[2])}});
    add("q-flat", P.dot(s, al) - kth);
    return out;
}

/// Eliminated representation of an ambient value at the point: polynomial data
/// in s1, s2, k1, k2 and the four surviving form generators.
struct PtKey {
    uint8_t s1 = 0, s2 = 0, ka = 0, kb = 0, form = 0; // 4-bit form
    bool operator<(const PtKey& o) const {
        if (form != o.form) return form < o.form;
        if (s1 != o.s1) return s1 < o.s1;
        if (s2 != o.s2) return s2 < o.s2;
        if (ka != o.ka) return ka < o.ka;
        return kb < o.kb;
    }
};
using PointExpr = std::map<PtKey, CRat>;

/// Substitutes the eliminated third components (numeric x) into an ambient
/// normal form.
PointExpr push_to_eliminated(const WExpr<CRat>& e, const SpherePoint& pt);

/// Exact comparison of an engine expression with an oracle value at the point.
bool engine_matches_point(const OpExpr& engine, const PointExpr& oracle,
                          const SpherePoint& pt);

/// Runs the whole catalog at one point; returns the names that disagree.
std::vector<std::string> oracle_disagreements(const FrameCatalog& F,
                                              const SpherePoint& pt);

} // namespace fedosphere
