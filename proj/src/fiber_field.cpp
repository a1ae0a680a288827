#include "fedosphere/fiber_field.hpp"

namespace fedosphere {

FiberScalar eval_base_point(const FiberScalar& f, const SpherePoint& pt) {
    auto mapc = [&](const BaseElem& e) { return BaseElem(eval_base_at(e, pt)); };
    FiberScalar r;
    for (auto& [m, c] : f.t) {
        FiberCore cc;
        try {
            cc.a = c.a.map_coeffs(mapc);
            cc.b = c.b.map_coeffs(mapc);
        } catch (const DivisionByZero&) {
            throw PoleAtPoint();
        }
        r.insert(m, std::move(cc));
    }
    return r;
}

namespace {

CRat eval_fiber_num(const FiberPoly& num, const SpherePoint& pt, const CRat& s1,
                    const CRat& s2) {
    CRat acc(0);
    for (auto& [m, c] : num.t) {
        CRat v = eval_base_at(c, pt);
        for (int e = 0; e < m[0]; ++e) v *= s1;
        for (int e = 0; e < m[1]; ++e) v *= s2;
        acc += v;
    }
    return acc;
}

} // namespace

bool probably_zero(const FiberScalar& f, std::mt19937_64& rng, int npoints) {
    if (f.is_zero()) return true;
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
    for (int n = 0; n < npoints; ++n) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw PoleAtPoint();
            SpherePoint pt = random_point(rng);
            CRat s1(make_rat(num(rng), den(rng)));
            CRat s2(make_rat(num(rng), den(rng)));
            bool ok = true;
            try {
                for (auto& [m, c] : f.t) {
                    // a fraction vanishes iff its numerator does
                    if (!eval_fiber_num(c.a.num, pt, s1, s2).is_zero() ||
                        !eval_fiber_num(c.b.num, pt, s1, s2).is_zero())
                        return false;
                }
            } catch (const PoleAtPoint&) {
                ok = false;
            }
            if (ok) break;
        }
    }
    return true;
}

} // namespace fedosphere
