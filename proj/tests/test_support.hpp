#pragma once

#include <random>

#include "fedosphere/fedosov.hpp"
#include "fedosphere/frame.hpp"

// Seeded structured generators shared by the property tests.

namespace fedosphere::testgen {

inline CRat rand_crat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    return CRat(num(rng), den(rng));
}

inline BasePoly rand_base_poly(std::mt19937_64& rng, int terms = 2, int maxdeg = 2) {
    std::uniform_int_distribution<int> deg(0, maxdeg), var(0, 3);
    BasePoly p;
    for (int i = 0; i < terms; ++i) {
        BasePoly::Mono m = BasePoly::zero_mono();
        m[var(rng)] = static_cast<uint16_t>(deg(rng));
        p += BasePoly::mono_term(m, rand_crat(rng));
    }
    return p;
}

inline BaseElem rand_base_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    BaseElem e(BaseRat(rand_base_poly(rng)));
    if (pick(rng) == 0) e += BaseElem(BaseRat(), BaseRat(rand_base_poly(rng, 1, 1)));
    if (pick(rng) == 1) {
        BasePoly d = rand_base_poly(rng, 1, 1) + BasePoly(CRat(2));
        if (!d.is_zero()) e = BaseElem(BaseRat(rand_base_poly(rng), d));
    }
    return e;
}

inline FiberScalar rand_fiber_scalar(std::mt19937_64& rng, bool allow_root = true) {
    std::uniform_int_distribution<int> deg(0, 2), pick(0, 5);
    FiberPoly p;
    for (int i = 0; i < 2; ++i) {
        FiberPoly::Mono m = {static_cast<uint16_t>(deg(rng)),
                             static_cast<uint16_t>(deg(rng))};
        p += FiberPoly::mono_term(m, rand_base_elem(rng));
    }
    FiberScalar f{FiberRat(p)};
    if (allow_root && pick(rng) == 0) f = f * FiberScalar::root();
    if (pick(rng) == 1) f = f * FiberScalar{FiberRat(FiberPoly(BaseElem(1)), ss1_poly())};
    return f;
}

inline OpExpr rand_op_expr(std::mt19937_64& rng, int terms = 2, int max_k = 2,
                           bool forms = true) {
    std::uniform_int_distribution<int> ke(0, max_k), fb(0, forms ? 15 : 0);
    OpExpr r;
    for (int i = 0; i < terms; ++i) {
        OpKey key{static_cast<uint8_t>(fb(rng)), static_cast<uint8_t>(ke(rng)),
                  static_cast<uint8_t>(ke(rng))};
        r.insert(key, rand_fiber_scalar(rng));
    }
    return r;
}

} // namespace fedosphere::testgen
