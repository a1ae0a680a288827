#include "fedosphere/oracle3.hpp"

namespace fedosphere {

namespace {

/// Grassmann element over the four surviving form generators with CRat
/// coefficients; multiplication uses the 4-bit Koszul sign.
using Gr4 = std::map<uint8_t, CRat>;

Gr4 gr4_mul(const Gr4& a, const Gr4& b) {
    Gr4 r;
    for (auto& [fa, ca] : a)
        for (auto& [fb, cb] : b) {
            uint8_t out;
            int sgn = form_mul(fa, fb, out);
            if (sgn == 0) continue;
            CRat c = ca * cb;
            if (sgn < 0) c = -c;
            auto [it, fresh] = r.try_emplace(out, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

} // namespace

PointExpr push_to_eliminated(const WExpr<CRat>& e, const SpherePoint& pt) {
    CRat inv_x3 = pt.x[2].inv();
    CRat c1 = -(pt.x[0] * inv_x3), c2 = -(pt.x[1] * inv_x3);
    PointExpr out;
    auto emit = [&](const PtKey& k, const CRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (auto& [key, coef] : e.t) {
        // s-word: s3^e -> (c1 s1 + c2 s2)^e, commuting binomial
        struct SPart {
            CRat c;
            uint8_t s1, s2;
        };
        std::vector<SPart> sparts{{coef, key.se[0], key.se[1]}};
        if (key.se[2] > 0) {
            std::vector<SPart> expanded;
            int e2 = key.se[2];
            long binom = 1;
            for (int j = 0; j <= e2; ++j) {
                if (j > 0) binom = binom * (e2 - j + 1) / j;
                CRat c = coef * CRat(binom);
                for (int t = 0; t < j; ++t) c *= c1;
                for (int t = 0; t < e2 - j; ++t) c *= c2;
                expanded.push_back({c, static_cast<uint8_t>(key.se[0] + j),
                                    static_cast<uint8_t>(key.se[1] + e2 - j)});
            }
            sparts = std::move(expanded);
        }
        // k-word: k3^e -> (c1 k1 + c2 k2)^e, k's commute among themselves
        struct KPart {
            CRat c;
            uint8_t ka, kb;
        };
        std::vector<KPart> kparts{{CRat(1), key.ke[0], key.ke[1]}};
        if (key.ke[2] > 0) {
            std::vector<KPart> expanded;
            int e2 = key.ke[2];
            long binom = 1;
            for (int j = 0; j <= e2; ++j) {
                if (j > 0) binom = binom * (e2 - j + 1) / j;
                CRat c = CRat(binom);
                for (int t = 0; t < j; ++t) c *= c1;
                for (int t = 0; t < e2 - j; ++t) c *= c2;
                expanded.push_back({c, static_cast<uint8_t>(key.ke[0] + j),
                                    static_cast<uint8_t>(key.ke[1] + e2 - j)});
            }
            kparts = std::move(expanded);
        }
        // form bits in ambient canonical order th1 th2 th3 al1 al2 al3
        Gr4 forms{{0, CRat(1)}};
        for (int bit = 0; bit < 6; ++bit) {
            if (!(key.form & (1 << bit))) continue;
            Gr4 gen;
            switch (bit) {
            case 0: gen[FTH1] = CRat(1); break;
            case 1: gen[FTH2] = CRat(1); break;
            case 2: gen[FTH1] = c1; gen[FTH2] = c2; break;
            case 3: gen[FAL1] = CRat(1); break;
            case 4: gen[FAL2] = CRat(1); break;
            case 5: gen[FAL1] = c1; gen[FAL2] = c2; break;
            }
            forms = gr4_mul(forms, gen);
        }
        for (auto& sp : sparts)
            for (auto& kp : kparts)
                for (auto& [f4, fc] : forms) {
                    PtKey k;
                    k.s1 = sp.s1;
                    k.s2 = sp.s2;
                    k.ka = kp.ka;
                    k.kb = kp.kb;
                    k.form = f4;
                    emit(k, sp.c * kp.c * fc);
                }
    }
    return out;
}

bool engine_matches_point(const OpExpr& engine, const PointExpr& oracle,
                          const SpherePoint& pt) {
    // group the oracle data per (form, k-word) into s-polynomials
    std::map<OpKey, Poly<CRat, 2>> op;
    for (auto& [k, c] : oracle) {
        OpKey key{k.form, k.ka, k.kb};
        op[key] += Poly<CRat, 2>::mono_term({k.s1, k.s2}, c);
    }
    // every engine key must match; every oracle key must be covered
    std::map<OpKey, bool> seen;
    for (auto& [key, coef] : engine.t) {
        FiberScalar at_pt = eval_base_point(coef, pt);
        if (at_pt.has_jets()) return false;
        FiberCore core = at_pt.jet_free_part();
        if (!core.b.is_zero()) return false; // catalog is root-free
        auto to_crat_poly = [&](const FiberPoly& p) {
            Poly<CRat, 2> r;
            for (auto& [m, c] : p.t) {
                CRat v = eval_base_at(c, pt); // coefficients are constants here
                if (!v.is_zero()) r.t.push_back({m, v});
            }
            r.normalize();
            return r;
        };
        Poly<CRat, 2> num = to_crat_poly(core.a.num);
        Poly<CRat, 2> den(CRat(1));
        for (auto& [g, e] : core.a.den) {
            Poly<CRat, 2> gv = to_crat_poly(g);
            for (int i = 0; i < e; ++i) den *= gv;
        }
        auto it = op.find(key);
        Poly<CRat, 2> rhs = it == op.end() ? Poly<CRat, 2>() : it->second;
        if (it != op.end()) seen[key] = true;
        if (!(num - rhs * den).is_zero()) return false;
    }
    for (auto& [key, poly] : op)
        if (!poly.is_zero() && !seen.count(key)) return false;
    return true;
}

std::vector<std::string> oracle_disagreements(const FrameCatalog& F,
                                              const SpherePoint& pt) {
    EngineAlgebra eng{F};
    AmbientAlgebra amb{pt};
    auto engine_cat = oracle_catalog(eng);
    auto ambient_cat = oracle_catalog(amb);
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < engine_cat.size(); ++i) {
        PointExpr oracle = push_to_eliminated(ambient_cat[i].second, pt);
        if (!engine_matches_point(engine_cat[i].second, oracle, pt))
            bad.push_back(engine_cat[i].first);
    }
    return bad;
}

} // namespace fedosphere
