#include "fedosphere/op_expr.hpp"

namespace fedosphere {

namespace {

/// M_ij = delta_ij - x_i x_j restricted to the independent indices.
const BaseElem& proj_m(int i, int j) {
    static const BaseElem m11 =
        BaseElem(1) - BaseElem::x1() * BaseElem::x1();
    static const BaseElem m12 = -(BaseElem::x1() * BaseElem::x2());
    static const BaseElem m22 =
        BaseElem(1) - BaseElem::x2() * BaseElem::x2();
    if (i == j) return i == 0 ? m11 : m22;
    return m12;
}

/// [k_i, f] = -sum_j M_ij df/ds_j at i hbar = 1.
FiberScalar k_ad(int i, const FiberScalar& f) {
    FiberScalar r;
    for (int j = 0; j < 2; ++j) {
        FiberScalar df = d_fiber(f, j);
        if (df.is_zero()) continue;
        r -= FiberScalar(proj_m(i, j)) * df;
    }
    return r;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

bool OpExpr::is_homogeneous(int& deg) const {
    if (t.empty()) {
        deg = 0;
        return true;
    }
    deg = form_degree(t.begin()->first.form);
    for (auto& [k, c] : t)
        if (form_degree(k.form) != deg) return false;
    return true;
}

OpExpr normal_mul(const OpExpr& a, const OpExpr& b) {
    OpExpr r;
    if (a.t.empty() || b.t.empty()) return r;
    int maxa = 0, maxb = 0;
    for (auto& [k, c] : a.t) {
        maxa = std::max<int>(maxa, k.ka);
        maxb = std::max<int>(maxb, k.kb);
    }
    for (auto& [kb, cb] : b.t) {
        // der[m][n] = ad_{k1}^m ad_{k2}^n (cb); the two ads commute.
        std::vector<std::vector<FiberScalar>> der(maxa + 1,
                                                  std::vector<FiberScalar>(maxb + 1));
        der[0][0] = cb;
        for (int n = 1; n <= maxb; ++n) der[0][n] = k_ad(1, der[0][n - 1]);
        for (int m = 1; m <= maxa; ++m)
            for (int n = 0; n <= maxb; ++n) der[m][n] = k_ad(0, der[m - 1][n]);

        for (auto& [ka, ca] : a.t) {
            uint8_t form;
            int sgn = form_mul(ka.form, kb.form, form);
            if (sgn == 0) continue;
            for (int m = 0; m <= ka.ka; ++m)
                for (int n = 0; n <= ka.kb; ++n) {
                    if (der[m][n].is_zero()) continue;
                    FiberScalar c = ca * der[m][n];
                    long coef = binom(ka.ka, m) * binom(ka.kb, n) * sgn;
                    if (coef != 1) c = FiberScalar(coef) * c;
                    if (c.is_zero()) continue;
                    OpKey key{form, static_cast<uint8_t>(ka.ka - m + kb.ka),
                              static_cast<uint8_t>(ka.kb - n + kb.kb)};
                    r.insert(key, std::move(c));
                }
        }
    }
    return r;
}

OpExpr scalar_mul(const FiberScalar& c, const OpExpr& a) {
    OpExpr r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : a.t) r.insert(k, c * v);
    return r;
}

OpExpr graded_comm(const OpExpr& a, const OpExpr& b) {
    // [a, b] = ab - (-1)^{pq} ba, per homogeneous pair; only odd-odd pairs flip.
    OpExpr a0, a1, b0, b1;
    for (auto& [k, c] : a.t) ((form_degree(k.form) & 1) ? a1 : a0).t[k] = c;
    for (auto& [k, c] : b.t) ((form_degree(k.form) & 1) ? b1 : b0).t[k] = c;
    OpExpr r = normal_mul(a, b);
    r -= normal_mul(b0, a);
    r -= normal_mul(b1, a0);
    r += normal_mul(b1, a1);
    return r;
}

OpExpr comm(const OpExpr& a, const OpExpr& b) {
    return normal_mul(a, b) - normal_mul(b, a);
}

OpExpr op_pow(const OpExpr& a, int n) {
    if (n < 0) return op_pow(op_inv(a), -n);
    OpExpr r = OpExpr::unit();
    for (int i = 0; i < n; ++i) r = normal_mul(r, a);
    return r;
}

OpExpr op_inv(const OpExpr& a) {
    if (!a.is_scalar())
        throw EngineError("inverse requires a purely scalar operator expression");
    return OpExpr(a.scalar_part().inv());
}

BaseElem lo(const OpExpr& a) {
    auto it = a.t.find(OpKey{});
    if (it == a.t.end()) return BaseElem();
    if (it->second.has_jets())
        throw EngineError("leading order of a jet-valued expression is not a base element");
    return eval_core_s0(it->second.jet_free_part());
}

OpExpr vec_dot(const VecOp& a, const VecOp& b) {
    OpExpr r;
    for (int i = 0; i < 3; ++i) r += normal_mul(a[i], b[i]);
    return r;
}

VecOp vec_cross(const VecOp& a, const VecOp& b) {
    VecOp r;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        r[i] = normal_mul(a[j], b[k]) - normal_mul(a[k], b[j]);
    }
    return r;
}

VecOp scalar_mul(const FiberScalar& f, const VecOp& v) {
    return {scalar_mul(f, v[0]), scalar_mul(f, v[1]), scalar_mul(f, v[2])};
}

VecOp op_mul(const OpExpr& a, const VecOp& v) {
    return {normal_mul(a, v[0]), normal_mul(a, v[1]), normal_mul(a, v[2])};
}

VecOp op_mul(const VecOp& v, const OpExpr& a) {
    return {normal_mul(v[0], a), normal_mul(v[1], a), normal_mul(v[2], a)};
}

} // namespace fedosphere
