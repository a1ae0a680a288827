#pragma once

#include <array>
#include <map>

#include "fedosphere/fiber_field.hpp"

namespace fedosphere {

// Canonical normal-ordered operator expressions: sums of
//   (FiberScalar coefficient) * (Grassmann form monomial) * (k1^a k2^b)
// with coefficients on the left and k-words rightmost. Moving a k generator
// across a coefficient applies the skew-derivation law
//   [k_i, f] = -sum_j M_ij df/ds_j,   M_ij = delta_ij - x_i x_j   (i hbar = 1).

/// Grassmann monomial over theta1, theta2, alpha1, alpha2 as a 4-bit set.
enum FormBit : uint8_t { FTH1 = 1, FTH2 = 2, FAL1 = 4, FAL2 = 8 };

inline int form_degree(uint8_t f) { return __builtin_popcount(f); }

/// Product of two form monomials: 0 sign means the product vanishes.
inline int form_mul(uint8_t a, uint8_t b, uint8_t& out) {
    if (a & b) return 0;
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        if (b & (1 << i)) inv += __builtin_popcount(a >> (i + 1));
    out = a | b;
    return (inv & 1) ? -1 : 1;
}

struct OpKey {
    uint8_t form = 0; // FormMono bits
    uint8_t ka = 0, kb = 0; // KWord exponents of k1, k2
    bool operator<(const OpKey& o) const {
        if (form != o.form) return form < o.form;
        if (ka != o.ka) return ka < o.ka;
        return kb < o.kb;
    }
    bool operator==(const OpKey& o) const {
        return form == o.form && ka == o.ka && kb == o.kb;
    }
};

struct OpExpr {
    std::map<OpKey, FiberScalar> t;

    OpExpr() = default;
    OpExpr(long n) {
        FiberScalar c(n);
        if (!c.is_zero()) t[{}] = std::move(c);
    }
    explicit OpExpr(FiberScalar c) {
        if (!c.is_zero()) t[{}] = std::move(c);
    }
    explicit OpExpr(BaseElem e) : OpExpr(FiberScalar(std::move(e))) {}

    static OpExpr unit() { return OpExpr(1); }
    static OpExpr form_gen(uint8_t bit) {
        OpExpr r;
        r.t[{bit, 0, 0}] = FiberScalar(1);
        return r;
    }
    static OpExpr k_gen(int i) {
        OpExpr r;
        OpKey k;
        (i == 0 ? k.ka : k.kb) = 1;
        r.t[k] = FiberScalar(1);
        return r;
    }
    static OpExpr s_gen(int i) { return OpExpr(FiberScalar::s_var(i)); }

    bool is_zero() const { return t.empty(); }
    bool is_scalar() const {
        return t.empty() || (t.size() == 1 && t.begin()->first == OpKey{});
    }
    FiberScalar scalar_part() const {
        auto it = t.find(OpKey{});
        return it == t.end() ? FiberScalar() : it->second;
    }

    void insert(OpKey k, FiberScalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    OpExpr operator-() const {
        OpExpr r;
        for (auto& [k, c] : t) r.t[k] = -c;
        return r;
    }
    friend OpExpr operator+(const OpExpr& a, const OpExpr& b) {
        OpExpr r = a;
        for (auto& [k, c] : b.t) r.insert(k, c);
        return r;
    }
    friend OpExpr operator-(const OpExpr& a, const OpExpr& b) {
        OpExpr r = a;
        for (auto& [k, c] : b.t) r.insert(k, -c);
        return r;
    }
    OpExpr& operator+=(const OpExpr& o) {
        for (auto& [k, c] : o.t) insert(k, c);
        return *this;
    }
    OpExpr& operator-=(const OpExpr& o) {
        for (auto& [k, c] : o.t) insert(k, -c);
        return *this;
    }

    bool operator==(const OpExpr& o) const {
        if (t.size() != o.t.size()) return false;
        auto it = o.t.begin();
        for (auto& [k, c] : t) {
            if (!(k == it->first) || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const OpExpr& o) const { return !(*this == o); }

    /// Part of the given exterior degree.
    OpExpr graded_part(int deg) const {
        OpExpr r;
        for (auto& [k, c] : t)
            if (form_degree(k.form) == deg) r.t[k] = c;
        return r;
    }
    int max_form_degree() const {
        int d = 0;
        for (auto& [k, c] : t) d = std::max(d, form_degree(k.form));
        return d;
    }
    bool is_homogeneous(int& deg) const;
};

/// Normal-ordered product; associative.
OpExpr normal_mul(const OpExpr& a, const OpExpr& b);

/// Commutative-scalar multiple from the left (coefficient-wise).
OpExpr scalar_mul(const FiberScalar& c, const OpExpr& a);
inline OpExpr operator*(const FiberScalar& c, const OpExpr& a) { return scalar_mul(c, a); }
inline OpExpr operator*(const OpExpr& a, const OpExpr& b) { return normal_mul(a, b); }

/// Graded commutator with Koszul signs from exterior degrees.
OpExpr graded_comm(const OpExpr& a, const OpExpr& b);

/// Plain commutator ab - ba (agrees with graded_comm when either side is even).
OpExpr comm(const OpExpr& a, const OpExpr& b);

OpExpr op_pow(const OpExpr& a, int n);

/// Inverse of a purely scalar expression.
OpExpr op_inv(const OpExpr& a);

/// Leading order: the (empty form, empty k-word) coefficient at s = 0, R = 1.
BaseElem lo(const OpExpr& a);

/// Ambient 3-vectors of operator expressions with order-preserving combinators.
struct VecOp {
    std::array<OpExpr, 3> c;

    OpExpr& operator[](int i) { return c[i]; }
    const OpExpr& operator[](int i) const { return c[i]; }

    VecOp operator-() const { return {-c[0], -c[1], -c[2]}; }
    friend VecOp operator+(const VecOp& a, const VecOp& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
    }
    friend VecOp operator-(const VecOp& a, const VecOp& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]};
    }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    bool operator==(const VecOp& o) const {
        return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2];
    }
};

/// Componentwise products keep factor order (noncommutative safety).
OpExpr vec_dot(const VecOp& a, const VecOp& b);
VecOp vec_cross(const VecOp& a, const VecOp& b);
VecOp scalar_mul(const FiberScalar& f, const VecOp& v);
VecOp op_mul(const OpExpr& a, const VecOp& v);
VecOp op_mul(const VecOp& v, const OpExpr& a);

} // namespace fedosphere
