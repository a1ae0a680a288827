#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "fedosphere/errors.hpp"

namespace fedosphere {

// A small Heisenberg-type algebra with explicit s-words: generators
// s_1..s_n, k_1..k_n with [s_a, k_b] central, tensored with up to 2n Grassmann
// form generators. Used for the ambient three-component oracle (numeric
// projector commutators) and for the flat Weyl algebra (i hbar delta_ab).

inline int form6_mul(uint8_t a, uint8_t b, uint8_t& out) {
    if (a & b) return 0;
    int inv = 0;
    for (int i = 0; i < 6; ++i)
        if (b & (1 << i)) inv += __builtin_popcount(a >> (i + 1));
    out = a | b;
    return (inv & 1) ? -1 : 1;
}

inline int form6_degree(uint8_t f) { return __builtin_popcount(f); }

struct WKey {
    std::array<uint8_t, 3> se{}, ke{};
    uint8_t form = 0;
    bool operator<(const WKey& o) const {
        if (form != o.form) return form < o.form;
        if (se != o.se) return se < o.se;
        return ke < o.ke;
    }
    bool operator==(const WKey& o) const {
        return se == o.se && ke == o.ke && form == o.form;
    }
};

/// Normal-ordered element: sum of coeff * s-word * form * k-word.
template <class K>
struct WExpr {
    std::map<WKey, K> t;

    WExpr() = default;
    explicit WExpr(K c) {
        if (!c.is_zero()) t[{}] = std::move(c);
    }

    static WExpr s_gen(int a) {
        WExpr r;
        WKey k;
        k.se[a] = 1;
        r.t[k] = K(1);
        return r;
    }
    static WExpr k_gen(int a) {
        WExpr r;
        WKey k;
        k.ke[a] = 1;
        r.t[k] = K(1);
        return r;
    }
    static WExpr form_gen(int bit) {
        WExpr r;
        WKey k;
        k.form = static_cast<uint8_t>(1 << bit);
        r.t[k] = K(1);
        return r;
    }
    static WExpr unit() { return WExpr(K(1)); }

    bool is_zero() const { return t.empty(); }

    void insert(const WKey& k, K c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    WExpr operator-() const {
        WExpr r;
        for (auto& [k, c] : t) r.t[k] = -c;
        return r;
    }
    friend WExpr operator+(const WExpr& a, const WExpr& b) {
        WExpr r = a;
        for (auto& [k, c] : b.t) r.insert(k, c);
        return r;
    }
    friend WExpr operator-(const WExpr& a, const WExpr& b) {
        WExpr r = a;
        for (auto& [k, c] : b.t) r.insert(k, -c);
        return r;
    }
    WExpr& operator+=(const WExpr& o) {
        for (auto& [k, c] : o.t) insert(k, c);
        return *this;
    }
    WExpr& operator-=(const WExpr& o) {
        for (auto& [k, c] : o.t) insert(k, -c);
        return *this;
    }
    bool operator==(const WExpr& o) const { return (*this - o).is_zero(); }
    bool operator!=(const WExpr& o) const { return !(*this == o); }

    WExpr scaled(const K& c) const {
        WExpr r;
        for (auto& [k, v] : t) r.insert(k, v * c);
        return r;
    }
};

/// Algebra context: [s_a, k_b] = comm[a][b], central in K.
template <class K>
struct WeylAlg {
    int n = 3;
    std::array<std::array<K, 3>, 3> comm{};

    using E = WExpr<K>;

    /// Normal-ordered product. Each k of the left factor either passes the
    /// right s-word or contracts with exactly one s (the commutator acts as a
    /// derivation with central values).
    E mul(const E& x, const E& y) const {
        E result;
        struct State {
            K c;
            std::array<uint8_t, 3> se, kleft, kpassed;
        };
        for (auto& [kx, cx] : x.t)
            for (auto& [ky, cy] : y.t) {
                uint8_t form;
                int sgn = form6_mul(kx.form, ky.form, form);
                if (sgn == 0) continue;
                K c0 = cx * cy;
                if (sgn < 0) c0 = -c0;
                std::vector<State> work{{std::move(c0), ky.se, kx.ke, {0, 0, 0}}};
                while (!work.empty()) {
                    State st = std::move(work.back());
                    work.pop_back();
                    int a = -1;
                    for (int g = 0; g < n; ++g)
                        if (st.kleft[g]) {
                            a = g;
                            break;
                        }
                    if (a < 0) {
                        WKey key;
                        key.form = form;
                        for (int g = 0; g < 3; ++g) {
                            key.se[g] = static_cast<uint8_t>(kx.se[g] + st.se[g]);
                            key.ke[g] = static_cast<uint8_t>(st.kpassed[g] + ky.ke[g]);
                        }
                        result.insert(key, std::move(st.c));
                        continue;
                    }
                    st.kleft[a] -= 1;
                    for (int b = 0; b < n; ++b) {
                        if (st.se[b] == 0 || comm[b][a].is_zero()) continue;
                        State der = st;
                        der.se[b] -= 1;
                        K mult = comm[b][a] * K(static_cast<long>(st.se[b]));
                        der.c = der.c * (-mult); // [k_a, s_b] = -[s_b, k_a]
                        work.push_back(std::move(der));
                    }
                    st.kpassed[a] += 1;
                    work.push_back(std::move(st));
                }
            }
        return result;
    }

    E commutator(const E& x, const E& y) const { return mul(x, y) - mul(y, x); }

    /// Graded commutator with Koszul signs from form degrees.
    E graded_commutator(const E& x, const E& y) const {
        E x0, x1, y0, y1;
        for (auto& [k, c] : x.t) ((form6_degree(k.form) & 1) ? x1 : x0).t[k] = c;
        for (auto& [k, c] : y.t) ((form6_degree(k.form) & 1) ? y1 : y0).t[k] = c;
        E r = mul(x, y);
        r -= mul(y0, x);
        r -= mul(y1, x0);
        r += mul(y1, x1);
        return r;
    }

    E pow(const E& x, int e) const {
        E r = E::unit();
        for (int i = 0; i < e; ++i) r = mul(r, x);
        return r;
    }
};

/// 3-vector of elements with order-preserving combinators.
template <class K>
struct WVec {
    std::array<WExpr<K>, 3> c;
    WExpr<K>& operator[](int i) { return c[i]; }
    const WExpr<K>& operator[](int i) const { return c[i]; }
    friend WVec operator+(const WVec& a, const WVec& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
    }
    friend WVec operator-(const WVec& a, const WVec& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]};
    }
    WVec operator-() const { return {-c[0], -c[1], -c[2]}; }
};

template <class K>
WExpr<K> wdot(const WeylAlg<K>& A, const WVec<K>& a, const WVec<K>& b) {
    WExpr<K> r;
    for (int i = 0; i < 3; ++i) r += A.mul(a[i], b[i]);
    return r;
}

template <class K>
WVec<K> wcross(const WeylAlg<K>& A, const WVec<K>& a, const WVec<K>& b) {
    WVec<K> r;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        r[i] = A.mul(a[j], b[k]) - A.mul(a[k], b[j]);
    }
    return r;
}

} // namespace fedosphere
