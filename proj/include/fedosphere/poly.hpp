#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fedosphere/errors.hpp"
#include "fedosphere/modspec.hpp"

namespace fedosphere {

/// Sparse multivariate polynomial over a commutative coefficient ring K.
/// Terms are kept sorted by monomial (lex, descending), zero coefficients pruned,
/// so the representation is canonical whenever K's is.
template <class K, int NV>
struct Poly {
    using Mono = std::array<uint16_t, NV>;
    using Term = std::pair<Mono, K>;
    std::vector<Term> t;

    Poly() = default;
    explicit Poly(K c) {
        if (!c.is_zero()) t.push_back({zero_mono(), std::move(c)});
    }
    explicit Poly(long n) : Poly(K(n)) {}

    static Mono zero_mono() {
        Mono m{};
        m.fill(0);
        return m;
    }
    static bool mono_less(const Mono& a, const Mono& b) { return a < b; }

    static Poly var(int v, int e = 1) {
        Poly p;
        Mono m = zero_mono();
        m[v] = static_cast<uint16_t>(e);
        p.t.push_back({m, K(1)});
        return p;
    }
    static Poly mono_term(Mono m, K c) {
        Poly p;
        if (!c.is_zero()) p.t.push_back({std::move(m), std::move(c)});
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const {
        return t.empty() || (t.size() == 1 && t[0].first == zero_mono());
    }
    K constant_value() const {
        if (t.empty()) return K(0);
        return t.back().first == zero_mono() ? t.back().second : K(0);
    }
    bool is_one() const { return t.size() == 1 && t[0].first == zero_mono() && t[0].second.is_one(); }

    const Term& lead() const { return t.front(); } // valid only when !is_zero()

    int degree(int v) const {
        int d = 0;
        for (auto& [m, c] : t) d = std::max<int>(d, m[v]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : t) {
            int s = 0;
            for (int i = 0; i < NV; ++i) s += m[i];
            d = std::max(d, s);
        }
        return d;
    }

    void normalize() {
        std::sort(t.begin(), t.end(),
                  [](const Term& a, const Term& b) { return b.first < a.first; });
        std::size_t w = 0;
        for (std::size_t i = 0; i < t.size();) {
            Mono m = t[i].first;
            K c = std::move(t[i].second);
            ++i;
            while (i < t.size() && t[i].first == m) {
                c += t[i].second;
                ++i;
            }
            if (!c.is_zero()) t[w++] = {m, std::move(c)};
        }
        t.resize(w);
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.t.reserve(a.t.size() + b.t.size());
        std::size_t i = 0, j = 0;
        while (i < a.t.size() && j < b.t.size()) {
            if (a.t[i].first == b.t[j].first) {
                K c = a.t[i].second + b.t[j].second;
                if (!c.is_zero()) r.t.push_back({a.t[i].first, std::move(c)});
                ++i, ++j;
            } else if (b.t[j].first < a.t[i].first) {
                r.t.push_back(a.t[i++]);
            } else {
                r.t.push_back(b.t[j++]);
            }
        }
        for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
        for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.t.reserve(a.t.size() * b.t.size());
        for (auto& [ma, ca] : a.t)
            for (auto& [mb, cb] : b.t) {
                K c = ca * cb;
                if (c.is_zero()) continue;
                Mono m;
                for (int v = 0; v < NV; ++v) m[v] = static_cast<uint16_t>(ma[v] + mb[v]);
                r.t.push_back({m, std::move(c)});
            }
        r.normalize();
        return r;
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const {
        Poly r;
        if (c.is_zero()) return r;
        r.t.reserve(t.size());
        for (auto& [m, k] : t) {
            K v = k * c;
            if (!v.is_zero()) r.t.push_back({m, std::move(v)});
        }
        return r;
    }

    bool operator==(const Poly& o) const { return t == o.t; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return t < o.t; } // canonical order for factor lists

    /// Partial derivative in variable v (coefficients treated as constants).
    Poly derivative(int v) const {
        Poly r;
        for (auto& [m, c] : t) {
            if (m[v] == 0) continue;
            Mono n = m;
            n[v] -= 1;
            r.t.push_back({n, c * K(static_cast<long>(m[v]))});
        }
        r.normalize();
        return r;
    }

    /// Applies fn to every coefficient; fn may land in another ring.
    template <class F>
    auto map_coeffs(F&& fn) const {
        using K2 = decltype(fn(std::declval<const K&>()));
        Poly<K2, NV> r;
        for (auto& [m, c] : t) {
            K2 c2 = fn(c);
            if (!c2.is_zero()) r.t.push_back({m, std::move(c2)});
        }
        r.normalize();
        return r;
    }

    /// Full substitution of all variables by ring values.
    K eval(const std::array<K, NV>& vals) const {
        K acc(0);
        for (auto& [m, c] : t) {
            K term = c;
            for (int v = 0; v < NV; ++v)
                for (int e = 0; e < m[v]; ++e) term *= vals[v];
            acc += term;
        }
        return acc;
    }

    static bool mono_divides(const Mono& d, const Mono& m) {
        for (int v = 0; v < NV; ++v)
            if (m[v] < d[v]) return false;
        return true;
    }

    /// Cheap necessary conditions for exact divisibility by b; no copies.
    /// Lex is a monomial order, so both the leading and the trailing monomial
    /// of a product factor as products of leading/trailing monomials.
    bool divisibility_filter(const Poly& b) const {
        if (is_zero()) return true;
        if (!mono_divides(b.t.front().first, t.front().first)) return false;
        if (!mono_divides(b.t.back().first, t.back().first)) return false;
        return true;
    }

    /// Univariate image in variable v under the modular specialization;
    /// nullopt when any coefficient is inconclusive mod p.
    std::optional<std::vector<uint64_t>> modular_image(int v) const {
        static const uint64_t var_res[8] = {7919, 104729, 611953, 7368787,
                                            15485863, 2038074743, 32452843, 49979687};
        std::vector<uint64_t> img;
        for (auto& [m, c] : t) {
            auto cr = modspec_eval(c);
            if (!cr) return std::nullopt;
            uint64_t val = *cr;
            for (int w = 0; w < NV; ++w) {
                if (w == v || m[w] == 0) continue;
                val = modspec::mul(val, modspec::pow(var_res[w], m[w]));
            }
            if (img.size() <= m[v]) img.resize(m[v] + 1, 0);
            img[m[v]] = modspec::add(img[m[v]], val);
        }
        while (!img.empty() && img.back() == 0) img.pop_back();
        return img;
    }

    /// Sound modular rejection: false means b certainly does not divide *this.
    bool modular_divisible(const Poly& b) const {
        int v = 0;
        for (int w = 0; w < NV; ++w)
            if (b.degree(w) > 0) {
                v = w;
                break;
            }
        auto bi = b.modular_image(v);
        if (!bi || bi->empty()) return true; // inconclusive
        auto ai = modular_image(v);
        if (!ai || ai->empty()) return true; // inconclusive (unlucky cancellation)
        return modspec::divides_univariate(*ai, *bi);
    }

    /// Exact division: returns quotient iff b divides *this exactly.
    std::optional<Poly> divide_exact(const Poly& b) const {
        if (b.is_zero()) throw DivisionByZero();
        if (is_zero()) return Poly();
        if (!divisibility_filter(b)) return std::nullopt;
        if (!modular_divisible(b)) return std::nullopt;
        Poly rem = *this, q;
        const Mono& lm = b.lead().first;
        const K& lc = b.lead().second;
        K lcinv = lc.inv();
        while (!rem.is_zero()) {
            const Mono& rm = rem.lead().first;
            if (!mono_divides(lm, rm)) return std::nullopt;
            Mono d;
            for (int v = 0; v < NV; ++v) d[v] = static_cast<uint16_t>(rm[v] - lm[v]);
            K qc = rem.lead().second * lcinv;
            q.t.push_back({d, qc});
            // rem -= qc * x^d * b, single merge pass
            Poly sub;
            sub.t.reserve(b.t.size());
            for (auto& [mb, cb] : b.t) {
                Mono m;
                for (int v = 0; v < NV; ++v) m[v] = static_cast<uint16_t>(mb[v] + d[v]);
                K c = cb * qc;
                if (!c.is_zero()) sub.t.push_back({m, -c});
            }
            rem = rem + sub;
        }
        q.normalize();
        return q;
    }
};

} // namespace fedosphere
