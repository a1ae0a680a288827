#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fedosphere/rational.hpp"

namespace fedosphere {

// Modular specialization used as a fast divisibility rejector: a ring
// homomorphism into F_p[t] (one polynomial variable kept symbolic, everything
// else evaluated at fixed residues). If f divides g then the image of f
// divides the image of g, so a failed image division soundly rejects the
// expensive exact division. Inconclusive cases (denominator hits p, missing
// square roots) fall back to the real division.

namespace modspec {

constexpr uint64_t P = 2147483629ULL; // 2^31 - 19, = 1 mod 4

inline uint64_t mul(uint64_t a, uint64_t b) { return (a * b) % P; }
inline uint64_t add(uint64_t a, uint64_t b) { return (a + b) % P; }
inline uint64_t sub(uint64_t a, uint64_t b) { return (a + P - b) % P; }

inline uint64_t pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

inline uint64_t inv(uint64_t a) { return pow(a, P - 2); }

/// sqrt(-1) mod P, fixed at first use.
inline uint64_t i_residue() {
    static const uint64_t i = [] {
        for (uint64_t a = 2;; ++a) {
            uint64_t z = pow(a, (P - 1) / 4);
            if (mul(z, z) == P - 1) return z;
        }
    }();
    return i;
}

inline std::optional<uint64_t> sqrt_mod(uint64_t a) {
    if (a == 0) return 0;
    if (pow(a, (P - 1) / 2) != 1) return std::nullopt;
    // P = 1 mod 4: Tonelli-Shanks
    uint64_t q = P - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    uint64_t zq = 2;
    while (pow(zq, (P - 1) / 2) != P - 1) ++zq;
    uint64_t m = s, c = pow(zq, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        uint64_t t2 = t;
        uint64_t i = 0;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
            if (i == m) return std::nullopt;
        }
        uint64_t b = pow(c, 1ULL << (m - i - 1));
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

inline std::optional<uint64_t> eval_bigrat(const BigRat& q) {
    // floor-division remainders are already the nonnegative residues
    uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), P);
    if (d == 0) return std::nullopt;
    uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), P);
    return mul(n, inv(d));
}

/// Univariate divisibility over F_p; vectors indexed by degree, trimmed.
inline bool divides_univariate(std::vector<uint64_t> rem,
                               const std::vector<uint64_t>& den) {
    if (den.empty() || den.back() == 0) return false;
    if (rem.empty()) return true;
    if (rem.size() < den.size()) return false;
    uint64_t lead_inv = inv(den.back());
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        uint64_t c = rem[i];
        if (c == 0) continue;
        uint64_t f = mul(c, lead_inv);
        long off = i - (static_cast<long>(den.size()) - 1);
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[off + j] = sub(rem[off + j], mul(f, den[j]));
    }
    for (std::size_t j = 0; j + 1 < den.size(); ++j)
        if (rem[j] != 0) return false;
    return true;
}

} // namespace modspec

/// Residue of a CRat under the specialization; nullopt when inconclusive.
inline std::optional<uint64_t> modspec_eval(const CRat& c) {
    auto re = modspec::eval_bigrat(c.re);
    if (!re) return std::nullopt;
    if (c.im == 0) return re;
    auto im = modspec::eval_bigrat(c.im);
    if (!im) return std::nullopt;
    return modspec::add(*re, modspec::mul(*im, modspec::i_residue()));
}

} // namespace fedosphere
