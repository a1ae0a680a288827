#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

#include "fedosphere/errors.hpp"

namespace fedosphere {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den) {
    if (den == 0) throw DivisionByZero();
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

/// Element of Q(i): re + im*i with exact rational parts.
struct CRat {
    BigRat re, im;

    CRat() : re(0), im(0) {}
    CRat(long n) : re(n), im(0) {}
    CRat(long n, long d) : re(make_rat(n, d)), im(0) {}
    explicit CRat(BigRat r) : re(std::move(r)), im(0) {}
    CRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i_unit() { return CRat(BigRat(0), BigRat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat operator-() const { return CRat(-re, -im); }
    CRat operator+(const CRat& o) const { return CRat(re + o.re, im + o.im); }
    CRat operator-(const CRat& o) const { return CRat(re - o.re, im - o.im); }
    CRat operator*(const CRat& o) const {
        if (im == 0 && o.im == 0) return CRat(re * o.re);
        return CRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    CRat inv() const {
        BigRat n = re * re + im * im;
        if (n == 0) throw DivisionByZero();
        return CRat(re / n, -im / n);
    }
    CRat operator/(const CRat& o) const { return *this * o.inv(); }

    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) { *this = *this * o; return *this; }

    bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const CRat& o) const { return !(*this == o); }
    // Total order for use as canonical-form tie-breaker, not a numeric order.
    bool operator<(const CRat& o) const {
        int c = cmp(re, o.re);
        if (c != 0) return c < 0;
        return cmp(im, o.im) < 0;
    }

    std::string str() const {
        std::string s;
        if (im == 0) return re.get_str();
        if (re != 0) s = re.get_str() + (im > 0 ? "+" : "");
        if (im == 1) s += "i";
        else if (im == -1) s += "-i";
        else s += im.get_str() + "*i";
        return s;
    }
};

inline CRat pow(const CRat& b, int e) {
    if (e < 0) return pow(b.inv(), -e);
    CRat r(1), a = b;
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

/// Exact rational square root: returns true and sets out=sqrt(q) when q is a
/// perfect square of a nonnegative rational.
inline bool rat_sqrt(const BigRat& q, BigRat& out) {
    if (q < 0) return false;
    BigInt n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = BigRat(sn) / BigRat(sd);
    return true;
}

} // namespace fedosphere
