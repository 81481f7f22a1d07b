#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "askeyshift/errors.hpp"

namespace askey {

using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; every Rational built
// from a raw numerator/denominator pair must pass through here.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Element of Q(i): re + im*i with arbitrary-precision rational parts.
// mpq_class keeps every part in lowest terms with a positive denominator,
// so values are always canonical and equality is plain field equality.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {} // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2 as a rational; zero iff z == 0.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DivisionByZero("GaussianRational: division by zero");
        Rational n2 = o.norm2();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    GaussianRational inverse() const {
        GaussianRational one(1);
        one /= *this;
        return one;
    }

    // Integer power; negative exponents require a nonzero base.
    GaussianRational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussianRational acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order (real part first), used only as a container key.
    friend int compare(const GaussianRational& a, const GaussianRational& b) {
        int c = mpq_cmp(a.re_.get_mpq_t(), b.re_.get_mpq_t());
        if (c != 0) return c;
        return mpq_cmp(a.im_.get_mpq_t(), b.im_.get_mpq_t());
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) { return compare(a, b) < 0; }

    // Canonical text form "p/q+r/s*i" used verbatim in reports.
    std::string to_string() const {
        if (im_ == 0) return re_.get_str();
        std::string out;
        if (re_ != 0) out += re_.get_str();
        if (im_ > 0 && re_ != 0) out += "+";
        if (im_ == -1) {
            out += "-";
        } else if (im_ != 1) {
            out += im_.get_str();
            out += "*";
        }
        out += "i";
        return out;
    }

private:
    Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

// q-Pochhammer symbol (a; q)_k = prod_{j=0}^{k-1} (1 - a q^j).
inline GaussianRational qpochhammer(const GaussianRational& a, const GaussianRational& q, int k) {
    GaussianRational acc(1), aq = a;
    for (int j = 0; j < k; ++j) {
        acc *= (GaussianRational(1) - aq);
        aq *= q;
    }
    return acc;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1).
inline GaussianRational pochhammer(const GaussianRational& a, int k) {
    GaussianRational acc(1);
    for (int j = 0; j < k; ++j) acc *= (a + GaussianRational(j));
    return acc;
}

inline GaussianRational factorial(int n) {
    GaussianRational acc(1);
    for (int j = 2; j <= n; ++j) acc *= GaussianRational(j);
    return acc;
}

} // namespace askey
