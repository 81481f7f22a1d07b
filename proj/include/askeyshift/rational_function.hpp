#pragma once

#include <cassert>
#include <string>
#include <utility>

#include "askeyshift/laurent.hpp"
#include "askeyshift/substitution.hpp"

namespace askey {

namespace detail {

// Ordinary-polynomial long division (inputs must have min_exp >= 0).
inline std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    assert(!b.is_zero());
    LaurentPoly q(a.var()), r = a;
    long db = b.max_exp();
    GaussianRational lb = b.coeff(db);
    while (!r.is_zero() && r.max_exp() >= db) {
        long k = r.max_exp() - db;
        GaussianRational c = r.coeff(r.max_exp()) / lb;
        q.add_to_coeff(k, c);
        r -= b.shifted_exponents(k).scaled(c);
    }
    return {q, r};
}

inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    // Remainders are rescaled monic every step to keep coefficients small.
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        if (!r.is_zero()) r = r.scaled(r.coeff(r.max_exp()).inverse());
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.coeff(a.max_exp()).inverse()); // monic
}

inline LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    assert(r.is_zero());
    return q;
}

} // namespace detail

// Ratio of Laurent polynomials in canonical form:
//   - den is an ordinary polynomial (min_exp == 0) with nonzero constant term,
//   - den is monic in its highest term,
//   - gcd(num restricted to ordinary part, den) = 1.
// Canonical forms are equal iff the functions are equal, so operator== is an
// exact identity test.
class RationalFunction {
public:
    explicit RationalFunction(Var v)
        : num_(v), den_(LaurentPoly::constant(v, GaussianRational(1))) {}

    RationalFunction(LaurentPoly num) // NOLINT: implicit by design
        : num_(std::move(num)), den_(LaurentPoly::constant(num_.var(), GaussianRational(1))) {
        canonicalize();
    }

    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        require_same_var(num_.var(), den_.var(), "RationalFunction");
        if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
        canonicalize();
    }

    static RationalFunction constant(Var v, const GaussianRational& c) {
        return RationalFunction(LaurentPoly::constant(v, c));
    }
    static RationalFunction monomial(Var v, long k, const GaussianRational& c = GaussianRational(1)) {
        return RationalFunction(LaurentPoly::monomial(v, k, c));
    }
    static RationalFunction variable(Var v) { return monomial(v, 1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Requires is_constant().
    GaussianRational constant_value() const {
        assert(den_.is_constant());
        if (num_.is_zero()) return GaussianRational(0);
        assert(num_.is_constant());
        return num_.coeff(0) / den_.coeff(0);
    }

    RationalFunction operator-() const { return raw(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        require_same_var(a.var(), b.var(), "RationalFunction::operator+");
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        require_same_var(a.var(), b.var(), "RationalFunction::operator-");
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        require_same_var(a.var(), b.var(), "RationalFunction::operator*");
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        require_same_var(a.var(), b.var(), "RationalFunction::operator/");
        if (b.is_zero()) throw DivisionByZero("RationalFunction: division by zero function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction scaled(const GaussianRational& c) const {
        if (c.is_zero()) return RationalFunction(var()) - RationalFunction(var()); // zero
        return raw(num_.scaled(c), den_);
    }

    // f(scale*v + offset), exact. Pure scalings act termwise on Laurent
    // exponents; a genuine offset goes through polynomial composition.
    RationalFunction substitute(const Substitution& s) const {
        if (s.is_identity()) return *this;
        if (s.is_pure_scale())
            return raw_canonical(num_.scale_variable(s.scale()), den_.scale_variable(s.scale()));
        return substitute_affine(num_, s) / substitute_affine(den_, s);
    }

    // Exact quotient-rule derivative with respect to the coordinate.
    RationalFunction derivative() const {
        if (den_.is_constant()) return raw(num_.derivative(), den_);
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    // *-operation: conjugate all coefficients; on z = e^{ix} additionally
    // invert the variable, since (c e^{ix})* = c* e^{-ix}.
    RationalFunction star() const {
        if (var() == Var::Z)
            return RationalFunction(num_.conj_coeffs().invert_variable(),
                                    den_.conj_coeffs().invert_variable());
        return raw_canonical(num_.conj_coeffs(), den_.conj_coeffs());
    }

    GaussianRational evaluate(const GaussianRational& point) const {
        GaussianRational d = den_.evaluate(point);
        if (d.is_zero()) throw DivisionByZero("RationalFunction::evaluate: pole at " + point.to_string());
        return num_.evaluate(point) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_constant() && !den_.is_zero() && den_.coeff(0).is_one()) return num_.to_string();
        return num_.to_string() + " / " + den_.to_string();
    }

private:
    // Trusted constructor: den already canonical, gcd already 1.
    static RationalFunction raw(LaurentPoly num, LaurentPoly den) {
        RationalFunction f(num.var());
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }
    static RationalFunction raw_canonical(LaurentPoly num, LaurentPoly den) {
        return RationalFunction(std::move(num), std::move(den));
    }

    static RationalFunction substitute_affine(const LaurentPoly& p, const Substitution& s) {
        Var v = p.var();
        if (p.is_zero()) return RationalFunction(v) - RationalFunction(v);
        long m = p.min_exp() < 0 ? -p.min_exp() : 0;
        // p = v^{-m} * poly; evaluate poly at (s.scale*v + s.offset) by Horner.
        LaurentPoly poly = p.shifted_exponents(m);
        LaurentPoly lin(v);
        lin.add_to_coeff(1, s.scale());
        lin.add_to_coeff(0, s.offset());
        LaurentPoly acc(v);
        for (long k = poly.max_exp(); k >= 0; --k) {
            acc = acc * lin;
            acc.add_to_coeff(0, poly.coeff(k));
        }
        if (m == 0) return RationalFunction(acc);
        LaurentPoly denpow = LaurentPoly::constant(v, GaussianRational(1));
        for (long j = 0; j < m; ++j) denpow = denpow * lin;
        return {acc, denpow};
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(var(), GaussianRational(1));
            return;
        }
        // Push all pure v-powers into the numerator.
        long dnum = num_.min_exp();
        long dden = den_.min_exp();
        num_ = num_.shifted_exponents(-dnum);
        den_ = den_.shifted_exponents(-dden);
        long net = dnum - dden;
        LaurentPoly g = detail::poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = detail::poly_exact_div(num_, g);
            den_ = detail::poly_exact_div(den_, g);
        }
        GaussianRational lead = den_.coeff(den_.max_exp());
        if (!lead.is_one()) {
            GaussianRational inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
        if (net != 0) num_ = num_.shifted_exponents(net);
    }

    LaurentPoly num_, den_;
};

// Exact identity test: true iff num_f*den_g - num_g*den_f == 0. With both
// sides canonical this coincides with ==, but the cross-multiplied difference
// is what failure witnesses serialize.
inline bool normalize_equal(const RationalFunction& f, const RationalFunction& g) {
    require_same_var(f.var(), g.var(), "normalize_equal");
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

// The nonzero cross-multiplied difference polynomial (witness payload).
inline LaurentPoly difference_witness(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() - g.num() * f.den();
}

} // namespace askey
