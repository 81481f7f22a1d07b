#pragma once

#include <map>
#include <sstream>
#include <string>

#include "askeyshift/gaussian_rational.hpp"

namespace askey {

// Formal coordinate attached to polynomials, rational functions and operators.
//   Eta : sinusoidal coordinate (oQM and rdQMJ systems)
//   X   : quantum mechanical coordinate (non-q idQM, non-q rdQM)
//   Z   : z = e^{ix} (q-idQM systems)
//   T   : t = q^x   (q-rdQM systems)
enum class Var : unsigned char { Eta, X, Z, T };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::Eta: return "eta";
        case Var::X: return "x";
        case Var::Z: return "z";
        case Var::T: return "t";
    }
    return "?";
}

inline void require_same_var(Var a, Var b, const char* where) {
    if (a != b)
        throw VariableMismatch(std::string(where) + ": variable mismatch (" + var_name(a) + " vs " +
                               var_name(b) + ")");
}

// Laurent polynomial over Q(i): finitely many integer exponents, possibly
// negative. Zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(Var v) : var_(v) {}

    static LaurentPoly constant(Var v, const GaussianRational& c) {
        LaurentPoly p(v);
        p.add_to_coeff(0, c);
        return p;
    }
    static LaurentPoly monomial(Var v, long k, const GaussianRational& c = GaussianRational(1)) {
        LaurentPoly p(v);
        p.add_to_coeff(k, c);
        return p;
    }
    static LaurentPoly variable(Var v) { return monomial(v, 1); }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    // Exponent span; both require a nonzero polynomial.
    long min_exp() const { return coeffs_.begin()->first; }
    long max_exp() const { return coeffs_.rbegin()->first; }

    GaussianRational coeff(long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? GaussianRational(0) : it->second;
    }
    const std::map<long, GaussianRational>& coeffs() const { return coeffs_; }

    void add_to_coeff(long k, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(var_);
        for (auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same_var(var_, o.var_, "LaurentPoly::operator+");
        for (auto& [k, c] : o.coeffs_) add_to_coeff(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same_var(var_, o.var_, "LaurentPoly::operator-");
        for (auto& [k, c] : o.coeffs_) add_to_coeff(k, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_var(a.var_, b.var_, "LaurentPoly::operator*");
        LaurentPoly r(a.var_);
        for (auto& [ka, ca] : a.coeffs_)
            for (auto& [kb, cb] : b.coeffs_) r.add_to_coeff(ka + kb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const GaussianRational& c) const {
        LaurentPoly r(var_);
        if (c.is_zero()) return r;
        for (auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
        return r;
    }

    LaurentPoly shifted_exponents(long d) const {
        LaurentPoly r(var_);
        for (auto& [k, v] : coeffs_) r.coeffs_.emplace(k + d, v);
        return r;
    }

    // Coefficient-wise complex conjugation.
    LaurentPoly conj_coeffs() const {
        LaurentPoly r(var_);
        for (auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v.conj());
        return r;
    }

    // v -> v^{-1}
    LaurentPoly invert_variable() const {
        LaurentPoly r(var_);
        for (auto& [k, v] : coeffs_) r.coeffs_.emplace(-k, v);
        return r;
    }

    // v -> a*v (pure scaling keeps Laurent terms Laurent): v^k -> a^k v^k.
    LaurentPoly scale_variable(const GaussianRational& a) const {
        LaurentPoly r(var_);
        for (auto& [k, v] : coeffs_) {
            GaussianRational c = v * a.pow(k);
            if (!c.is_zero()) r.coeffs_.emplace(k, c);
        }
        return r;
    }

    LaurentPoly derivative() const {
        LaurentPoly r(var_);
        for (auto& [k, v] : coeffs_)
            if (k != 0) r.add_to_coeff(k - 1, v * GaussianRational(k));
        return r;
    }

    GaussianRational evaluate(const GaussianRational& point) const {
        GaussianRational acc(0);
        for (auto& [k, v] : coeffs_) acc += v * point.pow(k);
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Sparse exponent -> coefficient list, e.g. "{-1: 1/2, 2: 1+i}".
    std::string to_string() const {
        if (coeffs_.empty()) return "{}";
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (auto& [k, v] : coeffs_) {
            if (!first) os << ", ";
            first = false;
            os << k << ": " << v.to_string();
        }
        os << "}";
        return os.str();
    }

private:
    Var var_;
    std::map<long, GaussianRational> coeffs_;
};

} // namespace askey
