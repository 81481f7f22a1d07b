#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "askeyshift/rational_function.hpp"

namespace askey {

// One term coeff(v) * [v -> scale*v+offset] * (d/dv)^deriv acting right to
// left: differentiate deriv times, substitute, then multiply by coeff.
struct OperatorTerm {
    RationalFunction coeff;
    Substitution sub;
    int deriv = 0;
};

// Finite sum of shift/differential terms over one coordinate. Represents
// every operator in the catalog: the similarity transformed Hamiltonians,
// the classic forward/backward shift operators and the new-type ones.
class ShiftOperator {
public:
    explicit ShiftOperator(Var v) : var_(v) {}

    static ShiftOperator identity(Var v) {
        ShiftOperator o(v);
        o.add_term(RationalFunction::constant(v, GaussianRational(1)), Substitution::identity(), 0);
        return o;
    }
    static ShiftOperator zero(Var v) { return ShiftOperator(v); }

    Var var() const { return var_; }
    const std::vector<OperatorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(RationalFunction coeff, Substitution sub, int deriv = 0) {
        require_same_var(var_, coeff.var(), "ShiftOperator::add_term");
        if (coeff.is_zero()) return;
        for (auto& t : terms_) {
            if (t.deriv == deriv && t.sub == sub) {
                t.coeff += coeff;
                prune();
                return;
            }
        }
        terms_.push_back({std::move(coeff), std::move(sub), deriv});
        sort_terms();
    }

    int max_deriv_order() const {
        int m = 0;
        for (auto& t : terms_) m = std::max(m, t.deriv);
        return m;
    }

    int distinct_substitution_count() const {
        std::vector<Substitution> subs;
        for (auto& t : terms_)
            if (std::find(subs.begin(), subs.end(), t.sub) == subs.end()) subs.push_back(t.sub);
        return static_cast<int>(subs.size());
    }

    // Linear action: sum_i coeff_i * (d^{k_i} f) ∘ sub_i, exact.
    RationalFunction apply(const RationalFunction& f) const {
        require_same_var(var_, f.var(), "ShiftOperator::apply");
        RationalFunction acc(var_);
        for (auto& t : terms_) {
            RationalFunction g = f;
            for (int j = 0; j < t.deriv; ++j) g = g.derivative();
            acc += t.coeff * g.substitute(t.sub);
        }
        return acc;
    }

    ShiftOperator operator-() const {
        ShiftOperator r(var_);
        for (auto& t : terms_) r.terms_.push_back({-t.coeff, t.sub, t.deriv});
        return r;
    }

    friend ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) {
        require_same_var(a.var_, b.var_, "ShiftOperator::operator+");
        ShiftOperator r = a;
        for (auto& t : b.terms_) r.add_term(t.coeff, t.sub, t.deriv);
        return r;
    }
    friend ShiftOperator operator-(const ShiftOperator& a, const ShiftOperator& b) {
        return a + (-b);
    }

    ShiftOperator scaled(const GaussianRational& c) const {
        ShiftOperator r(var_);
        if (c.is_zero()) return r;
        for (auto& t : terms_) r.terms_.push_back({t.coeff.scaled(c), t.sub, t.deriv});
        return r;
    }

    ShiftOperator plus_constant(const GaussianRational& c) const {
        ShiftOperator r = *this;
        r.add_term(RationalFunction::constant(var_, c), Substitution::identity(), 0);
        return r;
    }

    // Operator product a∘b: apply b first. Substitutions are affine, so the
    // chain rule only contributes constant scale factors; derivatives are
    // pushed through coefficients by Leibniz. Total order per term <= 2.
    friend ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) {
        require_same_var(a.var_, b.var_, "ShiftOperator::operator*");
        ShiftOperator r(a.var_);
        for (auto& ta : a.terms_) {
            for (auto& tb : b.terms_) {
                if (ta.deriv + tb.deriv > 2)
                    throw ConstraintError("ShiftOperator: product term exceeds derivative order 2");
                Substitution s = compose(tb.sub, ta.sub);
                const GaussianRational& sc = tb.sub.scale();
                if (ta.deriv == 0) {
                    r.add_term(ta.coeff * tb.coeff.substitute(ta.sub), s, tb.deriv);
                } else if (ta.deriv == 1) {
                    r.add_term(ta.coeff * tb.coeff.derivative().substitute(ta.sub), s, tb.deriv);
                    r.add_term(ta.coeff * tb.coeff.substitute(ta.sub).scaled(sc), s, tb.deriv + 1);
                } else { // ta.deriv == 2
                    r.add_term(ta.coeff * tb.coeff.derivative().derivative().substitute(ta.sub), s,
                               tb.deriv);
                    r.add_term(
                        ta.coeff * tb.coeff.derivative().substitute(ta.sub).scaled(sc * GaussianRational(2)),
                        s, tb.deriv + 1);
                    r.add_term(ta.coeff * tb.coeff.substitute(ta.sub).scaled(sc * sc), s, tb.deriv + 2);
                }
            }
        }
        return r;
    }

    // Replace every coefficient c(v) by c(s(v)), keeping shift parts: the
    // |_{x -> x-s} and |_{eta -> r^{-1} eta} notation of the source relations.
    ShiftOperator substitute_coefficients(const Substitution& s) const {
        ShiftOperator r(var_);
        for (auto& t : terms_) r.add_term(t.coeff.substitute(s), t.sub, t.deriv);
        return r;
    }

    std::string to_string(const char* v = "v") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << t.coeff.to_string() << ")";
            if (!t.sub.is_identity()) os << "*[" << t.sub.to_string(v) << "]";
            if (t.deriv == 1) os << "*(d/d" << v << ")";
            if (t.deriv >= 2) os << "*(d/d" << v << ")^" << t.deriv;
        }
        return os.str();
    }

private:
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [](const OperatorTerm& a, const OperatorTerm& b) {
            if (a.deriv != b.deriv) return a.deriv < b.deriv;
            return compare(a.sub, b.sub) < 0;
        });
    }
    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const OperatorTerm& t) { return t.coeff.is_zero(); }),
                     terms_.end());
    }

    Var var_;
    std::vector<OperatorTerm> terms_;
};

// Exact operator-identity test on the monomial basis v^k, k = -K..K.
// Distinct affine substitutions and derivative orders act with distinct
// eigenprofiles on monomials, so K >= max deriv order + number of distinct
// substitutions separates all coefficients; that bound is enforced here.
inline bool operators_equal(const ShiftOperator& a, const ShiftOperator& b, int K) {
    require_same_var(a.var(), b.var(), "operators_equal");
    int bound = std::max(a.max_deriv_order(), b.max_deriv_order()) +
                std::max(a.distinct_substitution_count(), b.distinct_substitution_count());
    if (K < bound) throw ConstraintError("operators_equal: K below sufficiency bound");
    for (int k = -K; k <= K; ++k) {
        RationalFunction m = RationalFunction::monomial(a.var(), k);
        if (a.apply(m) != b.apply(m)) return false;
    }
    return true;
}

// First monomial where the two operators disagree, for failure witnesses.
inline RationalFunction operator_difference_witness(const ShiftOperator& a, const ShiftOperator& b,
                                                    int K) {
    for (int k = -K; k <= K; ++k) {
        RationalFunction m = RationalFunction::monomial(a.var(), k);
        RationalFunction d = a.apply(m) - b.apply(m);
        if (!d.is_zero()) return d;
    }
    return RationalFunction(a.var());
}

} // namespace askey
