#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "askeyshift/operators.hpp"

using namespace askey;

namespace {

GaussianRational gr(long nr, long dr, long ni = 0, long di = 1) {
    return {Rational(nr, dr), Rational(ni, di)};
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long seed) : eng(seed) {}
    long small(long lo, long hi) {
        return static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    }
    GaussianRational scalar() { return gr(small(-5, 5), small(1, 4), small(-3, 3), 3); }
    GaussianRational nonzero_scalar() {
        for (;;) {
            GaussianRational v = scalar();
            if (!v.is_zero()) return v;
        }
    }
    RationalFunction ratfun(Var v) {
        LaurentPoly num(v), den(v);
        for (long k = -2; k <= 2; ++k)
            if (small(0, 1)) num.add_to_coeff(k, scalar());
        if (num.is_zero()) num.add_to_coeff(0, nonzero_scalar());
        den.add_to_coeff(0, 1);
        if (small(0, 1)) den.add_to_coeff(1, scalar());
        return {num, den};
    }
    // Pure shift operator (derivative-free), rdQM style.
    ShiftOperator shift_op(Var v, int nterms) {
        ShiftOperator o(v);
        for (int j = 0; j < nterms; ++j) {
            Substitution s(GaussianRational(1), GaussianRational(small(-2, 2)));
            o.add_term(ratfun(v), s, 0);
        }
        return o;
    }
};

ShiftOperator toy_hamiltonian(Var v, const RationalFunction& B, const RationalFunction& D,
                              const Substitution& fwd, const Substitution& bwd) {
    ShiftOperator o(v);
    o.add_term(B, Substitution::identity(), 0);
    o.add_term(-B, fwd, 0);
    o.add_term(D, Substitution::identity(), 0);
    o.add_term(-D, bwd, 0);
    return o;
}

} // namespace

TEST_CASE("difference Hamiltonian annihilates constants") {
    Rng rng(5);
    Substitution fwd = Substitution::shift(GaussianRational(1));
    Substitution bwd = Substitution::shift(GaussianRational(-1));
    for (int it = 0; it < 20; ++it) {
        ShiftOperator h = toy_hamiltonian(Var::X, rng.ratfun(Var::X), rng.ratfun(Var::X), fwd, bwd);
        RationalFunction one = RationalFunction::constant(Var::X, GaussianRational(1));
        CHECK(h.apply(one).is_zero());
    }
}

TEST_CASE("apply is linear") {
    Rng rng(6);
    for (int it = 0; it < 25; ++it) {
        ShiftOperator o = rng.shift_op(Var::X, 3);
        RationalFunction f = rng.ratfun(Var::X), g = rng.ratfun(Var::X);
        GaussianRational c = rng.scalar();
        CHECK(o.apply(f + g) == o.apply(f) + o.apply(g));
        CHECK(o.apply(f.scaled(c)) == o.apply(f).scaled(c));
    }
}

TEST_CASE("composition matches nested application on monomials up to degree 12") {
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
        ShiftOperator a = rng.shift_op(Var::X, 2);
        ShiftOperator b = rng.shift_op(Var::X, 2);
        ShiftOperator ab = a * b;
        for (int k = -12; k <= 12; ++k) {
            RationalFunction m = RationalFunction::monomial(Var::X, k);
            CHECK(ab.apply(m) == a.apply(b.apply(m)));
        }
    }
}

TEST_CASE("composition with derivative terms uses the affine chain rule") {
    Rng rng(8);
    // a = c1(v) [v->2v+1] d/dv, b = c2(v) [v->v-1] d/dv
    for (int it = 0; it < 10; ++it) {
        ShiftOperator a(Var::Eta), b(Var::Eta);
        a.add_term(rng.ratfun(Var::Eta), Substitution(GaussianRational(2), GaussianRational(1)), 1);
        b.add_term(rng.ratfun(Var::Eta), Substitution::shift(GaussianRational(-1)), 1);
        ShiftOperator ab = a * b;
        CHECK(ab.max_deriv_order() == 2);
        for (int k = 0; k <= 8; ++k) {
            RationalFunction m = RationalFunction::monomial(Var::Eta, k);
            CHECK(ab.apply(m) == a.apply(b.apply(m)));
        }
    }
}

TEST_CASE("identity composition and associativity") {
    Rng rng(9);
    for (int it = 0; it < 8; ++it) {
        ShiftOperator o = rng.shift_op(Var::T, 3);
        ShiftOperator id = ShiftOperator::identity(Var::T);
        CHECK(operators_equal(id * o, o, 12));
        CHECK(operators_equal(o * id, o, 12));
        ShiftOperator p = rng.shift_op(Var::T, 2), r = rng.shift_op(Var::T, 2);
        CHECK(operators_equal((o * p) * r, o * (p * r), 14));
    }
}

TEST_CASE("operator equality separates a constant perturbation") {
    Rng rng(10);
    ShiftOperator o = rng.shift_op(Var::X, 3);
    CHECK(operators_equal(o, o, 12));
    ShiftOperator o2 = o.plus_constant(GaussianRational(1));
    CHECK_FALSE(operators_equal(o, o2, 12));
    CHECK_THROWS_AS(operators_equal(o, o2, 1), ConstraintError);
}

TEST_CASE("coefficient substitution leaves shift parts alone") {
    // o = c(x) e^{d/dx}; o|_{x->x-1} = c(x-1) e^{d/dx}
    LaurentPoly cx(Var::X);
    cx.add_to_coeff(1, 1);
    ShiftOperator o(Var::X);
    o.add_term(RationalFunction(cx), Substitution::shift(GaussianRational(1)), 0);
    ShiftOperator shifted = o.substitute_coefficients(Substitution::shift(GaussianRational(-1)));
    REQUIRE(shifted.terms().size() == 1);
    CHECK(shifted.terms()[0].sub == Substitution::shift(GaussianRational(1)));
    LaurentPoly cxm1(Var::X);
    cxm1.add_to_coeff(0, GaussianRational(-1));
    cxm1.add_to_coeff(1, 1);
    CHECK(shifted.terms()[0].coeff == RationalFunction(cxm1));
}

TEST_CASE("second order differential operator acts exactly") {
    // H = -(1-eta^2) d^2/deta^2 on eta^3 gives -6 eta + 6 eta^3
    LaurentPoly c2(Var::Eta);
    c2.add_to_coeff(0, GaussianRational(-1));
    c2.add_to_coeff(2, 1);
    ShiftOperator h(Var::Eta);
    h.add_term(RationalFunction(c2), Substitution::identity(), 2);
    RationalFunction eta3 = RationalFunction::monomial(Var::Eta, 3);
    LaurentPoly expect(Var::Eta);
    expect.add_to_coeff(1, GaussianRational(-6));
    expect.add_to_coeff(3, GaussianRational(6));
    CHECK(h.apply(eta3) == RationalFunction(expect));
}

TEST_CASE("pretty printer renders coefficient, substitution and derivative") {
    ShiftOperator o(Var::T);
    o.add_term(RationalFunction::monomial(Var::T, -1), Substitution::scaling(gr(1, 4)), 0);
    std::string s = o.to_string("t");
    CHECK(s.find("[t->(1/4)*t]") != std::string::npos);
    CHECK(s.find("{-1: 1}") != std::string::npos);
}
