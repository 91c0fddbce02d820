#include <doctest.h>

#include "oracles.hpp"
#include "qgen/qpolynomial.hpp"

using namespace qgen;

namespace {
const Rational half(1, 2);
const Rational two_thirds(2, 3);
}

TEST_CASE("canonical form and degree sentinel") {
    CHECK(QPolynomial().degree() == -1);
    CHECK(QPolynomial().is_zero());
    CHECK(QPolynomial::from_coeffs({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(QPolynomial(0).is_zero());
    const auto p = QPolynomial::monomial(3, Rational(2));
    CHECK(p.degree() == 3);
    CHECK(p.coeff(3) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK((p - p).is_zero());
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(QPolynomial::monomial(2), Rational(3)) == 9);
    CHECK(poly_eval(QPolynomial(), Rational(123)) == 0);
    const auto p = QPolynomial::from_coeffs({Rational(1), Rational(1), Rational(1)});
    CHECK(poly_eval(p, half) == Rational(7, 4));
}

TEST_CASE("argument substitutions") {
    const auto p = QPolynomial::from_coeffs({Rational(1), Rational(2), Rational(3)});
    const auto scaled = p.scale_argument(half);
    CHECK(scaled.coeff(0) == 1);
    CHECK(scaled.coeff(1) == 1);
    CHECK(scaled.coeff(2) == Rational(3, 4));
    const auto shifted = p.shift_argument(Rational(1));
    CHECK(poly_eval(shifted, Rational(2)) == poly_eval(p, Rational(3)));
    CHECK(poly_eval(shifted, Rational(-1, 2)) == poly_eval(p, half));
}

TEST_CASE("jackson_derivative monomial rule") {
    QContext ctx(half);
    const auto d = jackson_derivative(ctx, QPolynomial::monomial(3));
    CHECK(d == QPolynomial::monomial(2, Rational(7, 4)));  // [3]_{1/2} = 7/4
    CHECK(jackson_derivative(ctx, QPolynomial(5)).is_zero());
    QContext one(Rational(1));
    const auto p = QPolynomial::from_coeffs({Rational(0), Rational(1), Rational(1)});
    CHECK(jackson_derivative(one, p) ==
          QPolynomial::from_coeffs({Rational(1), Rational(2)}));
}

TEST_CASE("jackson_derivative equals the difference quotient (p(x)-p(qx))/((1-q)x)") {
    test::Rng rng(17);
    for (const Rational& q : {half, two_thirds}) {
        QContext ctx(q);
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = rng.poly(10);
            // (p(x) - p(qx)) must equal (1-q) x D_q p(x) as polynomials
            const auto lhs = p - p.scale_argument(q);
            const auto rhs =
                QPolynomial::monomial(1, 1 - q) * jackson_derivative(ctx, p);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("jackson_integral monomial rule") {
    QContext ctx(half);
    CHECK(jackson_integral(ctx, QPolynomial::monomial(2)) ==
          QPolynomial::monomial(3, Rational(4, 7)));
    CHECK(jackson_integral(ctx, QPolynomial()).is_zero());
    CHECK(jackson_integral(QContext(two_thirds), QPolynomial(1)) == QPolynomial::monomial(1));
}

TEST_CASE("fundamental theorem: D_q after the q-integral is the identity") {
    test::Rng rng(19);
    for (const Rational& q : {half, two_thirds, Rational(1)}) {
        QContext ctx(q);
        for (int trial = 0; trial < 70; ++trial) {
            const auto p = rng.poly(10);
            CHECK(jackson_derivative(ctx, jackson_integral(ctx, p)) == p);
        }
    }
}

TEST_CASE("q-Leibniz rule D_q(fg) = f D_q(g) + g(qx) D_q(f)") {
    test::Rng rng(23);
    for (const Rational& q : {half, two_thirds, Rational(1)}) {
        QContext ctx(q);
        for (int trial = 0; trial < 70; ++trial) {
            const auto f = rng.poly(8);
            const auto g = rng.poly(8);
            const auto lhs = jackson_derivative(ctx, f * g);
            const auto rhs =
                f * jackson_derivative(ctx, g) + g.scale_argument(q) * jackson_derivative(ctx, f);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rubin_derivative monomial parity rule") {
    QContext ctx(half);
    CHECK(rubin_derivative(ctx, QPolynomial::monomial(2)) ==
          QPolynomial::monomial(1, Rational(6)));  // q^{-2}[2]_q = 4 * 3/2
    CHECK(rubin_derivative(ctx, QPolynomial::monomial(3)) ==
          QPolynomial::monomial(2, Rational(7, 4)));
    CHECK(rubin_derivative(ctx, QPolynomial(9)).is_zero());
}

TEST_CASE("rubin parity rule matches the five-term quotient oracle") {
    for (const Rational& q : {half, two_thirds}) {
        QContext ctx(q);
        for (unsigned long l = 0; l <= 12; ++l) {
            const Rational expected = test::rubin_quotient_coeff(q, l);
            const auto d = rubin_derivative(ctx, QPolynomial::monomial(static_cast<unsigned>(l)));
            if (l == 0) {
                CHECK(expected == 0);
                CHECK(d.is_zero());
            } else {
                CHECK(d.coeff(static_cast<unsigned>(l - 1)) == expected);
            }
        }
    }
}

TEST_CASE("rubin at q = 1 is the classical derivative") {
    QContext one(Rational(1));
    const auto p = QPolynomial::from_coeffs({Rational(4), Rational(-3), Rational(0), Rational(2)});
    CHECK(rubin_derivative(one, p) ==
          QPolynomial::from_coeffs({Rational(-3), Rational(0), Rational(6)}));
}

TEST_CASE("rubin classical limit at q = 1 - 1e-3") {
    QContext near(Rational(999, 1000));
    test::Rng rng(29);
    const Rational tol(1, 100);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = rng.poly(8, /*nonzero_coeffs=*/true);
        const auto got = rubin_derivative(near, p);
        QPolynomial want;
        for (int k = 1; k <= p.degree(); ++k) {
            want += QPolynomial::monomial(static_cast<unsigned>(k - 1),
                                          p.coeff(static_cast<unsigned>(k)) * k);
        }
        // every classical coefficient k a_k is nonzero, so pure relative
        // comparison applies
        for (int k = 0; k <= want.degree(); ++k) {
            const Rational w = want.coeff(static_cast<unsigned>(k));
            const Rational g = got.coeff(static_cast<unsigned>(k));
            CHECK(abs(g - w) <= tol * abs(w));
        }
    }
}
