#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qgen/qcontext.hpp"

namespace qgen {

// Dense polynomial in x over Rational. Canonical form: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector and
// degree() == -1.
class QPolynomial {
public:
    QPolynomial() = default;

    QPolynomial(long constant) { assign_constant(Rational(constant)); }       // NOLINT(google-explicit-constructor)
    QPolynomial(const Rational& constant) { assign_constant(constant); }      // NOLINT(google-explicit-constructor)

    // Coefficients lowest degree first; trailing zeros are trimmed.
    static QPolynomial from_coeffs(std::vector<Rational> coeffs);

    // coeff * x^k
    static QPolynomial monomial(unsigned k, const Rational& coeff = Rational(1));

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    // 0 beyond the degree.
    const Rational& coeff(unsigned k) const;

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    // p(s*x): coefficient scaling a_k -> a_k s^k.
    QPolynomial scale_argument(const Rational& s) const;

    // p(x + c)
    QPolynomial shift_argument(const Rational& c) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator-=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);
    QPolynomial& operator*=(const Rational& s);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
    friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }

    bool operator==(const QPolynomial& other) const = default;

private:
    void assign_constant(const Rational& c);
    void trim();

    std::vector<Rational> coeffs_;
};

bool ring_try_invert(const QPolynomial& c, QPolynomial& out);

// Exact Horner evaluation.
Rational poly_eval(const QPolynomial& p, const Rational& x0);

// Jackson derivative D_q: linear extension of x^n -> [n]_q x^{n-1};
// the classical derivative at q = 1.
QPolynomial jackson_derivative(const QContext& ctx, const QPolynomial& p);

// Jackson integral from 0: linear extension of x^n -> x^{n+1}/[n+1]_q.
QPolynomial jackson_integral(const QContext& ctx, const QPolynomial& p);

// Rubin derivative: monomial action q^{-l}[l]_q x^{l-1} for even l >= 2,
// [l]_q x^{l-1} for odd l, 0 on constants; the classical derivative at q = 1.
QPolynomial rubin_derivative(const QContext& ctx, const QPolynomial& p);

// Coefficient strings lowest degree first, for JSON reports.
std::vector<std::string> poly_coeff_strings(const QPolynomial& p);

// Human-readable form, e.g. "-9/16 + 9/8*x".
std::string poly_to_string(const QPolynomial& p);

}  // namespace qgen
