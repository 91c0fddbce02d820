#pragma once

#include <vector>

#include "qgen/power_series.hpp"
#include "qgen/qpolynomial.hpp"

namespace qgen {

// Higher-order q-Genocchi polynomials G^{(alpha)}_0(x) .. G^{(alpha)}_N(x):
// [n]_q! times the z^n coefficient of ([2]_q z/(e_q(z)+1))^alpha e_q(zx).
// G^{(alpha)}_n(x) vanishes identically for n < alpha and has degree
// n - alpha otherwise; the q-Genocchi numbers are the values at x = 0.
struct GenocchiTable {
    QContext ctx;
    unsigned alpha = 1;
    unsigned order = 0;  // N
    std::vector<QPolynomial> polys;  // size N + 1

    const QPolynomial& poly(unsigned n) const { return polys.at(n); }
    Rational number(unsigned n) const { return polys.at(n).coeff(0); }

    bool operator==(const GenocchiTable& other) const {
        return ctx.q() == other.ctx.q() && alpha == other.alpha && order == other.order &&
               polys == other.polys;
    }
};

// Lift a rational-coefficient series into constant polynomials.
PowerSeries<QPolynomial> ps_lift(const PowerSeries<Rational>& a);

// e_q(zy) for a fixed rational y: coefficient l is y^l/[l]_q!.
PowerSeries<Rational> eq_scaled_series(const QContext& ctx, const Rational& y, unsigned order);

// ([2]_q z/(e_q(z)+1))^alpha over Rational coefficients.
PowerSeries<Rational> genocchi_kernel(const QContext& ctx, unsigned alpha, unsigned order);

// The full bivariate generating series S_q(x,z:alpha); z-coefficients are
// polynomials in x.
PowerSeries<QPolynomial> genocchi_series(const QContext& ctx, unsigned alpha, unsigned order);

// Requires alpha >= 1 and N >= alpha.
GenocchiTable genocchi_table(const QContext& ctx, unsigned alpha, unsigned order);

// Values at x = 0.
std::vector<Rational> genocchi_numbers(const QContext& ctx, unsigned alpha, unsigned order);

// sum_n qbinom(j,n) x^{j-n} G^{(alpha)}_n rebuilt from the numbers; equals
// table.poly(j) exactly.
QPolynomial expand_polynomial(const GenocchiTable& table, unsigned j);

// sum_j qbinom(n,j) y^{n-j} G^{(alpha)}_j(x); checked on every call against
// [n]_q! times the z^n coefficient of e_q(zy) S_q(x,z:alpha).
QPolynomial q_add_shift(const GenocchiTable& table, unsigned n, const Rational& y);

struct ConvolutionReport {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned order = 0;
    std::vector<bool> equal;  // per l = 0..order
    bool all_equal = false;
};

// G^{(alpha+beta)}_l(x) vs sum_n qbinom(l,n) G^{(alpha)}_n G^{(beta)}_{l-n}(x),
// both sides exact, l = 0..N.
ConvolutionReport order_convolution(const QContext& ctx, unsigned alpha, unsigned beta,
                                    unsigned order);

// Bracket coefficient of the Rubin identity as printed:
// q^{-l} + (-1)^l q^{-l} - q^l + (-1)^l q^l + 2(-1)^l.
Rational rubin_t_printed(const QContext& ctx, unsigned long l);

// Corrected bracket, from the -2f(-x) term of the operator definition:
// q^{-l} + (-1)^l q^{-l} - q^l + (-1)^l q^l - 2(-1)^l. Vanishes at l = 0.
Rational rubin_t_corrected(const QContext& ctx, unsigned long l);

// The three consistent routes to Rubin-on-Genocchi, plus the identity as
// printed (kept for the discrepancy report, never asserted).
struct RubinCheck {
    QPolynomial operator_applied;      // rubin_derivative(G_n(x))
    QPolynomial corrected_sum;         // single sum with the corrected bracket, l >= 1
    QPolynomial corrected_split;       // even/odd split with corrected signs
    QPolynomial printed_sum_regular;   // printed bracket, l >= 1 part
    Rational printed_singular_coeff;   // printed l = 0 term's x^{-1} coefficient
    bool consistent = false;           // the three corrected routes agree
    bool printed_matches = false;      // printed form reproduces the operator
};

// Requires q != 1.
RubinCheck rubin_on_genocchi(const GenocchiTable& table, unsigned n);

}  // namespace qgen
