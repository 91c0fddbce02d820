#include "qgen/qzeta.hpp"

#include <algorithm>
#include <vector>

namespace qgen {

Rational euler_regularized_altsum(const QPolynomial& p) {
    const int d = std::max(0, p.degree());
    std::vector<Rational> diff;
    diff.reserve(d + 1);
    for (int i = 0; i <= d; ++i) diff.push_back(poly_eval(p, Rational(i)));

    Rational result(0);
    Rational denom(2);  // 2^{k+1}
    long sign = 1;
    for (int k = 0; k <= d; ++k) {
        result += sign * diff[0] / denom;
        for (int i = 0; i + k + 1 <= d; ++i) diff[i] = diff[i + 1] - diff[i];
        denom *= 2;
        sign = -sign;
    }
    return result;
}

Rational qzeta_neg_int(const QContext& ctx, unsigned n, const Rational& x, unsigned alpha) {
    if (alpha < 1) throw DomainError("qzeta_neg_int requires alpha >= 1");
    // Composition-count weight C(s+alpha-1, alpha-1) as a polynomial in s.
    QPolynomial weight(1);
    for (unsigned long i = 1; i + 1 <= alpha; ++i) {
        weight *= QPolynomial::from_coeffs({Rational(static_cast<long>(i)), Rational(1)});
    }
    weight *= Rational(1) / Rational(factorial(alpha - 1));
    // (qx + qs)^n in s.
    const QPolynomial linear =
        QPolynomial::from_coeffs({ctx.q() * x, ctx.q()});
    QPolynomial power(1);
    for (unsigned i = 0; i < n; ++i) power *= linear;
    return rat_pow(q_int(ctx, 2), static_cast<long>(alpha)) *
           euler_regularized_altsum(weight * power);
}

ZetaReport interpolation_check(const QContext& ctx, unsigned n, const Rational& x,
                               unsigned alpha) {
    ZetaReport report;
    report.n = n;
    report.x = x;
    report.alpha = alpha;
    report.q = ctx.q();
    report.lhs = qzeta_neg_int(ctx, n, x, alpha);
    const GenocchiTable table = genocchi_table(ctx, alpha, n + alpha);
    report.rhs = rat_pow(ctx.q(), -static_cast<long>(n)) * poly_eval(table.poly(n + alpha), x) /
                 (q_factorial(ctx, alpha) * q_binomial(ctx, n + alpha, static_cast<long>(alpha)));
    report.equal = (report.lhs == report.rhs);
    if (report.rhs != 0) report.ratio = report.lhs / report.rhs;
    return report;
}

Eval qzeta_numeric_ex(const FloatContext& fctx, const Real& z, const Real& x, unsigned alpha) {
    fctx.apply();
    const Real zz = at_working_precision(z);
    const Real xx = at_working_precision(x);
    if (alpha < 1) throw DomainError("qzeta_numeric requires alpha >= 1");
    if (!(zz > 0)) throw DomainError("qzeta_numeric requires z > 0; use qzeta_neg_int at z = -n");
    if (!(xx > 0)) throw DomainError("qzeta_numeric requires x > 0");

    Eval out;
    for (unsigned terms = 64; terms <= 4096; terms *= 2) {
        // a_s = C(s+alpha-1, alpha-1) / (q(x+s))^z, summed with alternating
        // signs via the Euler transform.
        std::vector<Real> row;
        row.reserve(terms);
        for (unsigned long s = 0; s < terms; ++s) {
            const Real weight = to_real(binomial(s + alpha - 1, static_cast<long>(alpha - 1)));
            row.push_back(weight * exp(-zz * log(fctx.q * (xx + Real(s)))));
        }
        Real sum = 0;
        Real denom = 2;  // 2^{k+1}
        long sign = 1;
        int small_run = 0;
        bool converged = false;
        for (unsigned k = 0; k < terms; ++k) {
            const Real term = sign * row[0] / denom;
            sum += term;
            ++out.tail.terms;
            if (sum != 0 && 4 * abs(term) <= fctx.tol * abs(sum)) {
                if (++small_run >= 4) {
                    converged = true;
                    break;
                }
            } else {
                small_run = 0;
            }
            for (unsigned i = 0; i + k + 1 < terms; ++i) row[i] = row[i + 1] - row[i];
            denom *= 2;
            sign = -sign;
        }
        if (converged) {
            const Real two_q = 1 + fctx.q;  // [2]_q
            out.value = pow(two_q, static_cast<int>(alpha)) * sum;
            out.tail.tail_bound = fctx.tol * abs(out.value);
            return out;
        }
    }
    throw DivergentTail("qzeta_numeric: Euler-transformed sum failed to converge");
}

Real qzeta_numeric(const FloatContext& fctx, const Real& z, const Real& x, unsigned alpha) {
    return qzeta_numeric_ex(fctx, z, x, alpha).value;
}

}  // namespace qgen
