#include "qgen/genocchi.hpp"

#include <algorithm>

namespace qgen {

PowerSeries<QPolynomial> ps_lift(const PowerSeries<Rational>& a) {
    PowerSeries<QPolynomial> out(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) out[i] = QPolynomial(a[i]);
    return out;
}

PowerSeries<Rational> eq_scaled_series(const QContext& ctx, const Rational& y, unsigned order) {
    PowerSeries<Rational> out(order);
    Rational fact(1);
    Rational ypow(1);
    out[0] = 1;
    for (unsigned long l = 1; l <= order; ++l) {
        fact *= q_int(ctx, l);
        ypow *= y;
        out[static_cast<unsigned>(l)] = ypow / fact;
    }
    return out;
}

PowerSeries<Rational> genocchi_kernel(const QContext& ctx, unsigned alpha, unsigned order) {
    PowerSeries<Rational> denom = eq_series(ctx, order);  // e_q(z) + 1
    denom[0] += 1;
    PowerSeries<Rational> base =
        ps_scale(ps_mul(ps_monomial<Rational>(1, order), ps_inv(denom)), q_int(ctx, 2));
    return ps_pow(base, alpha);
}

PowerSeries<QPolynomial> genocchi_series(const QContext& ctx, unsigned alpha, unsigned order) {
    PowerSeries<QPolynomial> expx(order);  // e_q(zx): coefficient l is x^l/[l]_q!
    Rational fact(1);
    expx[0] = QPolynomial(1);
    for (unsigned long l = 1; l <= order; ++l) {
        fact *= q_int(ctx, l);
        expx[static_cast<unsigned>(l)] = QPolynomial::monomial(static_cast<unsigned>(l), 1 / fact);
    }
    return ps_mul(ps_lift(genocchi_kernel(ctx, alpha, order)), expx);
}

GenocchiTable genocchi_table(const QContext& ctx, unsigned alpha, unsigned order) {
    if (alpha < 1) throw DomainError("genocchi_table requires alpha >= 1");
    if (order < alpha) throw DomainError("genocchi_table requires order >= alpha");
    PowerSeries<QPolynomial> series = genocchi_series(ctx, alpha, order);
    GenocchiTable table{ctx, alpha, order, {}};
    table.polys.reserve(order + 1);
    Rational fact(1);  // [n]_q!
    for (unsigned long n = 0; n <= order; ++n) {
        if (n >= 1) fact *= q_int(ctx, n);
        table.polys.push_back(series[static_cast<unsigned>(n)] * fact);
    }
    return table;
}

std::vector<Rational> genocchi_numbers(const QContext& ctx, unsigned alpha, unsigned order) {
    GenocchiTable table = genocchi_table(ctx, alpha, order);
    std::vector<Rational> numbers;
    numbers.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) numbers.push_back(poly_eval(table.poly(n), Rational(0)));
    return numbers;
}

QPolynomial expand_polynomial(const GenocchiTable& table, unsigned j) {
    if (j > table.order) throw DomainError("expand_polynomial: j exceeds table order");
    QPolynomial out;
    for (unsigned n = 0; n <= j; ++n) {
        const Rational coeff = q_binomial(table.ctx, j, static_cast<long>(n)) * table.number(n);
        out += QPolynomial::monomial(j - n, coeff);
    }
    return out;
}

namespace {

QPolynomial add_shift_via_series(const GenocchiTable& table, unsigned n, const Rational& y) {
    PowerSeries<QPolynomial> product =
        ps_mul(ps_lift(eq_scaled_series(table.ctx, y, n)),
               genocchi_series(table.ctx, table.alpha, n));
    return product[n] * q_factorial(table.ctx, n);
}

}  // namespace

QPolynomial q_add_shift(const GenocchiTable& table, unsigned n, const Rational& y) {
    if (n > table.order) throw DomainError("q_add_shift: n exceeds table order");
    QPolynomial out;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational w =
            q_binomial(table.ctx, n, static_cast<long>(j)) * rat_pow(y, static_cast<long>(n - j));
        out += table.poly(j) * w;
    }
    // Cauchy-product form of the same identity; exact, so any mismatch is an
    // internal arithmetic fault.
    if (out != add_shift_via_series(table, n, y)) {
        throw Error("q_add_shift: binomial sum and Cauchy-product routes disagree");
    }
    return out;
}

ConvolutionReport order_convolution(const QContext& ctx, unsigned alpha, unsigned beta,
                                    unsigned order) {
    if (alpha < 1 || beta < 1) throw DomainError("order_convolution requires alpha, beta >= 1");
    GenocchiTable sum_table = genocchi_table(ctx, alpha + beta, std::max(order, alpha + beta));
    GenocchiTable a_table = genocchi_table(ctx, alpha, std::max(order, alpha));
    GenocchiTable b_table = genocchi_table(ctx, beta, std::max(order, beta));
    ConvolutionReport report{alpha, beta, order, {}, true};
    report.equal.reserve(order + 1);
    for (unsigned l = 0; l <= order; ++l) {
        QPolynomial rhs;
        for (unsigned n = 0; n <= l; ++n) {
            const Rational w = q_binomial(ctx, l, static_cast<long>(n)) * a_table.number(n);
            rhs += b_table.poly(l - n) * w;
        }
        const bool ok = (rhs == sum_table.poly(l));
        report.equal.push_back(ok);
        report.all_equal = report.all_equal && ok;
    }
    return report;
}

Rational rubin_t_printed(const QContext& ctx, unsigned long l) {
    const long sign = (l % 2 == 0) ? 1 : -1;
    const Rational qn = rat_pow(ctx.q(), -static_cast<long>(l));
    const Rational qp = rat_pow(ctx.q(), static_cast<long>(l));
    return qn + sign * qn - qp + sign * qp + 2 * sign;
}

Rational rubin_t_corrected(const QContext& ctx, unsigned long l) {
    const long sign = (l % 2 == 0) ? 1 : -1;
    const Rational qn = rat_pow(ctx.q(), -static_cast<long>(l));
    const Rational qp = rat_pow(ctx.q(), static_cast<long>(l));
    return qn + sign * qn - qp + sign * qp - 2 * sign;
}

RubinCheck rubin_on_genocchi(const GenocchiTable& table, unsigned n) {
    const QContext& ctx = table.ctx;
    if (ctx.is_classical()) throw DomainError("rubin_on_genocchi requires q != 1");
    if (n > table.order) throw DomainError("rubin_on_genocchi: n exceeds table order");

    RubinCheck check;
    check.operator_applied = rubin_derivative(ctx, table.poly(n));

    const Rational pref = 1 / (2 * (1 - ctx.q()));
    for (unsigned long l = 1; l <= n; ++l) {
        const Rational binom = q_binomial(ctx, n, static_cast<long>(l));
        const Rational num = table.number(n - static_cast<unsigned>(l));
        check.corrected_sum +=
            QPolynomial::monomial(static_cast<unsigned>(l - 1),
                                  pref * binom * rubin_t_corrected(ctx, l) * num);
        check.printed_sum_regular +=
            QPolynomial::monomial(static_cast<unsigned>(l - 1),
                                  pref * binom * rubin_t_printed(ctx, l) * num);
    }
    check.printed_singular_coeff = pref * rubin_t_printed(ctx, 0) * table.number(n);

    // Even/odd split, Gauss-symbol limits, corrected signs: the l = 0 even
    // term carries the factor q^0 - 1 = 0, so no x^{-1} survives.
    const Rational inv1mq = 1 / (1 - ctx.q());
    for (unsigned long l = 1; 2 * l <= n; ++l) {
        const Rational w = inv1mq * q_binomial(ctx, n, static_cast<long>(2 * l)) *
                           (rat_pow(ctx.q(), -static_cast<long>(2 * l)) - 1) *
                           table.number(n - static_cast<unsigned>(2 * l));
        check.corrected_split += QPolynomial::monomial(static_cast<unsigned>(2 * l - 1), w);
    }
    for (unsigned long l = 0; 2 * l + 1 <= n; ++l) {
        const Rational w = inv1mq * q_binomial(ctx, n, static_cast<long>(2 * l + 1)) *
                           (1 - rat_pow(ctx.q(), static_cast<long>(2 * l + 1))) *
                           table.number(n - static_cast<unsigned>(2 * l + 1));
        check.corrected_split += QPolynomial::monomial(static_cast<unsigned>(2 * l), w);
    }

    check.consistent = (check.operator_applied == check.corrected_sum) &&
                       (check.operator_applied == check.corrected_split);
    check.printed_matches = (check.printed_sum_regular == check.operator_applied) &&
                            (check.printed_singular_coeff == 0);
    return check;
}

}  // namespace qgen
