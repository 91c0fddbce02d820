#include "qgen/qcontext.hpp"

namespace qgen {

QContext::QContext(Rational q) : q_(std::move(q)) {
    if (q_ <= 0 || q_ > 1) {
        throw DomainError("QContext requires rational q in (0, 1], got " + to_string(q_));
    }
}

QContext QContext::reciprocal() const {
    return QContext(1 / q_, unchecked_tag{});
}

Rational q_int(const QContext& ctx, unsigned long n) {
    if (ctx.is_classical()) return Rational(static_cast<long>(n));
    // (1 - q^n)/(1 - q)
    return (1 - rat_pow(ctx.q(), static_cast<long>(n))) / (1 - ctx.q());
}

Rational q_factorial(const QContext& ctx, unsigned long n) {
    Rational acc(1);
    for (unsigned long k = 1; k <= n; ++k) acc *= q_int(ctx, k);
    return acc;
}

Rational q_binomial(const QContext& ctx, unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    const unsigned long ku = static_cast<unsigned long>(k);
    // [n]_q [n-1]_q ... [n-k+1]_q / [k]_q!
    Rational num(1);
    for (unsigned long i = 0; i < ku; ++i) num *= q_int(ctx, n - i);
    return num / q_factorial(ctx, ku);
}

Rational q_binom2_power(const QContext& ctx, unsigned long l) {
    if (l < 2) return Rational(1);
    return rat_pow(ctx.q(), static_cast<long>(l * (l - 1) / 2));
}

Rational q_pow(const QContext& ctx, long e) {
    return rat_pow(ctx.q(), e);
}

}  // namespace qgen
