#include "qgen/power_series.hpp"

namespace qgen {

PowerSeries<Rational> eq_series(const QContext& ctx, unsigned order) {
    PowerSeries<Rational> out(order);
    Rational fact(1);  // [l]_q!
    out[0] = 1;
    for (unsigned long l = 1; l <= order; ++l) {
        fact *= q_int(ctx, l);
        out[static_cast<unsigned>(l)] = 1 / fact;
    }
    return out;
}

PowerSeries<Rational> Eq_series(const QContext& ctx, unsigned order) {
    PowerSeries<Rational> out(order);
    Rational fact(1);      // [l]_q!
    Rational qbinom2(1);   // q^{C(l,2)}
    out[0] = 1;
    for (unsigned long l = 1; l <= order; ++l) {
        fact *= q_int(ctx, l);
        if (l >= 2) qbinom2 *= rat_pow(ctx.q(), static_cast<long>(l - 1));
        out[static_cast<unsigned>(l)] = qbinom2 / fact;
    }
    return out;
}

}  // namespace qgen
