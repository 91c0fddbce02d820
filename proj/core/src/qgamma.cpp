#include "qgen/qgamma.hpp"

#include <algorithm>
#include <utility>

namespace qgen {

namespace {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

std::string short_str(const Real& v) {
    return v.str(12);
}

constexpr int kRunLength = 10;
constexpr unsigned long kIterCap = 200000;

// Monitored one-direction lattice sweep. Converges after ten consecutive
// non-growing terms each below (tol/10)·|sum|; declares divergence after ten
// consecutive growing terms.
void sweep(Real& sum, TailInfo& info, const Real& tol, const std::function<Real(long)>& term,
           long start, long step) {
    int small_run = 0;
    int grow_run = 0;
    Real prev_abs = -1;
    unsigned long iters = 0;
    for (long j = start;; j += step) {
        const Real t = term(j);
        sum += t;
        ++info.terms;
        ++iters;
        const Real at = abs(t);
        const bool decayed = (prev_abs < 0) || (at <= prev_abs);
        if (10 * at <= tol * abs(sum) && decayed) {
            ++small_run;
        } else {
            small_run = 0;
        }
        if (prev_abs >= 0 && at > prev_abs) {
            ++grow_run;
        } else {
            grow_run = 0;
        }
        if (small_run >= kRunLength) break;
        if (grow_run >= kRunLength) {
            throw DivergentTail("lattice sum diverges: terms grew for ten consecutive indices");
        }
        if (iters > kIterCap) {
            throw DivergentTail("lattice sum failed to converge within the iteration cap");
        }
        prev_abs = at;
    }
    info.tail_bound += tol * abs(sum);
}

// prod_{k>=0} (1 - a q^k), truncated once the certified remaining log-tail
// |a| q^k * q/(1-q) drops below eps.
Real pochhammer_inf(const FloatContext& fctx, const Real& a, const Real& eps, TailInfo& info) {
    Real prod = 1;
    Real arg = at_working_precision(a);
    const Real geom = fctx.q / (1 - fctx.q);
    while (abs(arg) * geom >= eps) {
        prod *= (1 - arg);
        arg *= fctx.q;
        ++info.terms;
        if (info.terms > kIterCap) {
            throw DivergentTail("q-Pochhammer product failed to converge");
        }
    }
    info.tail_bound += abs(arg) * geom;
    return prod;
}

bool is_nonpositive_integer(const Real& x) {
    return x <= 0 && floor(x) == x;
}

Real real_pow(const Real& base, const Real& e) {
    return exp(e * log(base));
}

// [w]_q = (1 - q^w)/(1 - q) for real w.
Real q_bracket(const FloatContext& fctx, const Real& w) {
    return (1 - real_pow(fctx.q, w)) / (1 - fctx.q);
}

}  // namespace

Real at_working_precision(const Real& v) {
    // boost copy assignment propagates the source precision; mpfr_set rounds
    // into storage allocated at the thread's working precision instead.
    Real out{};
    mpfr_set(out.backend().data(), v.backend().data(), MPFR_RNDN);
    return out;
}

void set_working_precision_bits(unsigned bits) {
    Real::default_precision(digits10_for_bits(bits));
}

Real to_real(const Rational& r) {
    Real out{};
    mpfr_set_q(out.backend().data(), r.get_mpq_t(), MPFR_RNDN);
    return out;
}

FloatContext::FloatContext(const Real& q_in, unsigned precision_bits_in, const Real& tol_in)
    : q(), precision_bits(precision_bits_in), tol() {
    if (precision_bits < 64) throw DomainError("FloatContext requires precision >= 64 bits");
    apply();
    q = at_working_precision(q_in);
    tol = at_working_precision(tol_in);
    if (!(q > 0 && q < 1)) {
        throw DomainError("FloatContext requires 0 < q < 1, got " + short_str(q));
    }
    if (!(tol > 0)) throw DomainError("FloatContext requires tol > 0");
}

namespace {
// Conversion must not happen at whatever precision was active before the
// context exists.
Real rational_at_bits(const Rational& r, unsigned bits) {
    if (bits >= 64) set_working_precision_bits(bits);
    return to_real(r);
}
}  // namespace

FloatContext::FloatContext(const Rational& q_in, unsigned precision_bits_in, const Real& tol_in)
    : FloatContext(rational_at_bits(q_in, precision_bits_in), precision_bits_in, tol_in) {}

void FloatContext::apply() const {
    Real::default_precision(digits10_for_bits(precision_bits));
}

std::optional<long> lattice_exponent(const Real& q) {
    const Real ratio = log(1 - q) / log(q);
    const Real rounded = floor(ratio + Real(0.5));
    if (abs(ratio - rounded) > 1e-9 * std::max(Real(1), abs(ratio))) return std::nullopt;
    const long m = rounded.convert_to<long>();
    if (m < 1) return std::nullopt;
    return m;
}

Real eq_big_E(const FloatContext& fctx, const Real& z) {
    // E_q(z) = prod_{k>=0} (1 + (1-q) q^k z); factors reach exactly 1 + 0
    // in the tail, zeros on the negative lattice are hit exactly when the
    // arithmetic allows.
    Real prod = 1;
    Real arg = (1 - fctx.q) * z;
    const Real eps = ldexp(Real(1), -static_cast<int>(fctx.precision_bits) - 8);
    const Real geom = fctx.q / (1 - fctx.q);
    unsigned long iters = 0;
    while (abs(arg) * geom >= eps) {
        const Real factor = 1 + arg;
        if (factor == 0) return Real(0);
        prod *= factor;
        arg *= fctx.q;
        if (++iters > kIterCap) throw DivergentTail("E_q product failed to converge");
    }
    return prod;
}

Eval qgamma_product_ex(const FloatContext& fctx, const Real& x) {
    fctx.apply();
    const Real xx = at_working_precision(x);
    if (is_nonpositive_integer(xx)) throw PoleAt(short_str(xx));
    Eval out;
    const Real eps = fctx.tol / 4;
    const Real num = pochhammer_inf(fctx, fctx.q, eps, out.tail);
    const Real den = pochhammer_inf(fctx, real_pow(fctx.q, xx), eps, out.tail);
    out.value = num / den * real_pow(1 - fctx.q, 1 - xx);
    return out;
}

Real qgamma_product(const FloatContext& fctx, const Real& x) {
    return qgamma_product_ex(fctx, x).value;
}

Eval qgamma_integral_ex(const FloatContext& fctx, const Real& s, bool improper) {
    fctx.apply();
    const Real ss = at_working_precision(s);
    if (!(ss > 0)) throw DomainError("qgamma_integral requires s > 0");
    Eval out;
    const Real q = fctx.q;
    // Lattice points advance multiplicatively, never through exp(j log q):
    // at binary-exact q the E_q zeros on the deep lattice then come out
    // exactly zero instead of as amplified rounding dust.
    if (!improper) {
        // (1-q) x sum_{l>=0} q^l f(q^l x) with x = 1/(1-q).
        const Real upper = 1 / (1 - q);
        Real sum = 0;
        Real t = upper;   // q^l x
        Real w = 1;       // q^l
        sweep(sum, out.tail, fctx.tol,
              [&](long) {
                  const Real v = w * real_pow(t, ss - 1) * eq_big_E(fctx, -q * t);
                  t *= q;
                  w *= q;
                  return v;
              },
              0, 1);
        out.value = (1 - q) * upper * sum;
        return out;
    }
    // Bilateral form (1-q) sum_{j in Z} q^{js} E_q(-q^{1+j}). When
    // 1 - q = q^m the t > 1 tail terminates at j = -m: every deeper term
    // carries the factor 1 - q^0 = 0 inside E_q.
    const std::optional<long> m = lattice_exponent(q);
    if (!m) {
        out.tail.warnings.push_back(
            "LatticeConditionWarning: log(1-q)/log q is not an integer; the improper "
            "q-integral need not agree with Gamma_q");
    }
    const Real qs = real_pow(q, ss);
    Real sum = 0;
    {
        Real w = 1;        // q^{js}
        Real arg = q;      // q^{1+j}
        sweep(sum, out.tail, fctx.tol,
              [&](long) {
                  const Real v = w * eq_big_E(fctx, -arg);
                  w *= qs;
                  arg *= q;
                  return v;
              },
              0, 1);
    }
    Real wn = 1 / qs;      // q^{js} at j = -1
    Real argn = 1;         // q^{1+j} at j = -1
    auto term_neg = [&](long) {
        const Real v = wn * eq_big_E(fctx, -argn);
        wn /= qs;
        argn /= q;
        return v;
    };
    if (m) {
        for (long j = -1; j >= -*m; --j) {
            sum += term_neg(j);
            ++out.tail.terms;
        }
    } else {
        try {
            sweep(sum, out.tail, fctx.tol, term_neg, -1, -1);
        } catch (const DivergentTail& e) {
            throw DivergentTail(std::string(e.what()) +
                                " (improper form requested with log(1-q)/log q not an integer)");
        }
    }
    out.value = (1 - q) * sum;
    return out;
}

Real qgamma_integral(const FloatContext& fctx, const Real& s, bool improper) {
    return qgamma_integral_ex(fctx, s, improper).value;
}

PartialFractionSeries::PartialFractionSeries(
    std::vector<Real> coeffs, unsigned decay_index, const Real& tail_ratio,
    std::function<Real(const FloatContext&, const Real&)> entire_part)
    : coeffs_(std::move(coeffs)),
      decay_index_(decay_index),
      tail_ratio_(tail_ratio),
      entire_part_(std::move(entire_part)) {
    if (coeffs_.empty()) throw DomainError("PartialFractionSeries requires coefficients");
    if (!(tail_ratio_ >= 0 && tail_ratio_ < 1)) {
        throw DomainError("PartialFractionSeries requires tail ratio in [0, 1)");
    }
    for (std::size_t n = decay_index_ + 1; n < coeffs_.size(); ++n) {
        if (abs(coeffs_[n]) > abs(coeffs_[n - 1])) {
            throw DomainError("PartialFractionSeries: |a_n| must be non-increasing beyond the "
                              "declared decay index");
        }
    }
}

Eval PartialFractionSeries::eval_ex(const FloatContext& fctx, const Real& z) const {
    fctx.apply();
    const Real zz = at_working_precision(z);
    if (is_nonpositive_integer(zz)) {
        const long idx = (-zz).convert_to<long>();
        if (idx >= 0 && static_cast<std::size_t>(idx) < coeffs_.size() && coeffs_[idx] != 0) {
            throw PoleAt(short_str(zz));
        }
    }
    const std::size_t last = coeffs_.size() - 1;
    if (zz < -Real(static_cast<long>(last))) {
        throw DomainError("partial-fraction series too short for z = " + short_str(zz));
    }
    Eval out;
    out.value = entire_part_ ? entire_part_(fctx, zz) : Real(0);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        out.value += coeffs_[n] / q_bracket(fctx, zz + Real(static_cast<long>(n)));
        ++out.tail.terms;
    }
    // Beyond storage every denominator satisfies [z+n]_q >= [z+last+1]_q > 0.
    const Real tail_coeffs = abs(coeffs_[last]) * tail_ratio_ / (1 - tail_ratio_);
    out.tail.tail_bound += tail_coeffs / q_bracket(fctx, zz + Real(static_cast<long>(last) + 1));
    return out;
}

Real PartialFractionSeries::eval(const FloatContext& fctx, const Real& z) const {
    return eval_ex(fctx, z).value;
}

PartialFractionSeries gamma_pole_series(const FloatContext& fctx) {
    fctx.apply();
    const Real eps = ldexp(Real(1), -static_cast<int>(fctx.precision_bits) - 16);
    std::vector<Real> coeffs;
    Real qpow = 1;   // q^{C(j+1,2)}
    Real fact = 1;   // [j]_q!
    Real qj = 1;     // q^j
    long sign = 1;
    for (unsigned long j = 0;; ++j) {
        if (j > 0) {
            qj *= fctx.q;                           // q^j
            qpow *= qj;                             // q^{C(j+1,2)} = q^{C(j,2)} q^j
            fact *= (1 - qj) / (1 - fctx.q);        // [j]_q
            sign = -sign;
        }
        coeffs.push_back(sign * qpow / fact);
        if (j >= 8 && abs(coeffs.back()) < eps) break;
        if (j > 4096) break;
    }
    // |a_{j+1}/a_j| = q^{j+1}/[j+1]_q <= q, so q certifies the tail.
    return PartialFractionSeries(std::move(coeffs), 0, fctx.q);
}

Eval qgamma_meromorphic_ex(const FloatContext& fctx, const Real& z) {
    fctx.apply();
    const Real zz = at_working_precision(z);
    if (is_nonpositive_integer(zz)) throw PoleAt(short_str(zz));
    Eval out;
    const Real q = fctx.q;
    // Entire part: (1-q) sum_{j>=1} q^{-jz} E_q(-q^{1-j}), the lattice points
    // on (1, inf). Finite when 1 - q = q^m; the lattice advances
    // multiplicatively to keep the deep E_q zeros exact.
    Real entire = 0;
    const std::optional<long> m = lattice_exponent(q);
    const Real qmz = real_pow(q, -zz);
    Real w = qmz;   // q^{-jz} at j = 1
    Real arg = 1;   // q^{1-j} at j = 1
    auto term = [&](long) {
        const Real v = w * eq_big_E(fctx, -arg);
        w *= qmz;
        arg /= q;
        return v;
    };
    if (m) {
        for (long j = 1; j <= *m; ++j) {
            entire += term(j);
            ++out.tail.terms;
        }
    } else {
        out.tail.warnings.push_back(
            "LatticeConditionWarning: log(1-q)/log q is not an integer; the lattice entire part "
            "need not converge");
        sweep(entire, out.tail, fctx.tol, term, 1, 1);
    }
    const PartialFractionSeries poles = gamma_pole_series(fctx);
    const Eval pole_eval = poles.eval_ex(fctx, zz);
    out.value = (1 - q) * entire + pole_eval.value;
    out.tail.terms += pole_eval.tail.terms;
    out.tail.tail_bound += pole_eval.tail.tail_bound;
    return out;
}

Real qgamma_meromorphic(const FloatContext& fctx, const Real& z) {
    return qgamma_meromorphic_ex(fctx, z).value;
}

Rational qgamma_residue(const QContext& ctx, unsigned long j) {
    Rational value = rat_pow(ctx.q(), static_cast<long>(j * (j + 1) / 2));
    value /= q_factorial(ctx, j);
    return (j % 2 == 0) ? value : Rational(-value);
}

Real residue_convention_factor(const FloatContext& fctx) {
    fctx.apply();
    return (1 - fctx.q) / log(1 / fctx.q);
}

Eval qmellin_ex(const FloatContext& fctx, const std::function<Real(const Real&)>& f,
                const Real& s) {
    fctx.apply();
    const Real ss = at_working_precision(s);
    Eval out;
    Real sum = 0;
    const Real qs = real_pow(fctx.q, ss);
    {
        Real t = 1;  // q^j, advanced multiplicatively
        Real w = 1;  // q^{js}
        sweep(sum, out.tail, fctx.tol,
              [&](long) {
                  const Real v = w * f(t);
                  w *= qs;
                  t *= fctx.q;
                  return v;
              },
              0, 1);  // t -> 0 side
    }
    Real t = 1 / fctx.q;
    Real w = 1 / qs;
    sweep(sum, out.tail, fctx.tol,
          [&](long) {
              const Real v = w * f(t);
              w /= qs;
              t /= fctx.q;
              return v;
          },
          -1, -1);  // t -> inf side
    out.value = (1 - fctx.q) * sum;
    return out;
}

Real qmellin(const FloatContext& fctx, const std::function<Real(const Real&)>& f, const Real& s) {
    return qmellin_ex(fctx, f, s).value;
}

}  // namespace qgen
