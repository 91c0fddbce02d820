#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qgen/qcontext.hpp"

namespace qgen {

// High-precision real scalar for the analytic machinery (q-Gamma, q-Mellin,
// zeta numerics). Working precision is set per FloatContext.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

Real to_real(const Rational& r);

// Copy into a fresh scalar carrying the current working precision.
Real at_working_precision(const Real& v);

// Sets the thread's default Real precision to the given bit count. Call
// before constructing Real values from strings when a specific working
// precision is wanted; FloatContext construction and every evaluation entry
// point do the equivalent themselves.
void set_working_precision_bits(unsigned bits);

// Analytic evaluation context: real q strictly inside (0, 1), working
// precision in bits (>= 64) and target relative error tol (> 0).
struct FloatContext {
    Real q;
    unsigned precision_bits;
    Real tol;

    FloatContext(const Real& q_in, unsigned precision_bits_in, const Real& tol_in);
    FloatContext(const Rational& q_in, unsigned precision_bits_in, const Real& tol_in);

    // Sets the thread's default Real precision to this context's working
    // precision. Every public evaluation applies it on entry.
    void apply() const;
};

// Truncation metadata attached to every monitored sum/product.
struct TailInfo {
    unsigned long terms = 0;
    Real tail_bound = 0;  // certified bound on the neglected remainder (absolute)
    std::vector<std::string> warnings;
};

struct Eval {
    Real value;
    TailInfo tail;
};

// m with 1 - q = q^m, when log(1-q)/log(q) is an integer; the condition under
// which the improper Jackson integral of the q-Gamma integrand terminates.
std::optional<long> lattice_exponent(const Real& q);

// E_q(z) evaluated through its q-Pochhammer product
// prod_{k>=0} (1 + (1-q) q^k z), which carries exact zeros on the negative
// lattice; agreement with the defining series is pinned by unit tests.
Real eq_big_E(const FloatContext& fctx, const Real& z);

// Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^{1-x}; poles at 0, -1, -2, ...
Eval qgamma_product_ex(const FloatContext& fctx, const Real& x);
Real qgamma_product(const FloatContext& fctx, const Real& x);

// Jackson-integral representation, s > 0. The default form integrates over
// [0, 1/(1-q)]; the improper form uses the bilateral lattice sum and carries
// a LatticeConditionWarning when log(1-q)/log q is not an integer.
Eval qgamma_integral_ex(const FloatContext& fctx, const Real& s, bool improper = false);
Real qgamma_integral(const FloatContext& fctx, const Real& s, bool improper = false);

// Partial-fraction series g(z) = sum_n a_n/[z+n]_q with an optional entire
// part; simple poles at -n for a_n != 0, residue (in the [z+n]_q sense) a_n.
class PartialFractionSeries {
public:
    // Requires |a_n| non-increasing for n >= decay_index and a certified
    // geometric tail ratio 0 <= r < 1 bounding coefficients beyond storage:
    // sum_{n > last} |a_n| <= |a_last| r/(1-r).
    PartialFractionSeries(std::vector<Real> coeffs, unsigned decay_index, const Real& tail_ratio,
                          std::function<Real(const FloatContext&, const Real&)> entire_part = {});

    Eval eval_ex(const FloatContext& fctx, const Real& z) const;
    Real eval(const FloatContext& fctx, const Real& z) const;

    const Real& residue_at(unsigned n) const { return coeffs_.at(n); }
    std::size_t size() const noexcept { return coeffs_.size(); }

private:
    std::vector<Real> coeffs_;
    unsigned decay_index_;
    Real tail_ratio_;
    std::function<Real(const FloatContext&, const Real&)> entire_part_;
};

// Pole part of Gamma_q: a_j = (-1)^j q^{C(j+1,2)}/[j]_q!, built out to the
// working precision's floor.
PartialFractionSeries gamma_pole_series(const FloatContext& fctx);

// Meromorphic continuation: lattice entire part over (1, inf) plus the pole
// series. Agrees with the product form away from the poles.
Eval qgamma_meromorphic_ex(const FloatContext& fctx, const Real& z);
Real qgamma_meromorphic(const FloatContext& fctx, const Real& z);

// Res(Gamma_q, -j) = (-1)^j q^{C(j+1,2)}/[j]_q!, exact, in the
// coefficient-of-1/[z+j]_q sense.
Rational qgamma_residue(const QContext& ctx, unsigned long j);

// Conversion from the [z+n]_q residue convention to the classical
// coefficient-of-1/(z+n) one: multiply by (1-q)/log(1/q). Tends to 1 as q->1.
Real residue_convention_factor(const FloatContext& fctx);

// q-Mellin transform: (1-q) sum_{j in Z} q^{js} f(q^j), monitored tails.
Eval qmellin_ex(const FloatContext& fctx, const std::function<Real(const Real&)>& f,
                const Real& s);
Real qmellin(const FloatContext& fctx, const std::function<Real(const Real&)>& f, const Real& s);

}  // namespace qgen
