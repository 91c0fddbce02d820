#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qgen/qcontext.hpp"

namespace qgen {

// Truncated formal power series in z with coefficients c0..cN in a ring R
// (R = Rational or QPolynomial). Binary operations truncate to the smaller
// operand order; a result never claims precision beyond its order.
template <class R>
class PowerSeries {
public:
    explicit PowerSeries(unsigned order) : coeffs_(order + 1) {}

    PowerSeries(unsigned order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const R& operator[](unsigned i) const { return coeffs_.at(i); }
    R& operator[](unsigned i) { return coeffs_.at(i); }

    const std::vector<R>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const PowerSeries& other) const = default;

private:
    std::vector<R> coeffs_;  // size order + 1
};

// Constant-term inversion, the ring-specific part of ps_inv. The Rational
// overload lives here; the QPolynomial overload is in qpolynomial.hpp.
inline bool ring_try_invert(const Rational& c, Rational& out) {
    if (c == 0) return false;
    out = 1 / c;
    return true;
}

template <class R>
PowerSeries<R> ps_add(const PowerSeries<R>& a, const PowerSeries<R>& b) {
    const unsigned n = std::min(a.order(), b.order());
    PowerSeries<R> out(n);
    for (unsigned i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return out;
}

template <class R>
PowerSeries<R> ps_sub(const PowerSeries<R>& a, const PowerSeries<R>& b) {
    const unsigned n = std::min(a.order(), b.order());
    PowerSeries<R> out(n);
    for (unsigned i = 0; i <= n; ++i) out[i] = a[i] - b[i];
    return out;
}

template <class R, class S>
PowerSeries<R> ps_scale(const PowerSeries<R>& a, const S& s) {
    PowerSeries<R> out(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) out[i] = a[i] * s;
    return out;
}

// Cauchy product, truncated to the smaller operand order.
template <class R>
PowerSeries<R> ps_mul(const PowerSeries<R>& a, const PowerSeries<R>& b) {
    const unsigned n = std::min(a.order(), b.order());
    PowerSeries<R> out(n);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; i + j <= n; ++j) {
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

// Multiplicative inverse through the truncation order, by the recurrence
// d_n = -(1/c_0) sum_{k=1..n} c_k d_{n-k}.
template <class R>
PowerSeries<R> ps_inv(const PowerSeries<R>& a) {
    R d0;
    if (!ring_try_invert(a[0], d0)) {
        throw NonInvertibleConstantTerm("power series has no inverse: constant term not a unit");
    }
    const unsigned n = a.order();
    PowerSeries<R> out(n);
    out[0] = d0;
    for (unsigned i = 1; i <= n; ++i) {
        R acc{};
        for (unsigned k = 1; k <= i; ++k) acc = acc + a[k] * out[i - k];
        out[i] = R{} - d0 * acc;
    }
    return out;
}

template <class R>
PowerSeries<R> ps_pow(const PowerSeries<R>& a, unsigned exponent) {
    if (exponent == 0) throw DomainError("ps_pow requires a positive exponent");
    PowerSeries<R> out = a;
    for (unsigned i = 1; i < exponent; ++i) out = ps_mul(out, a);
    return out;
}

// The monomial z^k as a series of the given order.
template <class R>
PowerSeries<R> ps_monomial(unsigned k, unsigned order) {
    PowerSeries<R> out(order);
    if (k <= order) out[k] = R(1);
    return out;
}

// e_q(z) = sum_l z^l/[l]_q!
PowerSeries<Rational> eq_series(const QContext& ctx, unsigned order);

// E_q(z) = sum_l q^{C(l,2)} z^l/[l]_q!
PowerSeries<Rational> Eq_series(const QContext& ctx, unsigned order);

}  // namespace qgen
