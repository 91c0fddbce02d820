#pragma once

#include "qgen/rational.hpp"

namespace qgen {

// Carries the deformation parameter q for all exact q-arithmetic.
//
// Regular construction accepts rational q in (0, 1]; q = 1 is the classical
// limit, where every q-primitive degenerates to its ordinary value.
// reciprocal() yields the base-1/q context needed by the base-inversion
// identities ([l]_{1/q}! = q^{-C(l,2)} [l]_q!, e_{1/q} = E_q); it is the one
// sanctioned way to hold a base outside (0, 1].
class QContext {
public:
    explicit QContext(Rational q);

    QContext reciprocal() const;

    const Rational& q() const noexcept { return q_; }
    bool is_classical() const noexcept { return q_ == 1; }

private:
    struct unchecked_tag {};
    QContext(Rational q, unchecked_tag) : q_(std::move(q)) {}

    Rational q_;
};

// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^{n-1}; n at q = 1.
Rational q_int(const QContext& ctx, unsigned long n);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; empty product for n = 0.
Rational q_factorial(const QContext& ctx, unsigned long n);

// Gaussian binomial; 0 for k < 0 or k > n.
Rational q_binomial(const QContext& ctx, unsigned long n, long k);

// q^{C(l,2)} = q^{l(l-1)/2}.
Rational q_binom2_power(const QContext& ctx, unsigned long l);

// q^e for signed e.
Rational q_pow(const QContext& ctx, long e);

}  // namespace qgen
