#include "qgen/rational.hpp"

#include <cctype>

namespace qgen {

std::string to_string(const Rational& r) {
    return r.get_str();  // mpq prints "p/r" and omits "/1"
}

Rational rational_from_string(std::string_view text) {
    // Stricter than mpq_set_str: exactly [-]digits[/digits], no whitespace,
    // no base prefixes.
    auto valid = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        bool slash_seen = false;
        std::size_t digits = 0;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == '/') {
                if (slash_seen || digits == 0 || i + 1 == s.size()) return false;
                slash_seen = true;
                digits = 0;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                ++digits;
            } else {
                return false;
            }
        }
        return digits > 0;
    };
    if (!valid(text)) {
        throw DomainError("invalid rational literal: '" + std::string(text) + "'");
    }
    Rational r;
    if (r.set_str(std::string(text), 10) != 0) {
        throw DomainError("invalid rational literal: '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) {
        throw DomainError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rational(0);
    }
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (e < 0) {
        mpz_swap(out.get_num_mpz_t(), out.get_den_mpz_t());
        out.canonicalize();  // restore positive denominator
    }
    return out;
}

Rational binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(b);
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace qgen
