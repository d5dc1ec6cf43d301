#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jack/errors.hpp"

namespace jack {

using Q = mpq_class;
using Z = mpz_class;

// Parses "p/q", "p" or a decimal such as "-0.25".
Q parse_q(const std::string& s);
std::vector<Q> parse_q_list(const std::string& csv);
std::string to_string(const Q& x);

Q pow_q(const Q& x, long e);
Z factorial(unsigned n);
Z falling(long n, long k);   // n (n-1) ... (n-k+1), 0 if k > n
Z binomial(long n, long k);

// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const Q& x, Q& root);

double to_double(const Q& x);

// Element a + b*sqrt(alpha) of Q(sqrt(alpha)). alpha == 0 marks a plain
// rational that combines with any field. When alpha is a perfect square the
// value is folded into a.
class Surd {
public:
    Surd() = default;
    Surd(const Q& a) : a_(a) {}            // NOLINT(implicit)
    Surd(long a) : a_(a) {}                // NOLINT(implicit)
    Surd(const Q& a, const Q& b, const Q& alpha);

    static Surd sqrt_of(const Q& alpha);                 // sqrt(alpha)
    static Surd half_power(const Q& alpha, long k);      // alpha^(k/2)

    const Q& a() const { return a_; }
    const Q& b() const { return b_; }
    const Q& alpha() const { return alpha_; }
    bool is_rational() const { return b_ == 0; }
    Q rational() const;   // throws if b != 0

    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    double to_double() const;
    std::string to_string() const;

    Surd operator-() const;
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);
    Surd inverse() const;

    friend Surd operator+(Surd x, const Surd& y) { return x += y; }
    friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
    friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
    friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
    friend bool operator==(const Surd& x, const Surd& y);
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
    friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }

private:
    void normalize();
    const Q& merge_alpha(const Surd& o) const;

    Q a_ = 0;
    Q b_ = 0;
    Q alpha_ = 0;
};

Surd pow_s(const Surd& x, long e);

}  // namespace jack
