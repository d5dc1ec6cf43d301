#include "jack/rational.hpp"

#include <cmath>
#include <sstream>

namespace jack {

Q parse_q(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw parameter_error("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw parameter_error("bad rational: " + raw);
        bool neg = s[0] == '-';
        std::string body = (neg || s[0] == '+') ? s.substr(1) : s;
        dot = body.find('.');
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (digits.empty()) throw parameter_error("bad rational: " + raw);
        for (char c : digits)
            if (c < '0' || c > '9') throw parameter_error("bad rational: " + raw);
        Z num(digits, 10);
        Z den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
        Q r(num, den);
        r.canonicalize();
        return neg ? Q(-r) : r;
    }
    Q r;
    if (r.set_str(s, 10) != 0) throw parameter_error("bad rational: " + raw);
    if (r.get_den() == 0) throw parameter_error("zero denominator: " + raw);
    r.canonicalize();
    return r;
}

std::vector<Q> parse_q_list(const std::string& csv)
{
    std::vector<Q> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(parse_q(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_q(cur));
    return out;
}

std::string to_string(const Q& x) { return x.get_str(); }

Q pow_q(const Q& x, long e)
{
    if (e < 0) {
        if (x == 0) throw parameter_error("zero to a negative power");
        return pow_q(Q(1) / x, -e);
    }
    Q r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Z factorial(unsigned n)
{
    Z r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Z falling(long n, long k)
{
    if (k < 0) return 0;
    Z r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

Z binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool exact_sqrt(const Q& x, Q& root)
{
    if (x < 0) return false;
    if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
        return false;
    Z n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    root = Q(n, d);
    root.canonicalize();
    return true;
}

double to_double(const Q& x) { return x.get_d(); }

// ---- Surd ----

Surd::Surd(const Q& a, const Q& b, const Q& alpha) : a_(a), b_(b), alpha_(alpha)
{
    if (alpha < 0) throw parameter_error("surd radicand must be nonnegative");
    normalize();
}

void Surd::normalize()
{
    if (b_ == 0) return;
    if (alpha_ == 0) {
        b_ = 0;
        return;
    }
    // canonical radicand: squarefree part of num*den, so sqrt(1/a) and
    // sqrt(a) live in the same field
    if (alpha_.get_den() != 1) {
        Z den = alpha_.get_den();
        b_ /= den;
        alpha_ = Q(alpha_.get_num() * den);
    }
    Z n = alpha_.get_num();
    Z s = 1;
    for (unsigned long p = 2; p < 100000; ++p) {
        Z p2 = Z(p) * p;
        if (p2 > n) break;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            n /= p2;
            s *= p;
        }
    }
    b_ *= s;
    alpha_ = Q(n);
    Q r;
    if (exact_sqrt(alpha_, r)) {
        a_ += b_ * r;
        b_ = 0;
    }
}

Surd Surd::sqrt_of(const Q& alpha) { return Surd(0, 1, alpha); }

Surd Surd::half_power(const Q& alpha, long k)
{
    if (alpha <= 0) throw parameter_error("half_power needs alpha > 0");
    long q = k >= 0 ? k / 2 : -((-k + 1) / 2);   // floor(k/2)
    long r = k - 2 * q;                          // 0 or 1
    Q base = pow_q(alpha, q);
    if (r == 0) return Surd(base, 0, alpha);
    return Surd(0, base, alpha);
}

Q Surd::rational() const
{
    if (b_ != 0) throw domain_error("surd value is irrational: " + to_string());
    return a_;
}

int Surd::sign() const
{
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 alpha
    Q lhs = a_ * a_, rhs = b_ * b_ * alpha_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

double Surd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(alpha_.get_d()); }

std::string Surd::to_string() const
{
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str() << (b_ > 0 ? "+" : "");
    os << b_.get_str() << "*sqrt(" << alpha_.get_str() << ")";
    return os.str();
}

const Q& Surd::merge_alpha(const Surd& o) const
{
    if (o.b_ == 0) return alpha_ != 0 ? alpha_ : o.alpha_;
    if (b_ == 0) return o.alpha_;
    if (alpha_ != o.alpha_) throw parameter_error("surds over different fields");
    return alpha_;
}

Surd Surd::operator-() const
{
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Surd& Surd::operator+=(const Surd& o)
{
    Q al = merge_alpha(o);
    a_ += o.a_;
    b_ += o.b_;
    alpha_ = al;
    return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o)
{
    Q al = merge_alpha(o);
    Q na = a_ * o.a_ + b_ * o.b_ * al;
    Q nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    alpha_ = al;
    return *this;
}

Surd Surd::inverse() const
{
    if (b_ == 0) {
        if (a_ == 0) throw domain_error("division by zero surd");
        Surd r = *this;
        r.a_ = 1 / a_;
        return r;
    }
    Q n = a_ * a_ - b_ * b_ * alpha_;
    if (n == 0) throw domain_error("division by zero surd");
    Surd r = *this;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    return r;
}

Surd& Surd::operator/=(const Surd& o) { return *this *= o.inverse(); }

bool operator==(const Surd& x, const Surd& y) { return (x - y).is_zero(); }

Surd pow_s(const Surd& x, long e)
{
    if (e < 0) return pow_s(x.inverse(), -e);
    Surd r(Q(1), Q(0), x.alpha());
    Surd b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace jack
