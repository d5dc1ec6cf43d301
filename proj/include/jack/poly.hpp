#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jack/rational.hpp"

namespace jack {

// Variable ids for path-weight polynomials.
namespace var {
constexpr int g = 0;
constexpr int gp = 1;       // g'
constexpr int a = 2;        // horizontal weight base
constexpr int b = 3;        // pairing weight base
constexpr int z = 4;        // formal variable (functional equations)
inline int v(int k) { return 100 + k; }
inline int vp(int k) { return 1000 + k; }
inline int vkl(int k, int l)   // k, l >= -1, stored symmetric
{
    if (k > l) std::swap(k, l);
    return 100000 + (k + 2) * 1000 + (l + 2);
}
bool is_v(int id);
int v_index(int id);
bool is_vp(int id);
std::string name(int id);
}  // namespace var

using Monomial = std::vector<std::pair<int, int>>;   // sorted (var, exp), exp > 0

class Poly {
public:
    Poly() = default;
    Poly(const Q& c);                 // NOLINT(implicit)
    Poly(long c) : Poly(Q(c)) {}      // NOLINT(implicit)
    static Poly variable(int id, int exp = 1);

    const std::map<Monomial, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    int degree_in(int id) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Q& c);
    Poly operator-() const;

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y)
    {
        Poly r = x;
        r *= y;
        return r;
    }
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    void add_term(const Monomial& m, const Q& c);

    Poly derivative(int id) const;
    // [id^k] coefficient as a polynomial in the remaining variables.
    Poly coefficient(int id, int k) const;
    Poly substitute(int id, const Poly& value) const;
    Poly substitute(const std::function<bool(int)>& pick, const std::function<Poly(int)>& value) const;
    Q evaluate(const std::function<Q(int)>& value) const;
    double evaluate_double(const std::function<double(int)>& value) const;

    std::string to_string() const;

private:
    std::map<Monomial, Q> terms_;
};

Poly pow(const Poly& p, int e);
Monomial mono_mul(const Monomial& a, const Monomial& b);

}  // namespace jack
