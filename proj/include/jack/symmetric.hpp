#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jack/partition.hpp"
#include "jack/rational.hpp"

namespace jack {

// Element of the ring of symmetric functions written in power sums:
// a finite sum of c_mu p_mu. Zero coefficients are never stored.
class PowerSumPoly {
public:
    PowerSumPoly() = default;
    static PowerSumPoly p(const Partition& mu, const Q& c = 1);
    static PowerSumPoly constant(const Q& c) { return p(Partition(), c); }

    const std::map<Partition, Q>& terms() const { return terms_; }
    Q coeff(const Partition& mu) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const;       // max |mu|, -1 for zero

    void add(const Partition& mu, const Q& c);
    PowerSumPoly& operator+=(const PowerSumPoly& o);
    PowerSumPoly& operator-=(const PowerSumPoly& o);
    PowerSumPoly& operator*=(const Q& c);
    friend PowerSumPoly operator+(PowerSumPoly x, const PowerSumPoly& y) { return x += y; }
    friend PowerSumPoly operator-(PowerSumPoly x, const PowerSumPoly& y) { return x -= y; }
    friend PowerSumPoly operator*(PowerSumPoly x, const Q& c) { return x *= c; }
    friend PowerSumPoly operator*(const PowerSumPoly& x, const PowerSumPoly& y);
    friend bool operator==(const PowerSumPoly& x, const PowerSumPoly& y) { return x.terms_ == y.terms_; }

    PowerSumPoly times_p(int k) const;                         // p_k * f
    PowerSumPoly d_dp(int k) const;                            // d f / d p_k

    // Renders e.g. "p1^2 + 2*p2" with the parameter written as a number.
    std::string to_string() const;

private:
    std::map<Partition, Q> terms_;
};

// <p_mu, p_nu> = delta alpha^{l(mu)} z_mu, extended bilinearly.
Q hall_inner(const PowerSumPoly& f, const PowerSumPoly& g, const Q& alpha);

// p_r -> (-1)^{r-1} alpha^{-1} p_r, multiplicatively.
PowerSumPoly omega_dual(const PowerSumPoly& f, const Q& alpha);

// Degree cap for the per-(d, alpha) bases; default 12.
void set_jack_degree_cap(int d);
int jack_degree_cap();

PowerSumPoly jack_polynomial(const Partition& lam, const Q& alpha);

// theta_mu(lam) = [p_mu] J_lam.
Q theta(const Partition& mu, const Partition& lam, const Q& alpha);

// Monomial symmetric function in power sums.
PowerSumPoly monomial_in_p(const Partition& lam);

// alpha^{-|mu|_norm/2} z_mu theta_mu(lam) / d!
Surd irreducible_character(const Partition& lam, const Partition& mu, const Q& alpha);

// |lam| falling |mu| times chi_lam(mu 1^{|lam|-|mu|}), or 0 when |mu| > |lam|.
Surd normalized_character(const Partition& mu, const Partition& lam, const Q& alpha);

bool duality_character_check(const Partition& lam, const Partition& mu, const Q& alpha);

// P L^ell P^dagger applied to f.
PowerSumPoly ns_apply(int ell, const PowerSumPoly& f, const Q& alpha);

// Algebra homomorphism rho given by its values on the p_k.
struct Specialization {
    std::function<Q(int)> pk;
    std::string label;

    Q operator()(int k) const { return pk(k); }
    Q eval(const Partition& mu) const;
    Q eval(const PowerSumPoly& f) const;
};

Specialization finite_specialization(std::vector<Q> values, std::string label = "finite");  // values[k-1] = rho(p_k)
Specialization plancherel_specialization(const Q& u);   // rho(p_k) = u delta_{k1}

}  // namespace jack
