#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jack/partition.hpp"
#include "jack/rational.hpp"
#include "jack/symmetric.hpp"

namespace jack {

struct ThomaPoint {
    std::vector<Q> a;
    std::vector<Q> b;
    Q c = 0;

    void validate() const;   // throws parameter_error
};

Specialization thoma_specialization(const ThomaPoint& t, const Q& alpha);
Specialization totally_positive_spec(const std::vector<Q>& a, const Q& c);

// J_lam(rho) >= 0 for all |lam| <= max_degree.
bool jack_positive(const Specialization& rho, const Q& alpha, int max_degree);

// A mass of the form value * exp(-exponent).
struct Mass {
    Surd value;
    Q exponent = 0;

    double to_double() const;
};

namespace variant {
struct Plancherel {
    Q alpha;
    int d;
};
struct SchurWeyl {
    Q alpha;
    int d;
    Surd N;
};
struct Thoma {
    Q alpha;
    Q u;
    Specialization v;   // v_k; the measure uses rho(p_k) = u v_k
};
struct ConditionalThoma {
    Q alpha;
    int d;
    std::vector<Surd> v;   // v[0] = v_1 = 1
};
struct Character {
    Q alpha;
    int d;
    std::map<Partition, Surd> chi;
    std::map<Partition, Surd> law;   // solved at construction
};
struct JackMeasure {
    Q alpha;
    Specialization rho1;
    Specialization rho2;
    int support;   // rho1(p_k) rho2(p_k) = 0 for k > support
};
}  // namespace variant

class Ensemble {
public:
    using Variant = std::variant<variant::Plancherel, variant::SchurWeyl, variant::Thoma,
                                 variant::ConditionalThoma, variant::Character, variant::JackMeasure>;

    static Ensemble plancherel(const Q& alpha, int d);
    static Ensemble schur_weyl(const Q& alpha, int d, const Surd& N);
    // N = k / sqrt(alpha), the case where the masses are rational.
    static Ensemble schur_weyl_k(const Q& alpha, int d, long k);
    static Ensemble thoma(const Q& alpha, const Q& u, const Specialization& v);
    static Ensemble conditional_thoma(const Q& alpha, int d, std::vector<Surd> v);
    static Ensemble character(const Q& alpha, int d, std::map<Partition, Surd> chi);
    // support: a K with rho1(p_k) rho2(p_k) = 0 for all k > K.
    static Ensemble jack_measure(const Q& alpha, const Specialization& rho1, const Specialization& rho2, int support);

    // Build-time positivity checks run up to this degree (default 6).
    static void set_positivity_degree(int d);

    const Variant& get() const { return v_; }
    std::string name() const;
    Q alpha() const;
    bool fixed_size() const;
    int d() const;   // throws for Poissonized variants

    Mass mass(const Partition& lam) const;
    // Rational (or surd) part of the mass without the exp factor.
    Surd weight(const Partition& lam) const;
    // Closed form of sum over Y_n of weight(lam): U^n / n! style identities.
    Surd sector_weight_closed_form(int n) const;
    Q exponent() const;

    // Exact law over Y_d for fixed-size variants.
    std::vector<std::pair<Partition, Surd>> law() const;

private:
    explicit Ensemble(Variant v) : v_(std::move(v)) {}
    void check_positivity() const;
    Variant v_;
};

// Solves chi = sum_lam P(lam) chi_lam on Y_d.
std::map<Partition, Surd> character_measure(const Q& alpha, int d, const std::map<Partition, Surd>& chi);

// chi defined on Y_{<= d} by padding with ones.
using ExtendedCharacter = std::function<Surd(const Partition&)>;
ExtendedCharacter extend_character(const std::map<Partition, Surd>& chi_d, int d);

// Set-partition Moebius expansion of the conditional cumulant.
Surd conditional_cumulant(const ExtendedCharacter& chi, const std::vector<Partition>& parts, int d);

enum class Flavor { fixed, high, low };

struct AsymptoticRegime {
    Q g = 0;
    Q gp = 0;
    std::vector<Q> a;   // the sequence a_1 >= a_2 >= ... >= 0 with sum <= 1
    Flavor flavor() const;
    // Limit parameters v_k (v_1 = 1): sum a_i^k, with the sign (-1)^{k-1} when g < 0.
    Q v(int k) const;
    bool admissible() const;
};

struct RegimeParams {
    Q alpha;
    Q u;
    std::vector<Surd> v;   // v[k-1] = v_k^{(d)}, k = 1..kmax
};

RegimeParams regime_sequences(const AsymptoticRegime& r, int d, int kmax = 8);

struct Interval {
    double mid = 0;
    double radius = 0;
    int degree = 0;   // truncation degree D
    double tail = 0;  // certified Poisson tail bound, part of radius
    bool contains(double x) const;
};

// Sum over |lam| <= D of Thoma mass times obs, with certified tail radius.
// The growth bound is |obs(lam)| <= C |lam|^r.
Interval poisson_expectation(const Q& alpha, const Q& u, const Specialization& v,
                             const std::function<Q(const Partition&)>& obs, const Q& C, int r,
                             double tail_eps, int max_degree = 14);

// Default (C, r) for a product of B_{l_j}(Lambda_{(alpha;u)}).
std::pair<Q, int> boolean_growth_bound(const std::vector<int>& lengths, const Q& alpha, const Q& u);

}  // namespace jack
