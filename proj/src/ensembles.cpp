#include "jack/ensembles.hpp"

#include <atomic>
#include <cmath>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "jack/diagram.hpp"

namespace jack {

namespace {

std::atomic<int> g_positivity_degree{6};

void check_alpha(const Q& alpha)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
}

void check_decreasing_nonneg(const std::vector<Q>& x, const char* what)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0) throw parameter_error(std::string(what) + " must be nonnegative");
        if (i && x[i] > x[i - 1]) throw parameter_error(std::string(what) + " must be weakly decreasing");
    }
}

Q power_sum(const std::vector<Q>& x, int k)
{
    Q s = 0;
    for (const auto& t : x) s += pow_q(t, k);
    return s;
}

Z ceil_q(const Q& x)
{
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

}  // namespace

void ThomaPoint::validate() const
{
    check_decreasing_nonneg(a, "Thoma a");
    check_decreasing_nonneg(b, "Thoma b");
    if (power_sum(a, 1) + power_sum(b, 1) > c) throw parameter_error("Thoma point violates sum(a)+sum(b) <= c");
}

Specialization thoma_specialization(const ThomaPoint& t, const Q& alpha)
{
    check_alpha(alpha);
    t.validate();
    return {[t, alpha](int k) -> Q {
                if (k == 1) return t.c;
                return power_sum(t.a, k) + pow_q(-alpha, 1 - k) * power_sum(t.b, k);
            },
            "thoma"};
}

Specialization totally_positive_spec(const std::vector<Q>& a, const Q& c)
{
    check_decreasing_nonneg(a, "a");
    if (power_sum(a, 1) > c) throw parameter_error("totally positive specialization needs sum(a) <= c");
    return {[a, c](int k) -> Q { return k == 1 ? c : power_sum(a, k); }, "totally-positive"};
}

bool jack_positive(const Specialization& rho, const Q& alpha, int max_degree)
{
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& lam : partitions(n))
            if (rho.eval(jack_polynomial(lam, alpha)) < 0) return false;
    return true;
}

double Mass::to_double() const { return value.to_double() * std::exp(-exponent.get_d()); }

// ---- Ensemble ----

void Ensemble::set_positivity_degree(int d)
{
    if (d < 0 || d > 14) throw parameter_error("positivity degree must lie in [0, 14]");
    g_positivity_degree = d;
}

Ensemble Ensemble::plancherel(const Q& alpha, int d)
{
    check_alpha(alpha);
    if (d < 0) throw parameter_error("d must be nonnegative");
    return Ensemble(variant::Plancherel{alpha, d});
}

Ensemble Ensemble::schur_weyl(const Q& alpha, int d, const Surd& N)
{
    check_alpha(alpha);
    if (N.is_zero()) throw parameter_error("N must be nonzero");
    Ensemble e(variant::SchurWeyl{alpha, d, N});
    e.check_positivity();
    return e;
}

Ensemble Ensemble::schur_weyl_k(const Q& alpha, int d, long k)
{
    check_alpha(alpha);
    return schur_weyl(alpha, d, Surd(Q(k)) * Surd::half_power(alpha, -1));
}

Ensemble Ensemble::thoma(const Q& alpha, const Q& u, const Specialization& v)
{
    check_alpha(alpha);
    if (u <= 0) throw parameter_error("u must be positive");
    if (u * u * v(1) / alpha <= 0) throw parameter_error("Thoma measure needs v_1 > 0");
    Ensemble e(variant::Thoma{alpha, u, v});
    e.check_positivity();
    return e;
}

Ensemble Ensemble::conditional_thoma(const Q& alpha, int d, std::vector<Surd> v)
{
    check_alpha(alpha);
    if (v.empty() || v[0] != Surd(1)) throw parameter_error("conditional Thoma measure needs v_1 = 1");
    Ensemble e(variant::ConditionalThoma{alpha, d, std::move(v)});
    e.check_positivity();
    return e;
}

Ensemble Ensemble::character(const Q& alpha, int d, std::map<Partition, Surd> chi)
{
    check_alpha(alpha);
    auto law = character_measure(alpha, d, chi);
    return Ensemble(variant::Character{alpha, d, std::move(chi), std::move(law)});
}

Ensemble Ensemble::jack_measure(const Q& alpha, const Specialization& rho1, const Specialization& rho2, int support)
{
    check_alpha(alpha);
    if (support < 1) throw parameter_error("support bound must be >= 1");
    Ensemble e(variant::JackMeasure{alpha, rho1, rho2, support});
    e.check_positivity();
    return e;
}

std::string Ensemble::name() const
{
    static const char* names[] = {"plancherel", "schur-weyl", "thoma", "conditional-thoma", "character",
                                  "jack-measure"};
    return names[v_.index()];
}

Q Ensemble::alpha() const
{
    return std::visit([](const auto& x) { return x.alpha; }, v_);
}

bool Ensemble::fixed_size() const
{
    return !std::holds_alternative<variant::Thoma>(v_) && !std::holds_alternative<variant::JackMeasure>(v_);
}

int Ensemble::d() const
{
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, variant::Thoma> || std::is_same_v<T, variant::JackMeasure>)
                throw domain_error("Poissonized ensemble has no fixed size");
            else
                return x.d;
        },
        v_);
}

Q Ensemble::exponent() const
{
    if (auto* t = std::get_if<variant::Thoma>(&v_)) return t->u * t->u * t->v(1) / t->alpha;
    if (auto* j = std::get_if<variant::JackMeasure>(&v_)) {
        Q s = 0;
        for (int k = 1; k <= j->support; ++k) s += j->rho1(k) * j->rho2(k) / (k * j->alpha);
        return s;
    }
    return 0;
}

Surd Ensemble::weight(const Partition& lam) const
{
    return std::visit(
        [&](const auto& x) -> Surd {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, variant::Plancherel>) {
                if (lam.size() != x.d) throw domain_error("partition outside Y_d");
                return Surd(pow_q(x.alpha, x.d) * Q(factorial(x.d)) / j_alpha(lam, x.alpha));
            } else if constexpr (std::is_same_v<T, variant::SchurWeyl>) {
                if (lam.size() != x.d) throw domain_error("partition outside Y_d");
                Surd sa = Surd::sqrt_of(x.alpha);
                Surd prod = Surd(1);
                for (int i = 0; i < lam.length(); ++i)
                    for (int j = 0; j < lam[i]; ++j) prod *= x.N * sa + Surd(Q(j) * x.alpha - i);
                Surd pre = Surd(Q(factorial(x.d)) / j_alpha(lam, x.alpha)) * pow_s(sa, x.d) / pow_s(x.N, x.d);
                return pre * prod;
            } else if constexpr (std::is_same_v<T, variant::Thoma>) {
                Q u = x.u;
                Specialization uv{[u, v = x.v](int k) -> Q { return u * v(k); }, "u.v"};
                return Surd(uv.eval(jack_polynomial(lam, x.alpha)) * pow_q(u, lam.size()) / j_alpha(lam, x.alpha));
            } else if constexpr (std::is_same_v<T, variant::ConditionalThoma>) {
                if (lam.size() != x.d) throw domain_error("partition outside Y_d");
                Surd s = 0;
                for (const auto& mu : partitions(x.d)) {
                    Q th = theta(mu, lam, x.alpha);
                    if (th == 0) continue;
                    Surd vm = 1;
                    for (int k : mu.parts()) vm *= k <= (int)x.v.size() ? x.v[k - 1] : Surd(0);
                    if (vm.is_zero()) continue;
                    s += Surd(th) * Surd::half_power(x.alpha, -mu.norm()) * vm;
                }
                return s * Surd(pow_q(x.alpha, x.d) * Q(factorial(x.d)) / j_alpha(lam, x.alpha));
            } else if constexpr (std::is_same_v<T, variant::Character>) {
                auto it = x.law.find(lam);
                if (it == x.law.end()) throw domain_error("partition outside Y_d");
                return it->second;
            } else {
                PowerSumPoly J = jack_polynomial(lam, x.alpha);
                return Surd(x.rho1.eval(J) * x.rho2.eval(J) / j_alpha(lam, x.alpha));
            }
        },
        v_);
}

Mass Ensemble::mass(const Partition& lam) const
{
    Mass m{weight(lam), exponent()};
    if (!std::holds_alternative<variant::Character>(v_) && m.value.sign() < 0)
        throw positivity_error("negative mass at " + lam.to_string() + " for " + name());
    return m;
}

Surd Ensemble::sector_weight_closed_form(int n) const
{
    if (fixed_size()) return Surd(n == d() ? 1 : 0);
    if (auto* t = std::get_if<variant::Thoma>(&v_)) {
        Q U = exponent();
        (void)t;
        return Surd(pow_q(U, n) / Q(factorial(n)));
    }
    const auto& j = std::get<variant::JackMeasure>(v_);
    Q s = 0;
    for (const auto& mu : partitions(n)) s += j.rho1.eval(mu) * j.rho2.eval(mu) / (pow_q(j.alpha, mu.length()) * Q(mu.z()));
    return Surd(s);
}

std::vector<std::pair<Partition, Surd>> Ensemble::law() const
{
    int n = d();
    std::vector<std::pair<Partition, Surd>> out;
    for (const auto& lam : partitions(n)) out.emplace_back(lam, weight(lam));
    return out;
}

void Ensemble::check_positivity() const
{
    int deg = g_positivity_degree.load();
    if (fixed_size()) {
        if (std::holds_alternative<variant::Character>(v_)) return;
        if (d() > jack_degree_cap()) return;   // checked lazily by mass()
        for (const auto& [lam, w] : law())
            if (w.sign() < 0) throw positivity_error("negative mass at " + lam.to_string() + " for " + name());
        return;
    }
    for (int n = 1; n <= deg; ++n)
        for (const auto& lam : partitions(n))
            if (weight(lam).sign() < 0)
                throw positivity_error("specialization is not Jack-positive at " + lam.to_string());
}

// ---- character measures ----

namespace {

// Solves A x = b over Q; A square.
std::vector<Q> solve(std::vector<std::vector<Q>> A, std::vector<Q> b)
{
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) throw internal_error("singular character system");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Q f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Q> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace

std::map<Partition, Surd> character_measure(const Q& alpha, int d, const std::map<Partition, Surd>& chi)
{
    check_alpha(alpha);
    const auto& P = partitions(d);
    auto one = chi.find(Partition::ones(d));
    if (one == chi.end() || one->second != Surd(1)) throw parameter_error("character must satisfy chi(1^d) = 1");
    std::size_t n = P.size();
    // sum_lam P(lam) z_mu theta_mu(lam)/d! = chi(mu) alpha^{|mu|_norm/2}
    std::vector<std::vector<Q>> A(n, std::vector<Q>(n));
    Q df = Q(factorial(d));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t l = 0; l < n; ++l) A[m][l] = Q(P[m].z()) * theta(P[m], P[l], alpha) / df;
    std::vector<Q> ra(n), rb(n);
    Q radicand = 0;
    for (std::size_t m = 0; m < n; ++m) {
        auto it = chi.find(P[m]);
        Surd c = it == chi.end() ? Surd(0) : it->second;
        c *= Surd::half_power(alpha, P[m].norm());
        ra[m] = c.a();
        rb[m] = c.b();
        if (c.b() != 0) {
            if (radicand != 0 && radicand != c.alpha()) throw parameter_error("character values over mixed fields");
            radicand = c.alpha();
        }
    }
    std::vector<Q> xa = solve(A, ra);
    std::vector<Q> xb = radicand == 0 ? std::vector<Q>(n, Q(0)) : solve(A, rb);
    std::map<Partition, Surd> out;
    for (std::size_t l = 0; l < n; ++l) out[P[l]] = radicand == 0 ? Surd(xa[l]) : Surd(xa[l], xb[l], radicand);
    return out;
}

ExtendedCharacter extend_character(const std::map<Partition, Surd>& chi_d, int d)
{
    return [chi_d, d](const Partition& mu) -> Surd {
        if (mu.size() > d) throw domain_error("character argument larger than d");
        auto it = chi_d.find(mu.with_ones(d - mu.size()));
        return it == chi_d.end() ? Surd(0) : it->second;
    };
}

Surd conditional_cumulant(const ExtendedCharacter& chi, const std::vector<Partition>& parts, int d)
{
    int total = 0;
    for (const auto& p : parts) total += p.size();
    if (total > d) throw domain_error("cumulant arguments exceed d");
    int n = static_cast<int>(parts.size());
    Surd k = 0;
    for (const auto& rgs : set_partitions(n)) {
        int nb = block_count(rgs);
        std::vector<Partition> blocks(nb);
        for (int i = 0; i < n; ++i) blocks[rgs[i]] = blocks[rgs[i]] * parts[i];
        Surd t = Surd(Q(factorial(nb - 1)) * ((nb - 1) % 2 ? -1 : 1));
        for (const auto& b : blocks) t *= chi(b);
        k += t;
    }
    return k;
}

// ---- regimes ----

Flavor AsymptoticRegime::flavor() const
{
    if (g > 0) return Flavor::high;
    if (g < 0) return Flavor::low;
    return Flavor::fixed;
}

Q AsymptoticRegime::v(int k) const
{
    if (k == 1) return 1;
    Q s = power_sum(a, k);
    return (g < 0 && k % 2 == 0) ? Q(-s) : s;
}

bool AsymptoticRegime::admissible() const
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || (i && a[i] > a[i - 1])) return false;
    return power_sum(a, 1) <= 1;
}

RegimeParams regime_sequences(const AsymptoticRegime& r, int d, int kmax)
{
    if (r.g == 0) throw regime_error("fixed-temperature sequences are supplied by the caller");
    if (d < 1) throw parameter_error("d must be positive");
    if (!r.admissible()) throw regime_error("regime parameters are not admissible");
    RegimeParams p;
    Surd ratio;
    if (r.g > 0) {
        p.alpha = r.g * r.g * d;
        p.u = Q(ceil_q(r.g * d));
        ratio = Surd::sqrt_of(p.alpha) / Surd(p.u);
    } else {
        p.alpha = Q(1) / (r.g * r.g * d);
        Q c = Q(ceil_q(-r.g * d));
        p.u = c * p.alpha;
        ratio = -(Surd::sqrt_of(p.alpha) * Surd(c)).inverse();
    }
    p.v.push_back(Surd(1));
    for (int k = 2; k <= kmax; ++k) p.v.push_back(pow_s(ratio, k - 1) * Surd(power_sum(r.a, k)));
    return p;
}

// ---- Poisson oracle ----

bool Interval::contains(double x) const { return std::fabs(x - mid) <= radius; }

std::pair<Q, int> boolean_growth_bound(const std::vector<int>& lengths, const Q& alpha, const Q& u)
{
    // |B_l(T_{w,h} lam)| <= w h n (max(w,h) n)^{l-2}, B_1 = 0
    Q w = alpha / u, h = Q(1) / u;
    Q m = w > h ? w : h;
    Q C = 1;
    int r = 0;
    for (int l : lengths) {
        if (l == 1) return {Q(0), 0};
        C *= w * h * pow_q(m, l - 2);
        r += l - 1;
    }
    return {C, r};
}

Interval poisson_expectation(const Q& alpha, const Q& u, const Specialization& v,
                             const std::function<Q(const Partition&)>& obs, const Q& C, int r, double tail_eps,
                             int max_degree)
{
    using big = boost::multiprecision::cpp_dec_float_50;
    check_alpha(alpha);
    Q Uq = u * u * v(1) / alpha;
    if (Uq <= 0) throw parameter_error("Poisson parameter must be positive");
    auto to_big = [](const Q& x) { return big(x.get_num().get_str()) / big(x.get_den().get_str()); };
    big U = to_big(Uq);
    big eU = exp(-U);
    big Cb = to_big(C);
    // tail for degrees > D: t_{D+1} / (1 - q), t_i = C i^r U^i / i!
    auto tail = [&](int D) -> big {
        big i1 = D + 1;
        big t = Cb * pow(i1, r) * pow(U, D + 1);
        for (int i = 2; i <= D + 1; ++i) t /= i;
        big q = pow(big(D + 2) / i1, r) * U / big(D + 2);
        if (q >= 1) return big(1e300);
        return eU * t / (1 - q);
    };
    int D = 0;
    while (tail(D) >= big(tail_eps)) {
        ++D;
        if (D > max_degree || D > jack_degree_cap())
            throw truncation_error("Poisson tail bound not reached within degree cap");
    }
    Ensemble e = Ensemble::thoma(alpha, u, v);
    Q S = 0;
    for (int n = 0; n <= D; ++n)
        for (const auto& lam : partitions(n)) {
            Q w = e.weight(lam).rational();
            if (w < 0) throw positivity_error("negative Thoma weight");
            if (w != 0) S += w * obs(lam);
        }
    big mid = eU * to_big(S);
    Interval out;
    out.mid = mid.convert_to<double>();
    out.tail = tail(D).convert_to<double>();
    // plus the rounding of mid to double
    out.radius = out.tail + std::fabs(out.mid) * 0x1.0p-52 + 1e-300;
    out.degree = D;
    return out;
}

}  // namespace jack
