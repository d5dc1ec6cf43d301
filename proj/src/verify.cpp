#include "jack/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "jack/diagram.hpp"
#include "jack/ensembles.hpp"
#include "jack/errors.hpp"
#include "jack/io.hpp"
#include "jack/limit_shape.hpp"
#include "jack/partition.hpp"
#include "jack/paths.hpp"
#include "jack/poly.hpp"
#include "jack/sampler.hpp"
#include "jack/symmetric.hpp"

namespace jack {

namespace {

// Records the first failure; later ones only bump the count.
struct Check {
    std::string first;
    long failures = 0;
    long checks = 0;

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what();
    }
    bool ok() const { return failures == 0; }
    std::string summary() const
    {
        if (ok()) return std::to_string(checks) + " checks";
        return first + " (" + std::to_string(failures) + " of " + std::to_string(checks) + " failed)";
    }
};

int bound(const VerifyOptions& o, int def) { return o.d > 0 ? o.d : def; }

const std::vector<Q>& alpha_grid()
{
    static const std::vector<Q> a{Q(1, 3), Q(1), Q(2), Q(7, 2)};
    return a;
}

std::string q(const Q& x) { return to_string(x); }

// Partitions with all parts >= 2 (path length multisets) of total in [1, max_total].
std::vector<std::vector<int>> length_multisets(int max_total)
{
    std::vector<std::vector<int>> out;
    for (int n = 2; n <= max_total; ++n)
        for (const auto& p : partitions(n))
            if (std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x >= 2; })) {
                std::vector<int> l = p.parts();
                std::reverse(l.begin(), l.end());
                out.push_back(l);
            }
    return out;
}

std::string lengths_str(const std::vector<int>& l)
{
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

Q product_of_boolean(const Partition& lam, const Q& w, const Q& h, const std::vector<int>& lengths)
{
    int m = *std::max_element(lengths.begin(), lengths.end());
    auto B = diagram_observables(AnisotropicDiagram{lam, w, h}, Observable::boolean, m);
    Q x = 1;
    for (int l : lengths) x *= B[l];
    return x;
}

std::vector<Q> spec_values(const Specialization& v, int n)
{
    std::vector<Q> out;
    for (int k = 1; k <= n; ++k) out.push_back(v(k));
    return out;
}


Surd v_mu(const std::vector<Q>& v, const Partition& mu)
{
    Q r = 1;
    for (int k : mu.parts()) r *= k <= (int)v.size() ? v[k - 1] : Q(0);
    return Surd(r);
}

std::map<Partition, Surd> law_map(const Ensemble& e)
{
    std::map<Partition, Surd> m;
    for (auto& [lam, w] : e.law()) m[lam] = w;
    return m;
}

// v_k = sum a_i^k with a = (1/2, 1/4), v_1 = 1.
std::vector<Q> tp_v(int n) { return spec_values(totally_positive_spec({Q(1, 2), Q(1, 4)}, Q(1)), n); }

Surd v_mu(const std::vector<Surd>& v, const Partition& mu)
{
    Surd r = 1;
    for (int k : mu.parts()) r *= k <= (int)v.size() ? v[k - 1] : Surd(0);
    return r;
}

// Thoma parameters th with u * th = tp((1, 1/2), u), and the matching
// character values ch_k = th_k (sqrt(alpha) / u)^{k-1} of the conditioned measure.
struct ThomaPair {
    Q u;
    std::vector<Q> th;
    std::vector<Surd> ch;
};

ThomaPair thoma_pair(const Q& alpha, const Q& u, int n)
{
    ThomaPair p{u, {}, {}};
    Specialization rho = totally_positive_spec({Q(1), Q(1, 2)}, u);
    for (int k = 1; k <= n; ++k) {
        p.th.push_back(rho(k) / u);
        p.ch.push_back(Surd(p.th.back() / pow_q(u, k - 1)) * Surd::half_power(alpha, k - 1));
    }
    return p;
}

// ---- partition_core ----

void conjugation(Check& c, const VerifyOptions& o)
{
    for (int n = 0; n <= bound(o, 12); ++n)
        for (const auto& lam : partitions(n)) {
            Partition t = lam.conjugate();
            c.expect(t.size() == n && t.conjugate() == lam, [&] { return "conjugate twice " + lam.to_string(); });
        }
}

void transition_measures(Check& c, const VerifyOptions& o)
{
    for (const Q& a : alpha_grid())
        for (int n = 0; n <= bound(o, 8); ++n)
            for (const auto& lam : partitions(n)) {
                auto m = transition_measure(profile(AnisotropicDiagram{lam, a, 1}));
                c.expect(m.is_probability() && m.moment(1) == 0,
                         [&] { return "transition measure of " + lam.to_string() + " at alpha=" + q(a); });
            }
}

void moment_boolean(Check& c, const VerifyOptions& o)
{
    for (const Q& a : alpha_grid())
        for (int n = 1; n <= bound(o, 8); ++n)
            for (const auto& lam : partitions(n)) {
                auto m = transition_measure(profile(AnisotropicDiagram{lam, a, 1}));
                auto M = moments_from_boolean(observable_sequence(m, Observable::boolean, 10));
                for (int l = 0; l <= 10; ++l)
                    c.expect(M[l] == m.moment(l), [&] {
                        return "M_" + std::to_string(l) + " from B at " + lam.to_string() + ", alpha=" + q(a);
                    });
            }
}

void low_observables(Check& c, const VerifyOptions& o)
{
    const std::vector<std::pair<Q, Q>> wh{{1, 1}, {2, 1}, {Q(1, 3), Q(3, 2)}, {Q(7, 2), 1}};
    const Observable kinds[] = {Observable::moment, Observable::boolean, Observable::free, Observable::fundamental};
    for (const auto& [w, h] : wh)
        for (int n = 1; n <= bound(o, 7); ++n)
            for (const auto& lam : partitions(n))
                for (Observable k : kinds) {
                    auto X = diagram_observables(AnisotropicDiagram{lam, w, h}, k, 2);
                    c.expect(X[1] == 0 && X[2] == w * h * n, [&] {
                        return std::string(observable_name(k)) + "_1,2 at " + lam.to_string();
                    });
                }
}

void scaling(Check& c, const VerifyOptions& o)
{
    const Observable kinds[] = {Observable::moment, Observable::boolean, Observable::free, Observable::fundamental};
    for (const Q& s : {Q(3, 2), Q(1, 3)})
        for (int n = 1; n <= bound(o, 6); ++n)
            for (const auto& lam : partitions(n))
                for (Observable k : kinds) {
                    auto base = diagram_observables(AnisotropicDiagram{lam, 2, 1}, k, 6);
                    auto sc = diagram_observables(AnisotropicDiagram{lam, 2 * s, s}, k, 6);
                    for (int l = 1; l <= 6; ++l)
                        c.expect(sc[l] == rescale_observable(base[l], l, s), [&] {
                            return std::string(observable_name(k)) + "_" + std::to_string(l) + " scaling at " +
                                   lam.to_string();
                        });
                }
}

// ---- jack_algebra ----

void orthogonality(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        for (int n = 1; n <= bound(o, 6); ++n)
            for (const auto& lam : partitions(n))
                for (const auto& nu : partitions(n)) {
                    Q ip = hall_inner(jack_polynomial(lam, a), jack_polynomial(nu, a), a);
                    Q want = lam == nu ? j_alpha(lam, a) : Q(0);
                    c.expect(ip == want, [&] { return "<J" + lam.to_string() + ",J" + nu.to_string() + "> at alpha=" + q(a); });
                }
}

void cauchy(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 2), Q(2)})
        for (int n = 1; n <= bound(o, 6); ++n) {
            const auto& P = partitions(n);
            for (const auto& mu : P)
                for (const auto& nu : P) {
                    Q s = 0;
                    for (const auto& lam : P) s += theta(mu, lam, a) * theta(nu, lam, a) / j_alpha(lam, a);
                    Q want = mu == nu ? Q(1) / (pow_q(a, mu.length()) * Q(mu.z())) : Q(0);
                    c.expect(s == want, [&] { return "[p" + mu.to_string() + " q" + nu.to_string() + "] at alpha=" + q(a); });
                }
        }
}

void omega_duality(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 2), Q(2), Q(3)})
        for (int n = 1; n <= bound(o, 6); ++n)
            for (const auto& lam : partitions(n)) {
                PowerSumPoly lhs = omega_dual(jack_polynomial(lam, 1 / a), a);
                PowerSumPoly rhs = jack_polynomial(lam.conjugate(), a) * pow_q(a, -n);
                c.expect(lhs == rhs, [&] { return "omega dual of J" + lam.to_string() + " at alpha=" + q(a); });
            }
}

void character_duality(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        for (int n = 1; n <= bound(o, 6); ++n)
            for (const auto& lam : partitions(n))
                for (const auto& mu : partitions(n))
                    c.expect(duality_character_check(lam, mu, a), [&] {
                        return "chi_" + lam.to_string() + "(" + mu.to_string() + ") at alpha=" + q(a);
                    });
}

void character_expectation(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 2), Q(2)})
        for (int d = 1; d <= bound(o, 6); ++d) {
            std::vector<std::pair<std::string, std::map<Partition, Surd>>> tables(3);
            tables[0].first = "plancherel";
            tables[1].first = "v_mu";
            tables[2].first = "N^-|mu|";
            std::vector<Q> v{1, Q(1, 3), Q(-1, 9), Q(1, 27), Q(1, 81), Q(-1, 243)};
            for (const auto& mu : partitions(d)) {
                tables[0].second[mu] = Surd(mu == Partition::ones(d) ? 1 : 0);
                tables[1].second[mu] = v_mu(v, mu);
                tables[2].second[mu] = Surd(pow_q(Q(4), -mu.norm()));
            }
            for (const auto& [tname, chi] : tables) {
                auto P = character_measure(a, d, chi);
                for (int k = 0; k <= d; ++k)
                    for (const auto& mu : partitions(k)) {
                        Surd e = 0;
                        for (const auto& [lam, p] : P) e += p * normalized_character(mu, lam, a);
                        Surd want = Surd(Q(falling(d, k))) * chi.at(mu.with_ones(d - k));
                        c.expect(e == want, [&] {
                            return "E[Ch" + mu.to_string() + "] for " + tname + ", d=" + std::to_string(d);
                        });
                    }
            }
        }
}

void nazarov_sklyanin(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 2), Q(2)})
        for (int n = 1; n <= bound(o, 5); ++n)
            for (const auto& lam : partitions(n)) {
                PowerSumPoly J = jack_polynomial(lam, a);
                auto B = diagram_observables(AnisotropicDiagram{lam, a, 1}, Observable::boolean, 6);
                for (int l = 0; l <= 4; ++l)
                    c.expect(ns_apply(l, J, a) == J * B[l + 2], [&] {
                        return "PL^" + std::to_string(l) + "P* J" + lam.to_string() + " at alpha=" + q(a);
                    });
            }
}

// ---- ensembles ----

// [t^n] exp(sum_k c_k t^k) by n e_n = sum_k k c_k e_{n-k}.
std::vector<Q> exp_series(const std::vector<Q>& coef, int N)
{
    std::vector<Q> e(N + 1, 0);
    e[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Q s = 0;
        for (int k = 1; k <= n && k <= (int)coef.size(); ++k) s += Q(k) * coef[k - 1] * e[n - k];
        e[n] = s / n;
    }
    return e;
}

void normalization(Check& c, const VerifyOptions& o)
{
    const int D = bound(o, 8);
    for (const Q& a : alpha_grid()) {
        for (int d = 1; d <= D; ++d) {
            auto total = [](const Ensemble& e) {
                Surd s = 0;
                for (auto& [lam, w] : e.law()) s += w;
                return s;
            };
            auto expect_one = [&](const Ensemble& e, const std::string& what) {
                Surd s = total(e);
                c.expect(s == Surd(1), [&] { return what + " sums to " + s.to_string() + " at d=" + std::to_string(d) + ", alpha=" + q(a); });
            };
            expect_one(Ensemble::plancherel(a, d), "plancherel");
            expect_one(Ensemble::schur_weyl_k(a, d, 3), "schur-weyl k=3");
            expect_one(Ensemble::schur_weyl_k(a, d, d + 2), "schur-weyl k=d+2");
            auto tp = thoma_pair(a, Q(3), d);
            expect_one(Ensemble::conditional_thoma(a, d, tp.ch), "conditional-thoma");
            std::map<Partition, Surd> chi;
            for (const auto& mu : partitions(d))
                chi[mu] = (Surd(mu == Partition::ones(d) ? 1 : 0) + v_mu(tp.ch, mu)) * Surd(Q(1, 2));
            expect_one(Ensemble::character(a, d, chi), "character mixture");
        }
        // Poissonized variants: sector sums times exp(-exponent) must sum to 1,
        // i.e. sector n carries [t^n] exp(exponent t).
        Q u = 2;
        Ensemble th = Ensemble::thoma(a, u, totally_positive_spec({Q(1, 2)}, Q(1)));
        Ensemble jm = Ensemble::jack_measure(a, totally_positive_spec({Q(1, 2)}, Q(1)), plancherel_specialization(Q(3)), 1);
        for (const auto* e : {&th, &jm}) {
            Q U = e->exponent();
            auto sectors = exp_series({U}, D);
            for (int n = 0; n <= D; ++n) {
                Surd s = 0;
                for (const auto& lam : partitions(n)) s += e->weight(lam);
                c.expect(s == Surd(sectors[n]), [&] {
                    return e->name() + " sector " + std::to_string(n) + " at alpha=" + q(a);
                });
            }
        }
    }
}

void measure_duality(Check& c, const VerifyOptions& o)
{
    std::vector<Q> v{1, Q(1, 3), Q(-1, 5), Q(2, 7), Q(1, 11), Q(-1, 13)};
    for (const Q& a : {Q(1, 2), Q(2), Q(3)})
        for (int d = 1; d <= bound(o, 6); ++d) {
            std::map<Partition, Surd> chi, chi_t;
            for (const auto& mu : partitions(d)) {
                chi[mu] = v_mu(v, mu);
                chi_t[mu] = mu.norm() % 2 ? -chi[mu] : chi[mu];
            }
            auto P = character_measure(a, d, chi);
            auto Pt = character_measure(1 / a, d, chi_t);
            for (const auto& lam : partitions(d))
                c.expect(Pt.at(lam) == P.at(lam.conjugate()),
                         [&] { return "dual mass at " + lam.to_string() + ", alpha=" + q(a); });
        }
}

void depoissonization(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        for (int d = 1; d <= bound(o, 6); ++d) {
            auto tp = thoma_pair(a, Q(3), d);
            auto ct = law_map(Ensemble::conditional_thoma(a, d, tp.ch));
            std::map<Partition, Surd> chi;
            for (const auto& mu : partitions(d)) chi[mu] = v_mu(tp.ch, mu);
            auto P = character_measure(a, d, chi);
            Specialization rho = totally_positive_spec({Q(1), Q(1, 2)}, tp.u);
            Q u = tp.u;
            Ensemble thoma = Ensemble::thoma(a, u, Specialization{[rho, u](int k) -> Q { return rho(k) / u; }, "v"});
            Surd sector = 0;
            for (const auto& lam : partitions(d)) sector += thoma.weight(lam);
            for (const auto& lam : partitions(d)) {
                c.expect(ct.at(lam) == P.at(lam), [&] { return "character mass at " + lam.to_string() + ", alpha=" + q(a); });
                c.expect(ct.at(lam) == thoma.weight(lam) / sector,
                         [&] { return "conditioned Thoma mass at " + lam.to_string() + ", alpha=" + q(a); });
            }
        }
}

void schur_weyl_support(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        for (long k = 1; k <= 3; ++k)
            for (int d = 1; d <= bound(o, 6); ++d) {
                Ensemble e = Ensemble::schur_weyl_k(a, d, k);
                for (const auto& lam : partitions(d)) {
                    bool zero = e.weight(lam).is_zero();
                    c.expect(zero == (lam.length() > k), [&] {
                        return "support at " + lam.to_string() + ", k=" + std::to_string(k) + ", alpha=" + q(a);
                    });
                }
            }
}

void poisson_sectors(Check& c, const VerifyOptions& o)
{
    struct Case {
        Q alpha, u;
        Specialization v;
    };
    std::vector<Case> cases{{Q(2), Q(3), totally_positive_spec({Q(1, 2)}, Q(1))},
                            {Q(1, 3), Q(1), plancherel_specialization(Q(1))},
                            {Q(7, 2), Q(2), thoma_specialization(ThomaPoint{{}, {Q(1, 3)}, Q(1)}, Q(7, 2))}};
    for (const auto& cs : cases) {
        Ensemble e = Ensemble::thoma(cs.alpha, cs.u, cs.v);
        Q U = cs.u * cs.u * cs.v(1) / cs.alpha;
        c.expect(e.exponent() == U, [&] { return "Poisson exponent at alpha=" + q(cs.alpha); });
        for (int n = 0; n <= bound(o, 8); ++n) {
            Surd s = 0;
            for (const auto& lam : partitions(n)) s += e.weight(lam);
            Q want = pow_q(U, n) / Q(factorial(n));
            c.expect(s == Surd(want), [&] { return "sector " + std::to_string(n) + " at alpha=" + q(cs.alpha); });
        }
    }
}

// ---- lattice_paths ----

// Lukasiewicz excursions without level steps at height 0, counted through
// memoized (position, height) states.
long memo_path_count(int ell)
{
    std::vector<std::vector<long>> f(ell + 1, std::vector<long>(ell + 2, 0));
    f[ell][0] = 1;
    for (int pos = ell - 1; pos >= 0; --pos)
        for (int h = 0; h <= ell; ++h) {
            long s = 0;
            if (h > 0) s += f[pos + 1][h] + f[pos + 1][h - 1];
            for (int k = 1; h + k <= ell; ++k) s += f[pos + 1][h + k];
            f[pos][h] = s;
        }
    return f[0][0];
}

void path_count(Check& c, const VerifyOptions& o)
{
    for (int l = 1; l <= bound(o, 14); ++l) {
        long n = 0;
        RibbonFilter f;
        f.pairing_count = 0;
        enumerate_ribbon({l}, f, [&](const RibbonPath&) { ++n; });
        long memo = memo_path_count(l);
        long cat = Z(binomial(2 * l, l) / (l + 1)).get_si();
        c.expect(n == memo && n <= cat, [&] {
            return "|L0(" + std::to_string(l) + ")| = " + std::to_string(n) + ", memo " + std::to_string(memo);
        });
    }
}

void height_bound(Check& c, const VerifyOptions& o)
{
    for (const auto& L : length_multisets(bound(o, 10))) {
        int total = 0;
        for (int l : L) total += l;
        enumerate_ribbon(L, {}, [&](const RibbonPath& p) {
            c.expect(p.stats().max_height < total, [&] { return "height of " + p.to_string(); });
        });
    }
}

struct PoissonCase {
    Q alpha, u;
    Specialization rho;   // u v
};

// Parameter sets with U = u^2 v_1 / alpha small enough for a 1e-12 radius
// within the Jack degree cap.
std::vector<PoissonCase> poisson_cases()
{
    return {{Q(1), Q(1, 4), plancherel_specialization(Q(1, 4))},
            {Q(2), Q(1, 4), totally_positive_spec({Q(1, 16)}, Q(1, 4))},
            {Q(1, 2), Q(1, 8), thoma_specialization(ThomaPoint{{}, {Q(1, 32)}, Q(1, 8)}, Q(1, 2))}};
}

void oracle_expectation(Check& c, const VerifyOptions& o)
{
    for (const auto& pc : poisson_cases()) {
        Q u = pc.u;
        Specialization rho = pc.rho;
        Specialization v{[u, rho](int k) -> Q { return rho(k) / u; }, "v"};
        auto vv = spec_values(v, 8);
        for (const auto& L : length_multisets(bound(o, 7))) {
            auto [C, r] = boolean_growth_bound(L, pc.alpha, u);
            Q w = pc.alpha / u, h = Q(1) / u;
            auto I = poisson_expectation(
                pc.alpha, u, v, [&](const Partition& lam) { return product_of_boolean(lam, w, h, L); }, C, r, 5e-13);
            Q fe = finite_expectation(L, pc.alpha, u, vv);
            c.expect(I.contains(fe.get_d()) && I.tail < 1e-12, [&] {
                return "E" + lengths_str(L) + " = " + q(fe) + " vs oracle " + fmt_double(I.mid) + " +- " +
                       fmt_double(I.radius) + " at alpha=" + q(pc.alpha);
            });
        }
    }
}

void depoissonized_identity(Check& c, const VerifyOptions& o)
{
    const int D = bound(o, 8);
    struct Case {
        Q alpha, u;
    };
    for (const Case& cs : {Case{Q(2), Q(3)}, Case{Q(1, 3), Q(2)}})
        for (int d = 1; d <= D; ++d) {
            auto tp = thoma_pair(cs.alpha, cs.u, 8);
            Ensemble e = Ensemble::conditional_thoma(cs.alpha, d, tp.ch);
            auto law = e.law();
            Q w = cs.alpha / cs.u, h = Q(1) / cs.u;
            for (const auto& L : length_multisets(8)) {
                Surd brute = 0;
                for (const auto& [lam, m] : law) brute += m * Surd(product_of_boolean(lam, w, h, L));
                Q formula = depoissonized_expectation(L, d, cs.alpha, cs.u, tp.th);
                c.expect(brute == Surd(formula), [&] {
                    return "E_d" + lengths_str(L) + " at d=" + std::to_string(d) + ": " + q(formula) + " vs " +
                           brute.to_string();
                });
            }
        }
}

void cumulant_consistency(Check& c, const VerifyOptions& o)
{
    // S_l = sum_n (1/n) sum_{k_1+..+k_n = l} B_{k_1} ... B_{k_n}; B_1 = 0.
    std::function<void(int, std::vector<int>&, std::vector<std::pair<std::vector<int>, Q>>&)> comps =
        [&](int rest, std::vector<int>& cur, std::vector<std::pair<std::vector<int>, Q>>& out) {
            if (rest == 0) {
                out.emplace_back(cur, Q(1, (long)cur.size()));
                return;
            }
            for (int k = 2; k <= rest; ++k) {
                cur.push_back(k);
                comps(rest - k, cur, out);
                cur.pop_back();
            }
        };
    auto s_in_b = [&](int l) {
        std::vector<std::pair<std::vector<int>, Q>> out;
        std::vector<int> cur;
        comps(l, cur, out);
        return out;
    };
    struct Case {
        Q alpha, u;
    };
    for (const Case& cs : {Case{Q(2), Q(3)}, Case{Q(1, 2), Q(1)}}) {
        auto v = tp_v(8);
        std::map<std::vector<int>, Q> fe_cache, ks_cache;
        auto fe = [&](std::vector<int> L) {
            std::sort(L.begin(), L.end());
            auto it = fe_cache.find(L);
            if (it != fe_cache.end()) return it->second;
            return fe_cache[L] = finite_expectation(L, cs.alpha, cs.u, v);
        };
        auto ks = [&](std::vector<int> L) {
            std::sort(L.begin(), L.end());
            auto it = ks_cache.find(L);
            if (it != ks_cache.end()) return it->second;
            return ks_cache[L] = finite_cumulant_S(L, cs.alpha, cs.u, v);
        };
        for (const auto& L : length_multisets(bound(o, 7))) {
            const int n = (int)L.size();
            Q from_cumulants = 0;
            for (const auto& rgs : set_partitions(n)) {
                Q prod = 1;
                for (int b = 0; b < block_count(rgs); ++b) {
                    std::vector<int> part;
                    for (int i = 0; i < n; ++i)
                        if (rgs[i] == b) part.push_back(L[i]);
                    prod *= ks(part);
                }
                from_cumulants += prod;
            }
            // E[prod S] through the B expansion of each factor.
            Q direct = 0;
            std::function<void(int, std::vector<int>&, Q)> expand = [&](int i, std::vector<int>& acc, Q coef) {
                if (i == n) {
                    direct += coef * fe(acc);
                    return;
                }
                for (const auto& [ks_, w] : s_in_b(L[i])) {
                    std::size_t mark = acc.size();
                    acc.insert(acc.end(), ks_.begin(), ks_.end());
                    expand(i + 1, acc, coef * w);
                    acc.resize(mark);
                }
            };
            std::vector<int> acc;
            expand(0, acc, Q(1));
            c.expect(from_cumulants == direct, [&] {
                return "E[S" + lengths_str(L) + "]: " + q(from_cumulants) + " vs " + q(direct);
            });
        }
    }
}

// Moments from free cumulants via M(z) = 1 + sum_k R_k z^k M(z)^k.
std::vector<Poly> moments_from_free_poly(const std::vector<Poly>& R, int L)
{
    std::vector<Poly> M(L + 1);
    M[0] = Poly(1);
    for (int n = 1; n <= L; ++n) {
        // [z^n] sum_k R_k z^k M^k uses M_0..M_{n-1} only.
        std::vector<Poly> pw(n + 1);   // M(z)^k truncated
        pw[0] = Poly(1);
        std::vector<Poly> cur = pw;
        Poly s;
        for (int k = 1; k <= n; ++k) {
            std::vector<Poly> nxt(n + 1);
            for (int i = 0; i <= n; ++i) {
                if (cur[i].is_zero()) continue;
                for (int j = 0; i + j <= n && j < n; ++j)
                    if (!M[j].is_zero()) nxt[i + j] += cur[i] * M[j];
            }
            cur = std::move(nxt);
            if (k < (int)R.size() && !R[k].is_zero()) s += R[k] * cur[n - k];
        }
        M[n] = s;
    }
    return M;
}

void free_reduction(Check& c, const VerifyOptions& o)
{
    const int L = bound(o, 10);
    std::vector<Poly> R(L + 1);
    // R_2 = v_1 = 1, R_{i+1} = v_i.
    for (int i = 1; i + 1 <= L; ++i) R[i + 1] = i == 1 ? Poly(1) : Poly::variable(var::v(i));
    auto M = moments_from_free_poly(R, L);
    for (int l = 1; l <= L; ++l) {
        Poly lm = limit_moment_poly_normalized(l).substitute(var::g, Poly(0));
        c.expect(lm == M[l], [&] { return "M_" + std::to_string(l) + " at g=0: " + lm.to_string() + " vs " + M[l].to_string(); });
    }
}

void degenerate_lengths(Check& c, const VerifyOptions&)
{
    const std::vector<std::vector<int>> Ls{{1}, {1, 2}, {3, 1}, {2, 1, 2}, {1, 1}};
    auto v = tp_v(6);
    for (const auto& L : Ls) {
        auto bad = [&](const char* f) { return std::string(f) + lengths_str(L); };
        c.expect(enumerate_ribbon(L).empty(), [&] { return bad("enumerate_ribbon"); });
        c.expect(finite_expectation_poly(L).is_zero(), [&] { return bad("finite_expectation"); });
        c.expect(finite_cumulant_S_poly(L).is_zero(), [&] { return bad("finite_cumulant_S"); });
        c.expect(finite_expectation(L, Q(2), Q(3), v) == 0, [&] { return bad("finite_expectation value"); });
        c.expect(depoissonized_expectation(L, 5, Q(2), Q(3), v) == 0, [&] { return bad("depoissonized_expectation"); });
    }
}

// ---- limit_shape ----

void jacobi_moments(Check& c, const VerifyOptions& o)
{
    for (int l = 0; l <= bound(o, 10); ++l) {
        Poly jac = jacobi_moment_poly(l, std::max(l, 1)).substitute(var::v(1), Poly(1));
        Poly luk = l == 0 ? Poly(1) : limit_moment_poly_normalized(l);
        c.expect(jac == luk, [&] { return "l=" + std::to_string(l) + ": " + jac.to_string() + " vs " + luk.to_string(); });
    }
}

void functional_equation(Check& c, const VerifyOptions& o)
{
    int L = bound(o, 12);
    c.expect(functional_equation_check(L), [&] { return "symbolic g through order " + std::to_string(L); });
    c.expect(functional_equation_check(Q(0), L), [&] { return "g = 0 (Catalan case)"; });
}

void staircase_moments(Check& c, const VerifyOptions&)
{
    const Q g(-1, 4);
    auto s = plancherel_limit_shape(g, 40);
    auto at = staircase_transition_atoms(s, 38, 39);
    for (int l = 0; l <= 6; ++l) {
        double m = 0;
        for (std::size_t i = 0; i < at.pos.size(); ++i) m += at.mass[i] * std::pow(at.pos[i], l);
        double want = l == 0 ? 1.0 : limit_moment(l, g, {1}).to_double();
        c.expect(std::abs(m - want) < 1e-4, [&] {
            return "M_" + std::to_string(l) + " = " + fmt_double(m) + " vs " + fmt_double(want);
        });
    }
}

void shape_duality(Check& c, const VerifyOptions&)
{
    for (const Q& g : {Q(1, 4), Q(1, 2)}) {
        auto a = plancherel_limit_shape(g, 20);
        auto b = plancherel_limit_shape(-g, 20).reflect();
        double lo = a.minima.front() - 1, hi = a.maxima.back();
        for (int i = 0; i <= 400; ++i) {
            double x = lo + (hi - lo) * i / 400;
            c.expect(std::abs(a.omega(x) - b.omega(x)) < 1e-9, [&] { return "omega at x=" + fmt_double(x) + ", g=" + q(g); });
        }
    }
}

void bessel_zero_values(Check& c, const VerifyOptions&)
{
    auto z = bessel_order_zeros(Q(-1, 4), 3).zeros;
    const double want_z[] = {-1.086, -0.424, 0.102};
    const double want_e[] = {1.336, 0.924, 0.647};
    auto e = edge_limits(Q(-1, 4), 3);
    for (int i = 0; i < 3; ++i) {
        c.expect(std::abs(z[i] - want_z[i]) < 1e-3, [&] { return "l_" + std::to_string(i + 1) + " = " + fmt_double(z[i]); });
        c.expect(std::abs(e[i] - want_e[i]) < 1e-3, [&] { return "edge " + std::to_string(i + 1) + " = " + fmt_double(e[i]); });
    }
}

// ---- sampler ----

void determinism(Check& c, const VerifyOptions&)
{
    Ensemble e = Ensemble::plancherel(Q(2), 6);
    c.expect(run_exact(e, 42, 100).samples == run_exact(e, 42, 100).samples, [] { return "exact run repeat"; });
    c.expect(run_growth(Q(1, 3), 40, 7, 20).samples == run_growth(Q(1, 3), 40, 7, 20).samples,
             [] { return "growth run repeat"; });
}

void growth_law_check(Check& c, const VerifyOptions& o)
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        c.expect(validate_growth(a, bound(o, 8)), [&] { return "growth law at alpha=" + q(a); });
}

void monte_carlo(Check& c, const VerifyOptions&)
{
    const Q alpha(2), u(3);
    const int d = 6;
    auto tp = thoma_pair(alpha, u, d);
    SampleRun run = run_exact(Ensemble::conditional_thoma(alpha, d, tp.ch), 2024, 10000);
    auto st = empirical_stats(run, {diagram_observable(Observable::boolean, 3, alpha / u, Q(1) / u, "B3")});
    double want = depoissonized_expectation({3}, d, alpha, u, tp.th).get_d();
    double z = std::abs(st[0].mean - want) / st[0].stderr_mean();
    c.expect(z < 4, [&] { return "B3 mean " + fmt_double(st[0].mean) + " vs " + fmt_double(want) + " (" + fmt_double(z) + " sigma)"; });
}

// ---- cli ----

void output_stability(Check& c, const VerifyOptions&)
{
    Ensemble e = Ensemble::plancherel(Q(1, 2), 5);
    c.expect(samples_jsonl(run_exact(e, 9, 50)) == samples_jsonl(run_exact(e, 9, 50)), [] { return "samples JSONL"; });
    auto s = plancherel_limit_shape(Q(-1, 4), 8);
    c.expect(staircase_csv(s, -1, 3, 50) == staircase_csv(plancherel_limit_shape(Q(-1, 4), 8), -1, 3, 50),
             [] { return "staircase CSV"; });
}

struct Suite {
    SuiteInfo info;
    std::function<void(Check&, const VerifyOptions&)> run;
};

const std::vector<Suite>& registry()
{
    static const std::vector<Suite> r = [] {
        std::vector<Suite> s{
            {{"conjugation", "partition_core", "conjugation is an involution"}, conjugation},
            {{"transition-measure", "partition_core", "transition measures are centred probability measures"}, transition_measures},
            {{"moment-boolean", "partition_core", "moments recovered from Boolean cumulants"}, moment_boolean},
            {{"low-observables", "partition_core", "X_1 = 0 and X_2 = wh|lambda|"}, low_observables},
            {{"scaling", "partition_core", "X_l(T_{cw,ch}) = c^l X_l(T_{w,h})"}, scaling},
            {{"orthogonality", "jack_algebra", "Jack polynomials are orthogonal with norms j_lambda"}, orthogonality},
            {{"cauchy", "jack_algebra", "finite-degree Cauchy identity"}, cauchy},
            {{"omega-duality", "jack_algebra", "omega maps J^(1/alpha)_lambda to alpha^-|lambda| J_lambda'"}, omega_duality},
            {{"character-duality", "jack_algebra", "chi_lambda(mu) = (-1)^||mu|| chi'_lambda'(mu)"}, character_duality},
            {{"character-expectation", "jack_algebra", "E[Ch_mu] = d falling |mu| times chi_d(mu)"}, character_expectation},
            {{"nazarov-sklyanin", "jack_algebra", "P L^l P* J_lambda = B_{l+2} J_lambda"}, nazarov_sklyanin},
            {{"normalization", "ensembles", "every ensemble has total mass 1"}, normalization},
            {{"measure-duality", "ensembles", "conjugation duality of character measures"}, measure_duality},
            {{"depoissonization", "ensembles", "conditioned Thoma measure is the v_mu character measure"}, depoissonization},
            {{"schur-weyl-support", "ensembles", "Schur-Weyl masses vanish beyond N sqrt(alpha) rows"}, schur_weyl_support},
            {{"poisson-sectors", "ensembles", "Thoma sector Y_d has mass e^-U U^d / d!"}, poisson_sectors},
            {{"path-count", "lattice_paths", "|L0(l)| matches memoized counting and is at most Catalan(l)"}, path_count},
            {{"height-bound", "lattice_paths", "ribbon paths stay below height l_1 + ... + l_n"}, height_bound},
            {{"oracle-expectation", "lattice_paths", "ribbon-path expectation equals the Poisson oracle"}, oracle_expectation},
            {{"depoissonized-identity", "lattice_paths", "falling-factorial formula equals the Y_d average"}, depoissonized_identity},
            {{"cumulant-consistency", "lattice_paths", "S cumulants recombine to expectations"}, cumulant_consistency},
            {{"free-reduction", "lattice_paths", "g = 0 moments come from free cumulants v_i"}, free_reduction},
            {{"degenerate-lengths", "lattice_paths", "any length 1 gives 0"}, degenerate_lengths},
            {{"jacobi-moments", "limit_shape", "Jacobi operator moments equal the Lukasiewicz sums"}, jacobi_moments},
            {{"functional-equation", "limit_shape", "z G(z) - 1 = G(z) G(z - g)"}, functional_equation},
            {{"staircase-moments", "limit_shape", "staircase transition atoms reproduce the limit moments"}, staircase_moments},
            {{"shape-duality", "limit_shape", "the g and -g limit shapes are mirror images"}, shape_duality},
            {{"bessel-zeros", "limit_shape", "Bessel order zeros and edge limits at g = -1/4"}, bessel_zero_values},
            {{"determinism", "sampler", "seeded runs are reproducible"}, determinism},
            {{"growth-law", "sampler", "growth chain rule equals the Jack-Plancherel law"}, growth_law_check},
            {{"monte-carlo", "sampler", "sampled B_3 mean matches the depoissonized formula"}, monte_carlo},
            {{"output-stability", "cli", "exports are byte-stable"}, output_stability},
        };
        std::sort(s.begin(), s.end(), [](const Suite& a, const Suite& b) { return a.info.name < b.info.name; });
        return s;
    }();
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& s : registry()) out.push_back(s.info);
        return out;
    }();
    return infos;
}

bool is_suite(const std::string& name)
{
    for (const auto& s : registry())
        if (s.info.name == name) return true;
    return false;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt)
{
    for (const auto& s : registry()) {
        if (s.info.name != name) continue;
        SuiteResult r{name, s.info.anchor, false, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
            Check c;
            s.run(c, opt);
            r.pass = c.ok();
            r.detail = c.summary();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw parameter_error("unknown verify suite: " + name);
}

}  // namespace jack
