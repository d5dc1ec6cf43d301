#include <doctest.h>

#include "jack/ensembles.hpp"
#include "jack/limit_shape.hpp"
#include "jack/paths.hpp"
#include "oracles.hpp"

using namespace jack;

namespace {

// Lukasiewicz excursions of length ell without horizontal steps at height 0.
long l0_count(int ell)
{
    std::vector<long> f(ell + 2, 0);
    f[0] = 1;
    for (int s = 0; s < ell; ++s) {
        std::vector<long> g(ell + 2, 0);
        for (int h = 0; h <= ell; ++h) {
            if (!f[h]) continue;
            if (h > 0) g[h - 1] += f[h], g[h] += f[h];
            for (int k = 1; h + k <= ell; ++k) g[h + k] += f[h];
        }
        f = g;
    }
    return f[0];
}

Poly signed_v(const Poly& p, bool flip_g)
{
    return p.substitute([&](int id) { return (id == var::g && flip_g) || (var::is_v(id) && var::v_index(id) % 2 == 0); },
                        [](int id) { return -Poly::variable(id); });
}

// v_k = p_k of a = (1/2, 1/4) with p_1 = 1.
std::vector<Q> th_values(int n)
{
    Specialization s = totally_positive_spec({Q(1, 2), Q(1, 4)}, Q(1));
    std::vector<Q> v;
    for (int k = 1; k <= n; ++k) v.push_back(s(k));
    return v;
}

}  // namespace

TEST_CASE("single-site path counts")
{
    for (int l = 1; l <= 12; ++l) {
        RibbonFilter f;
        f.pairing_count = 0;
        long n = (long)enumerate_ribbon({l}, f).size();
        CHECK(n == l0_count(l));
        CHECK(n <= oracle::catalan(l));
    }
    // Motzkin excursions without horizontal steps at height 0: Riordan numbers.
    const long riordan[] = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232};
    for (int l = 1; l <= 9; ++l) CHECK((long)enumerate_motzkin(l).size() == riordan[l]);
}

TEST_CASE("excursion encoding round-trips")
{
    for (const auto& e : enumerate_lukasiewicz(6)) {
        CHECK(Excursion::from_steps(e.steps()).heights == e.heights);
        for (int h : e.heights) CHECK(h >= 0);
    }
    CHECK_THROWS_AS(Excursion::from_steps({-1, 1}), parameter_error);
}

TEST_CASE("Plancherel moments")
{
    CHECK(limit_moment(4, Q(1, 2), {1}) == Surd(Q(9, 4)));
    CHECK(limit_moment(2, Q(5), {1}) == Surd(1));
    CHECK(limit_moment(3, Q(5), {1}) == Surd(5));
    CHECK(limit_moment(1, Q(5), {1}).is_zero());
    for (int l = 1; l <= 9; ++l) {
        Poly pl = limit_moment_poly_normalized(l).substitute(
            [](int id) { return var::is_v(id) && var::v_index(id) >= 2; }, [](int) { return Poly(0); });
        CHECK(pl == oracle::motzkin_sum(l));
    }
}

TEST_CASE("moments are Jacobi matrix entries")
{
    for (int l = 1; l <= 8; ++l) CHECK(limit_moment_poly_normalized(l) == oracle::jacobi_power(l, false));
}

TEST_CASE("v_1 scaling of the moments")
{
    // M_l carries the prefactor v_1^{-l/2} = 2^{-l} here.
    std::vector<Q> v{4, Q(1, 3), Q(2)};
    for (int l = 1; l <= 6; ++l) {
        Q raw = evaluate_path_poly(limit_moment_poly(l), Q(1, 2), 0, v);
        CHECK(limit_moment(l, Q(1, 2), v) == Surd(raw / pow_q(Q(2), l)));
    }
}

TEST_CASE("free cumulant reduction at g = 0")
{
    auto R = [](int k) -> Poly {
        if (k == 1) return Poly(0);
        if (k == 2) return Poly(1);
        return Poly::variable(var::v(k - 1));
    };
    for (int l = 1; l <= 9; ++l)
        CHECK(limit_moment_poly_normalized(l).substitute(var::g, Poly(0)) == oracle::nc_moment(l, R));
}

TEST_CASE("moment duality")
{
    for (int l = 1; l <= 9; ++l) {
        Poly p = limit_moment_poly_normalized(l);
        CHECK(signed_v(p, true) == (l % 2 ? -p : p));
        CHECK(moment_duality_check(l));
    }
}

TEST_CASE("path heights stay below the total length")
{
    for (const std::vector<int>& L : std::vector<std::vector<int>>{{6}, {3, 3}, {2, 2, 2}, {4, 2}, {2, 3, 2}}) {
        int total = 0;
        for (int l : L) total += l;
        for (const auto& p : enumerate_ribbon(L)) {
            CHECK(p.stats().max_height < total);
            for (auto [i, j] : p.pairings) CHECK(i < j);
        }
    }
}

TEST_CASE("length-one sites contribute nothing")
{
    CHECK(enumerate_ribbon({1, 3}).empty());
    CHECK(finite_expectation({2, 1}, Q(2), Q(3), {1, Q(1, 2)}) == 0);
    CHECK(finite_cumulant_S_poly({1}).is_zero());
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_ribbon({path_cap() + 1}), cap_error);
}

TEST_CASE("low-order expectations")
{
    auto v = th_values(6);
    for (const Q& a : {Q(1, 3), Q(2)})
        for (const Q& u : {Q(1, 2), Q(3)}) {
            // E[B_2] = alpha/u^2 * E|lambda| = v_1.
            CHECK(finite_expectation({2}, a, u, v) == v[0]);
            // S_4 = B_4 + B_2^2 / 2.
            CHECK(finite_cumulant_S({4}, a, u, v) ==
                  finite_expectation({4}, a, u, v) + finite_expectation({2, 2}, a, u, v) / 2);
            CHECK(finite_cumulant_S({2, 2}, a, u, v) ==
                  finite_expectation({2, 2}, a, u, v) - finite_expectation({2}, a, u, v) * finite_expectation({2}, a, u, v));
            CHECK(finite_cumulant_S({3}, a, u, v) == finite_expectation({3}, a, u, v));
        }
}

TEST_CASE("depoissonized expectations against full enumeration")
{
    const Q a(2), u(3);
    // u th = tp((1, 1/2), u) and ch_k = th_k (sqrt(alpha) / u)^{k-1}.
    Specialization rho = totally_positive_spec({Q(1), Q(1, 2)}, u);
    std::vector<Q> th;
    std::vector<Surd> ch;
    for (int k = 1; k <= 8; ++k) {
        th.push_back(rho(k) / u);
        ch.push_back(Surd(th.back() / pow_q(u, k - 1)) * Surd::half_power(a, k - 1));
    }
    for (int d = 1; d <= 6; ++d) {
        auto law = Ensemble::conditional_thoma(a, d, ch).law();
        CHECK(depoissonized_expectation({2}, d, a, u, th) == a * d / (u * u));
        for (const std::vector<int>& L : std::vector<std::vector<int>>{{3}, {4}, {2, 2}, {3, 2}, {5}}) {
            Surd brute = 0;
            for (const auto& [lam, m] : law) brute += m * Surd(oracle::product_of_boolean(lam, a / u, 1 / u, L));
            CHECK(brute == Surd(depoissonized_expectation(L, d, a, u, th)));
        }
    }
}

TEST_CASE("Poissonized expectations against the truncated sum")
{
    const Q a(2), u(1, 4);
    Specialization rho = totally_positive_spec({Q(1, 16)}, u);
    Specialization v{[u, rho](int k) -> Q { return rho(k) / u; }, "v"};
    std::vector<Q> vv;
    for (int k = 1; k <= 8; ++k) vv.push_back(v(k));
    for (const std::vector<int>& L : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {3, 2}}) {
        auto [C, r] = boolean_growth_bound(L, a, u);
        auto I = poisson_expectation(
            a, u, v, [&](const Partition& lam) -> Q { return oracle::product_of_boolean(lam, a / u, 1 / u, L); }, C, r,
            5e-13);
        CHECK(I.contains(finite_expectation(L, a, u, vv).get_d()));
        CHECK(I.tail < 1e-12);
    }
}

TEST_CASE("CLT and AFP specializations")
{
    for (const Q& g : {Q(0), Q(1, 2), Q(-3)})
        for (const Q& v1 : {Q(1), Q(4)}) {
            std::vector<Q> v{v1, Q(1, 5), Q(2, 7)};
            CHECK(clt_cov(2, 2, g, v) == Surd(1 / v1));
            CHECK(clt_mean(2, g, Q(1, 3), v).is_zero());
        }
    auto zero = [](int, int) -> Q { return 0; };
    CHECK(afp_cov(2, 2, Q(1, 2), {1, Q(1, 3)}, zero) == 0);
}
