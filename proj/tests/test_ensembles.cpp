#include <doctest.h>

#include "jack/ensembles.hpp"
#include "oracles.hpp"

using namespace jack;

namespace {

Surd total(const Ensemble& e)
{
    Surd s = 0;
    for (const auto& [lam, w] : e.law()) s += w;
    return s;
}

}  // namespace

TEST_CASE("Plancherel masses")
{
    for (int d = 1; d <= 9; ++d)
        for (const auto& lam : partitions(d)) {
            Z dim = oracle::hook_dimension(lam);
            CHECK(Ensemble::plancherel(Q(1), d).weight(lam) == Surd(Q(dim * dim) / Q(factorial(d))));
            for (const Q& a : {Q(1, 3), Q(7, 2)})
                CHECK(Ensemble::plancherel(a, d).weight(lam) ==
                      Surd(pow_q(a, d) * Q(factorial(d)) / oracle::jack_norm(lam, a)));
        }
}

TEST_CASE("Schur-Weyl masses at alpha = 1")
{
    for (long N : {2L, 3L})
        for (int d = 1; d <= 6; ++d) {
            Ensemble e = Ensemble::schur_weyl_k(Q(1), d, N);
            for (const auto& lam : partitions(d)) {
                // dim(lam) * dim_GL(lam) / N^d with dim_GL = prod (N + c) / hooks.
                Q hooks = Q(factorial(d)) / Q(oracle::hook_dimension(lam));
                Q want = Q(oracle::hook_dimension(lam));
                for (int i = 0; i < lam.length(); ++i)
                    for (int j = 0; j < lam[i]; ++j) want *= Q(N + j - i);
                want /= hooks * pow_q(Q(N), d);
                CHECK(e.weight(lam) == Surd(want));
                if (lam.length() > N) CHECK(e.weight(lam).is_zero());
            }
        }
}

TEST_CASE("every fixed-size ensemble sums to one")
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2), Q(7, 2)})
        for (int d = 1; d <= 6; ++d) {
            CHECK(total(Ensemble::plancherel(a, d)) == Surd(1));
            CHECK(total(Ensemble::schur_weyl_k(a, d, 2)) == Surd(1));
            CHECK(total(Ensemble::schur_weyl_k(a, d, d + 1)) == Surd(1));
            CHECK(total(Ensemble::conditional_thoma(a, d, {Surd(1)})) == Surd(1));
        }
}

TEST_CASE("degenerate characters reduce to Plancherel")
{
    for (const Q& a : {Q(1, 2), Q(3)})
        for (int d = 1; d <= 6; ++d) {
            auto pl = Ensemble::plancherel(a, d).law();
            std::map<Partition, Surd> delta;
            for (const auto& mu : partitions(d)) delta[mu] = mu == Partition::ones(d) ? Surd(1) : Surd(0);
            auto ch = Ensemble::character(a, d, delta).law();
            auto ct = Ensemble::conditional_thoma(a, d, {Surd(1), Surd(0), Surd(0)}).law();
            REQUIRE(pl.size() == ch.size());
            for (std::size_t i = 0; i < pl.size(); ++i) {
                CHECK(pl[i].second == ch[i].second);
                CHECK(pl[i].second == ct[i].second);
            }
        }
}

TEST_CASE("Thoma sectors carry the Poisson weights")
{
    const Q a(2), u(3, 2);
    Ensemble e = Ensemble::thoma(a, u, totally_positive_spec({Q(1, 2), Q(1, 3)}, Q(1)));
    Q U = e.exponent();
    Q want = 1;
    for (int n = 0; n <= 7; ++n) {
        if (n) want *= U / n;
        Surd s = 0;
        for (const auto& lam : partitions(n)) s += e.weight(lam);
        CHECK(s == Surd(want));
        CHECK(e.sector_weight_closed_form(n) == Surd(want));
    }
    CHECK_FALSE(e.fixed_size());
    CHECK_THROWS(e.d());
}

TEST_CASE("positivity is enforced")
{
    CHECK_THROWS_AS(Ensemble::conditional_thoma(Q(2), 6, {Surd(1), Surd(Q(1, 3))}), positivity_error);
    CHECK_THROWS_AS(Ensemble::plancherel(Q(-1), 3), parameter_error);
    CHECK_THROWS_AS(ThomaPoint({{Q(1, 2), Q(3, 4)}, {}, Q(0)}).validate(), parameter_error);
}

TEST_CASE("mean area of the Poissonized diagram")
{
    // B_2(T_{alpha/u, 1/u} lambda) = alpha |lambda| / u^2 and E|lambda| = u^2 v_1 / alpha.
    for (const Q& a : {Q(1, 2), Q(2)}) {
        Q u(1, 4);
        Specialization v = plancherel_specialization(Q(1));
        auto I = poisson_expectation(
            a, u, v, [&](const Partition& lam) -> Q { return oracle::product_of_boolean(lam, a / u, 1 / u, {2}); },
            Q(a / (u * u)), 1, 1e-13);
        CHECK(I.contains(1.0));
        CHECK(I.radius < 1e-12);
    }
}

TEST_CASE("Poisson truncation reports an unreachable tail")
{
    Specialization v = plancherel_specialization(Q(1));
    CHECK_THROWS_AS(
        poisson_expectation(Q(1), Q(6), v, [](const Partition&) -> Q { return 1; }, Q(1), 0, 1e-15, 6),
        truncation_error);
}

TEST_CASE("asymptotic regime sequences")
{
    AsymptoticRegime r;
    r.g = Q(-1, 4);
    r.a = {Q(1, 2), Q(1, 4)};
    CHECK(r.flavor() == Flavor::low);
    CHECK(r.v(1) == 1);
    CHECK(r.v(2) == -(Q(1, 4) + Q(1, 16)));
    CHECK(r.admissible());
    RegimeParams p = regime_sequences(r, 1600, 4);
    CHECK(p.alpha == Q(1, 100));
    CHECK(p.v.size() == 4u);
}
