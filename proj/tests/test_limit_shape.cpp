#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jack/diagram.hpp"
#include "jack/limit_shape.hpp"
#include "jack/paths.hpp"
#include "oracles.hpp"

using namespace jack;

namespace {

// Power series in long double; fine for the moderate x used here.
long double series_J(long double nu, long double x)
{
    long double s = 0;
    for (int m = 0; m < 80; ++m) {
        long double t = std::pow(-1.0L, m) * std::pow(x / 2, 2 * m + nu) / (std::tgamma((long double)m + 1) * std::tgamma(m + nu + 1));
        s += t;
    }
    return s;
}

}  // namespace

TEST_CASE("Bessel J at known values")
{
    const double pi = std::numbers::pi;
    for (double x : {0.5, 1.0, 3.0, 8.0}) {
        CHECK(bessel_J(0.5, x) == doctest::Approx(std::sqrt(2 / (pi * x)) * std::sin(x)).epsilon(1e-12));
        CHECK(bessel_J(-0.5, x) == doctest::Approx(std::sqrt(2 / (pi * x)) * std::cos(x)).epsilon(1e-12));
    }
    CHECK(bessel_J(0, 1) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(bessel_J(1, 1) == doctest::Approx(0.4400505857449335).epsilon(1e-14));
    CHECK(bessel_J(-2.7, 8) == doctest::Approx((double)series_J(-2.7L, 8.0L)).epsilon(1e-10));
}

TEST_CASE("order zeros at g = -1/4")
{
    auto z = bessel_order_zeros(Q(-1, 4), 3);
    REQUIRE(z.zeros.size() == 3u);
    const double want[] = {-1.086, -0.424, 0.102};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(z.zeros[i] - want[i]) < 1e-3);
        // J_{-z/|g|}(2/|g|) changes sign across the zero.
        long double lo = series_J(-(z.zeros[i] - 1e-7) * 4, 8), hi = series_J(-(z.zeros[i] + 1e-7) * 4, 8);
        CHECK(lo * hi < 0);
    }
    auto e = edge_limits(Q(-1, 4), 3);
    const double want_e[] = {1.336, 0.924, 0.647};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(e[i] - want_e[i]) < 1e-3);
        CHECK(e[i] == doctest::Approx(-z.zeros[i] + 0.25 * (i + 1)).epsilon(1e-12));
    }
}

TEST_CASE("order zeros reject g = 0")
{
    CHECK_THROWS_AS(bessel_order_zeros(Q(0), 3), parameter_error);
}

TEST_CASE("Jacobi moments")
{
    for (const Q& g : {Q(0), Q(1, 3), Q(-2)})
        for (int l = 0; l <= 8; ++l) {
            Q want = oracle::jacobi_power(l, true).evaluate([&](int) -> Q { return g; });
            CHECK(jacobi_moment(JacobiOperator::plancherel(g), l) == want);
        }
    for (int l = 1; l <= 8; ++l) CHECK(motzkin_moment_poly(l) == oracle::motzkin_sum(l));
    const std::vector<long> catalan{1, 0, 1, 0, 2, 0, 5, 0, 14};
    for (int l = 0; l <= 8; ++l) CHECK(jacobi_moment(JacobiOperator::plancherel(Q(0)), l) == catalan[l]);
}

TEST_CASE("functional equation and moment consistency")
{
    CHECK(functional_equation_check(10));
    CHECK(functional_equation_check(Q(-1, 4), 10));
    CHECK(moment_consistency(10));
}

TEST_CASE("finite staircases agree with the exact profile")
{
    for (const auto& lam : partitions(6)) {
        StaircaseShape s = profile(AnisotropicDiagram{lam, Q(1, 2), Q(1, 3)});
        NumericStaircase n = NumericStaircase::from_exact(s);
        CHECK_NOTHROW(n.validate());
        for (int i = -20; i <= 20; ++i) {
            Q x(i, 7);
            CHECK(n.omega(x.get_d()) == doctest::Approx(s.omega(x).get_d()).epsilon(1e-12));
            CHECK(s.omega(x) >= abs(x));
        }
        CHECK(n.reflect().reflect().minima == n.minima);
    }
}

TEST_CASE("Plancherel staircase at g = -1/4")
{
    auto s = plancherel_limit_shape(Q(-1, 4), 12);
    CHECK_NOTHROW(s.validate());
    CHECK(s.minima.size() == 12u);
    double lo = std::min(s.minima.front(), s.maxima.front()), hi = std::max(s.minima.back(), s.maxima.back());
    double prev = s.omega(lo);
    for (int i = 1; i <= 500; ++i) {
        double x = lo + (hi - lo) * i / 500;
        double w = s.omega(x);
        CHECK(std::abs(w - prev) <= (hi - lo) / 500 + 1e-9);   // 1-Lipschitz
        CHECK(w >= std::abs(x) - 1e-9);
        prev = w;
    }
}

TEST_CASE("staircase duality under g -> -g")
{
    auto a = plancherel_limit_shape(Q(1, 3), 15);
    auto b = plancherel_limit_shape(Q(-1, 3), 15).reflect();
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(a.minima[i] == doctest::Approx(b.minima[i]).epsilon(1e-9));
        CHECK(a.maxima[i] == doctest::Approx(b.maxima[i]).epsilon(1e-9));
    }
}

TEST_CASE("residue masses reproduce the limit moments")
{
    const Q g(-1, 4);
    auto s = plancherel_limit_shape(g, 40);
    auto at = staircase_transition_atoms(s, 38, 39);
    double total = 0;
    for (double m : at.mass) total += m;
    CHECK(total == doctest::Approx(1).epsilon(1e-6));
    for (int l = 2; l <= 5; ++l) {
        double m = 0;
        for (std::size_t i = 0; i < at.pos.size(); ++i) m += at.mass[i] * std::pow(at.pos[i], l);
        CHECK(m == doctest::Approx(limit_moment(l, g, {1}).to_double()).epsilon(1e-4));
    }
    CHECK_THROWS(staircase_transition_atoms(s, 39, 39));
}
