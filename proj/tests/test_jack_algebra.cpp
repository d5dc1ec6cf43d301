#include <doctest.h>

#include "jack/diagram.hpp"
#include "jack/symmetric.hpp"
#include "oracles.hpp"

using namespace jack;

namespace {

PowerSumPoly p(std::initializer_list<int> mu, const Q& c = 1) { return PowerSumPoly::p(Partition(mu), c); }

}  // namespace

TEST_CASE("small Jack polynomials in the integral normalization")
{
    const Q a(5, 3);
    CHECK(jack_polynomial(Partition{1}, a) == p({1}));
    CHECK(jack_polynomial(Partition{2}, a) == p({1, 1}) + p({2}, a));
    CHECK(jack_polynomial(Partition{1, 1}, a) == p({1, 1}) - p({2}));
    // J_(1^n) = n! e_n
    CHECK(jack_polynomial(Partition{1, 1, 1}, a) == p({1, 1, 1}) - p({2, 1}, 3) + p({3}, 2));
    // At alpha = 1, J_(3) = 3! h_3 = p1^3 + 3 p2 p1 + 2 p3.
    CHECK(jack_polynomial(Partition{3}, Q(1)) == p({1, 1, 1}) + p({2, 1}, 3) + p({3}, 2));
}

TEST_CASE("coefficient of p_1^n is one")
{
    for (int d = 1; d <= 6; ++d)
        for (const auto& lam : partitions(d))
            for (const Q& a : {Q(1, 3), Q(2)}) CHECK(theta(Partition::ones(d), lam, a) == 1);
}

TEST_CASE("Hall product of power sums")
{
    const Q a(3, 2);
    CHECK(hall_inner(p({2, 1}), p({2, 1}), a) == a * a * 2);
    CHECK(hall_inner(p({2, 1}), p({3}), a) == 0);
    CHECK(hall_inner(p({1, 1}), p({1, 1}), a) == a * a * 2);
}

TEST_CASE("orthogonality with the arm-leg norms")
{
    for (const Q& a : {Q(1, 2), Q(3)})
        for (int d = 1; d <= 5; ++d)
            for (const auto& lam : partitions(d))
                for (const auto& nu : partitions(d)) {
                    Q ip = hall_inner(jack_polynomial(lam, a), jack_polynomial(nu, a), a);
                    CHECK(ip == (lam == nu ? oracle::jack_norm(lam, a) : Q(0)));
                }
}

TEST_CASE("omega duality swaps alpha and 1/alpha")
{
    for (const Q& a : {Q(1, 2), Q(3)})
        for (int d = 1; d <= 5; ++d)
            for (const auto& lam : partitions(d))
                CHECK(omega_dual(jack_polynomial(lam, 1 / a), a) ==
                      jack_polynomial(lam.conjugate(), a) * pow_q(a, -d));
}

TEST_CASE("normalized characters at low order")
{
    for (int d = 1; d <= 7; ++d)
        for (const auto& lam : partitions(d)) {
            CHECK(normalized_character(Partition{1}, lam, Q(2)) == Surd(Q(d)));
            long content = 0;
            for (int i = 0; i < lam.length(); ++i)
                for (int j = 0; j < lam[i]; ++j) content += j - i;
            CHECK(normalized_character(Partition{2}, lam, Q(1)) == Surd(Q(2 * content)));
            CHECK(normalized_character(Partition{d + 1}, lam, Q(2)).is_zero());
        }
}

TEST_CASE("character duality")
{
    for (int d = 1; d <= 5; ++d)
        for (const auto& lam : partitions(d))
            for (const auto& mu : partitions(d)) CHECK(duality_character_check(lam, mu, Q(3)));
}

TEST_CASE("Jack polynomials are eigenvectors of the Nazarov-Sklyanin operators")
{
    for (const Q& a : {Q(1, 2), Q(2)})
        for (int d = 1; d <= 4; ++d)
            for (const auto& lam : partitions(d)) {
                PowerSumPoly J = jack_polynomial(lam, a);
                auto B = oracle::boolean_cumulants(lam, a, Q(1), 6);
                for (int l = 0; l <= 3; ++l) CHECK(ns_apply(l, J, a) == J * B[l + 2]);
            }
}

TEST_CASE("specializations")
{
    Specialization pl = plancherel_specialization(Q(3));
    CHECK(pl(1) == 3);
    CHECK(pl(2) == 0);
    CHECK(pl.eval(p({1, 1})) == 9);
    Specialization f = finite_specialization({Q(1), Q(1, 2)});
    CHECK(f.eval(Partition{2, 1}) == Q(1, 2));
    CHECK(f(3) == 0);
}

TEST_CASE("degree cap")
{
    int old = jack_degree_cap();
    set_jack_degree_cap(3);
    CHECK_THROWS_AS(jack_polynomial(Partition{2, 2}, Q(2)), cap_error);
    set_jack_degree_cap(old);
    CHECK_NOTHROW(jack_polynomial(Partition{2, 2}, Q(2)));
}
