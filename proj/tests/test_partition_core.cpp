#include <doctest.h>

#include "jack/diagram.hpp"
#include "jack/partition.hpp"
#include "oracles.hpp"

using namespace jack;

namespace {

const std::vector<std::pair<Q, Q>> boxes{{Q(1), Q(1)}, {Q(2), Q(1)}, {Q(1, 3), Q(1)}, {Q(3, 2), Q(1, 2)}};

}  // namespace

TEST_CASE("partition counts")
{
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int d = 0; d <= 12; ++d) {
        CHECK(partition_count(d) == p[d]);
        CHECK((long)partitions(d).size() == p[d]);
    }
    CHECK(partitions(5).front() == Partition::ones(5));
    CHECK(partitions(5).back() == Partition{5});
}

TEST_CASE("constructor canonicalizes and rejects bad input")
{
    CHECK(Partition::from_multiset({1, 3, 2, 3}) == Partition{3, 3, 2, 1});
    CHECK_THROWS_AS(Partition({1, 2}), parameter_error);
}

TEST_CASE("conjugation is an involution preserving size")
{
    for (int d = 0; d <= 10; ++d)
        for (const auto& lam : partitions(d)) {
            Partition c = lam.conjugate();
            CHECK(c.size() == d);
            CHECK(c.conjugate() == lam);
            CHECK(c.length() == lam[0]);
        }
    CHECK(Partition({4, 2, 1}).conjugate() == Partition{3, 2, 1, 1});
}

TEST_CASE("z_mu")
{
    CHECK(Partition({2, 2, 1}).z() == 8);
    CHECK(Partition::ones(4).z() == 24);
    CHECK(Partition({3}).z() == 3);
}

TEST_CASE("set partitions are counted by Bell numbers")
{
    const int bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) CHECK((int)set_partitions(n).size() == bell[n]);
    auto s = set_partitions(3);
    CHECK(block_count(s.front()) >= 1);
}

TEST_CASE("profile corners match the row-by-row reading")
{
    for (int d = 0; d <= 7; ++d)
        for (const auto& lam : partitions(d))
            for (const auto& [w, h] : boxes) {
                StaircaseShape s = profile(AnisotropicDiagram{lam, w, h});
                std::vector<Q> x, y;
                oracle::corners(lam, w, h, x, y);
                CHECK(s.minima == x);
                CHECK(s.maxima == y);
                CHECK_NOTHROW(s.validate());
                // Interlaced centers: sum of minima equals sum of maxima.
                Q sx = 0, sy = 0;
                for (const Q& a : x) sx += a;
                for (const Q& b : y) sy += b;
                CHECK(sx == sy);
            }
}

TEST_CASE("area under the profile is twice the box area")
{
    for (int d = 1; d <= 6; ++d)
        for (const auto& lam : partitions(d))
            for (const auto& [w, h] : boxes) {
                StaircaseShape s = profile(AnisotropicDiagram{lam, w, h});
                // omega - |x| is piecewise linear with breaks at corners and 0.
                std::vector<Q> pts = s.minima;
                pts.insert(pts.end(), s.maxima.begin(), s.maxima.end());
                pts.push_back(0);
                std::sort(pts.begin(), pts.end());
                Q area = 0;
                for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                    auto f = [&](const Q& x) -> Q { return s.omega(x) - abs(x); };
                    area += (pts[i + 1] - pts[i]) * (f(pts[i]) + f(pts[i + 1])) / 2;
                }
                CHECK(area == 2 * w * h * d);
            }
}

TEST_CASE("transition measure is a probability with the oracle moments")
{
    for (int d = 0; d <= 7; ++d)
        for (const auto& lam : partitions(d))
            for (const auto& [w, h] : boxes) {
                DiscreteMeasure m = transition_measure(profile(AnisotropicDiagram{lam, w, h}));
                CHECK(m.is_probability());
                auto M = oracle::transition_moments(lam, w, h, 6);
                for (int l = 0; l <= 6; ++l) CHECK(m.moment(l) == M[l]);
                CHECK(M[1] == 0);
                CHECK(M[2] == w * h * d);
            }
}

TEST_CASE("boolean cumulants of diagrams match the oracle")
{
    for (int d = 0; d <= 7; ++d)
        for (const auto& lam : partitions(d))
            for (const auto& [w, h] : boxes) {
                auto B = diagram_observables(AnisotropicDiagram{lam, w, h}, Observable::boolean, 7);
                auto want = oracle::boolean_cumulants(lam, w, h, 7);
                for (int l = 1; l <= 7; ++l) CHECK(B[l] == want[l]);
            }
}

TEST_CASE("moment and boolean sequences are mutually inverse")
{
    std::vector<Q> M{1, 0, 2, Q(1, 3), 7, -1, Q(5, 2)};
    CHECK(moments_from_boolean(boolean_from_moments(M)) == M);
    // cumulants of the Catalan moments: R_2 = 1, else 0.
    std::vector<Q> cat{1, 0, 1, 0, 2, 0, 5, 0, 14};
    auto R = free_from_moments(cat);
    for (int k = 1; k < (int)R.size(); ++k) CHECK(R[k] == (k == 2 ? 1 : 0));
}

TEST_CASE("fundamental functionals at low order")
{
    // S_2 = B_2, S_3 = B_3, S_4 = B_4 + B_2^2 / 2.
    for (const auto& lam : partitions(6)) {
        auto B = oracle::boolean_cumulants(lam, Q(2), Q(1), 4);
        auto S = diagram_observables(AnisotropicDiagram{lam, Q(2), Q(1)}, Observable::fundamental, 4);
        CHECK(S[2] == B[2]);
        CHECK(S[3] == B[3]);
        CHECK(S[4] == B[4] + B[2] * B[2] / 2);
    }
}

TEST_CASE("rescaling multiplies X_l by c^l")
{
    const Q c(3, 5);
    for (const auto& lam : partitions(5))
        for (Observable k : {Observable::moment, Observable::boolean, Observable::free, Observable::fundamental}) {
            auto a = diagram_observables(AnisotropicDiagram{lam, Q(2), Q(1)}, k, 5);
            auto b = diagram_observables(AnisotropicDiagram{lam, 2 * c, c}, k, 5);
            for (int l = 1; l <= 5; ++l) CHECK(rescale_observable(a[l], l, c) == b[l]);
        }
}

TEST_CASE("j_alpha matches arm and leg products")
{
    for (int d = 1; d <= 7; ++d)
        for (const auto& lam : partitions(d)) {
            for (const Q& a : {Q(1, 2), Q(1), Q(7, 2)}) CHECK(j_alpha(lam, a) == oracle::jack_norm(lam, a));
            CHECK(Q(hook_product(lam)) == j_alpha(lam, Q(1)));
        }
}

TEST_CASE("parse_observable")
{
    CHECK(parse_observable("boolean") == Observable::boolean);
    CHECK_THROWS_AS(parse_observable("nope"), parameter_error);
}
