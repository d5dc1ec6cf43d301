#include <doctest.h>

#include <cmath>
#include <map>

#include "jack/io.hpp"
#include "jack/sampler.hpp"
#include "oracles.hpp"

using namespace jack;

TEST_CASE("splitmix64 finalizer")
{
    // First output of the reference splitmix64 seeded with 0.
    CHECK(Rng::mix(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("rng streams are reproducible and distinct")
{
    Rng a(5, 0), b(5, 0), c(5, 1), d(6, 0);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
        CHECK(x != d.next());
    }
    Rng r(1);
    double mean = 0;
    for (int i = 0; i < 20000; ++i) {
        double u = r.uniform();
        CHECK(u >= 0);
        CHECK(u < 1);
        mean += u;
    }
    CHECK(std::abs(mean / 20000 - 0.5) < 5 * std::sqrt(1.0 / 12 / 20000));
}

TEST_CASE("growth law equals the Plancherel masses")
{
    for (const Q& a : {Q(1, 3), Q(1), Q(2)})
        for (int d = 1; d <= 7; ++d) {
            auto law = growth_law(a, d);
            CHECK((long)law.size() == partition_count(d));
            for (const auto& lam : partitions(d))
                CHECK(law[lam] == pow_q(a, d) * Q(factorial(d)) / oracle::jack_norm(lam, a));
        }
    CHECK(growth_validated());
}

TEST_CASE("growth transitions are probabilities on addable rows")
{
    for (const auto& lam : partitions(5)) {
        Q s = 0;
        for (auto [row, p] : growth_transition(lam, Q(3, 2))) {
            CHECK(p > 0);
            CHECK((row == 0 || lam[row] < lam[row - 1]));
            s += p;
        }
        CHECK(s == 1);
    }
}

TEST_CASE("exact sampler frequencies")
{
    Ensemble e = Ensemble::plancherel(Q(2), 4);
    ExactSampler s(e);
    std::map<Partition, int> freq;
    const int n = 20000;
    Rng rng(11);
    for (int i = 0; i < n; ++i) ++freq[s.draw(rng)];
    for (const auto& [lam, m] : s.law()) {
        double p = m.to_double();
        CHECK(std::abs(freq[lam] - n * p) < 5 * std::sqrt(n * p * (1 - p)) + 1);
    }
}

TEST_CASE("exact samples respect the support")
{
    SampleRun run = run_exact(Ensemble::schur_weyl_k(Q(1), 7, 2), 3, 500);
    for (const auto& lam : run.samples) {
        CHECK(lam.size() == 7);
        CHECK(lam.length() <= 2);
    }
}

TEST_CASE("exact sampler cap")
{
    CHECK_THROWS_AS(ExactSampler(Ensemble::plancherel(Q(1), ExactSampler::cap() + 1)), cap_error);
}

TEST_CASE("runs are pure functions of the seed")
{
    Ensemble e = Ensemble::plancherel(Q(1, 2), 6);
    CHECK(run_exact(e, 9, 200).samples == run_exact(e, 9, 200).samples);
    CHECK(run_exact(e, 9, 200).samples != run_exact(e, 10, 200).samples);
    SampleRun g1 = run_growth(Q(3), 60, 4, 30), g2 = run_growth(Q(3), 60, 4, 30);
    CHECK(g1.samples == g2.samples);
    for (const auto& lam : g1.samples) CHECK(lam.size() == 60);
    // A prefix of a run is the shorter run.
    auto a = run_exact(e, 9, 50).samples, b = run_exact(e, 9, 200).samples;
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
}

TEST_CASE("empirical statistics")
{
    SampleRun run = run_exact(Ensemble::plancherel(Q(2), 8), 1, 300);
    CHECK(empirical_stats(run, {}).empty());
    auto st = empirical_stats(run, {scaled_observable(Observable::fundamental, 2, Q(2), 8, "S2"),
                                    row_observable(0, 8, "lambda1/d")});
    REQUIRE(st.size() == 2u);
    CHECK(st[0].mean == doctest::Approx(1).epsilon(1e-12));
    CHECK(st[0].variance == doctest::Approx(0).epsilon(1e-12));
    CHECK(st[1].count == 300);
    CHECK(st[1].mean > 0);
}

TEST_CASE("samples JSONL layout")
{
    SampleRun run = run_exact(Ensemble::plancherel(Q(1), 3), 2, 4);
    std::string s = samples_jsonl(run);
    std::vector<json> recs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto nl = s.find('\n', pos);
        recs.push_back(json::parse(s.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    REQUIRE(recs.size() == 5u);
    CHECK(recs[0]["type"] == "run");
    CHECK(recs[0]["count"] == 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(recs[k]["index"] == k - 1);
        CHECK(recs[k]["lambda"].get<std::vector<int>>() == run.samples[k - 1].parts());
    }
}

TEST_CASE("profile CSV of a one-box diagram")
{
    SampleRun run;
    run.alpha = 1;
    run.d = 1;
    run.count = 1;
    run.samples = {Partition{1}};
    auto ser = csv_series(profile_csv(run, -2, 2, 5));
    REQUIRE(ser.points.size() == 5u);
    // minima -1, 1 and maximum 0
    CHECK(ser.points[0].second == doctest::Approx(2));
    CHECK(ser.points[1].second == doctest::Approx(1));
    CHECK(ser.points[2].second == doctest::Approx(2));
    CHECK(ser.points[4].second == doctest::Approx(2));
}
