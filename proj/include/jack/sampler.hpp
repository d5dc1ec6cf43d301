#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jack/diagram.hpp"
#include "jack/ensembles.hpp"
#include "jack/partition.hpp"

namespace jack {

// Counter-based generator: word i of stream s under seed k is
// mix(k + golden * (s * 2^32 + i)) with the splitmix64 finalizer as mix.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t next();
    double uniform();   // 53-bit, in [0, 1)
    std::uint64_t counter() const { return counter_; }

    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

// Draws from the exact law of a fixed-size ensemble by inverse CDF. The
// uniform is refined 64 bits at a time until its dyadic interval lies
// strictly between two cumulative masses.
class ExactSampler {
public:
    explicit ExactSampler(const Ensemble& e);
    Partition draw(Rng& rng) const;
    const std::vector<std::pair<Partition, Surd>>& law() const { return law_; }

    static void set_cap(int d);   // default 25
    static int cap();

private:
    std::vector<std::pair<Partition, Surd>> law_;
    std::vector<Surd> cum_;
};

Partition exact_sample(const Ensemble& e, Rng& rng);

// Growth step probabilities: adding a box in row r with the mass of the
// transition measure of T_{alpha,1} lambda at the corresponding minimum.
std::vector<std::pair<int, Q>> growth_transition(const Partition& lam, const Q& alpha);

// Distribution on Y_d induced by the growth rule, as exact rationals.
std::map<Partition, Q> growth_law(const Q& alpha, int d);

// Compares growth_law with the Jack-Plancherel masses for all d <= dmax.
bool validate_growth(const Q& alpha, int dmax);

// Runs the grid validation (alpha in {1/3, 1, 2}, d <= 8) once and caches
// the verdict; returns it. A failure makes growth_sample throw.
bool growth_validated();

Partition growth_sample(const Q& alpha, int d, Rng& rng);

struct SampleRun {
    std::string ensemble;
    Q alpha;
    int d = 0;
    std::uint64_t seed = 0;
    int count = 0;
    std::string method;   // "exact" or "growth"
    std::vector<Partition> samples;
};

// Draw k uses Rng(seed, k).
SampleRun run_exact(const Ensemble& e, std::uint64_t seed, int count);
SampleRun run_growth(const Q& alpha, int d, std::uint64_t seed, int count);

struct NamedObservable {
    std::string name;
    std::function<double(const Partition&)> f;
};

struct ObservableStats {
    std::string name;
    double mean = 0;
    double variance = 0;   // unbiased
    int count = 0;
    double stderr_mean() const;
};

std::vector<ObservableStats> empirical_stats(const SampleRun& run, const std::vector<NamedObservable>& obs);

// X_l of the diagram T_{w,h} lambda as a sampled observable.
NamedObservable diagram_observable(Observable kind, int ell, const Q& w, const Q& h, const std::string& name);
// X_l of Lambda^{(alpha)}_d = T_{sqrt(alpha/d), 1/sqrt(alpha d)} lambda.
NamedObservable scaled_observable(Observable kind, int ell, const Q& alpha, int d, const std::string& name);
// lambda_{row+1} / scale.
NamedObservable row_observable(int row, double scale, const std::string& name);

// Averaged rescaled profile omega(x) of T_{sqrt(alpha/d), 1/sqrt(alpha d)} lambda
// on a uniform grid, as "x,omega" CSV lines.
std::string profile_csv(const SampleRun& run, double x_min, double x_max, int points);
double scaled_profile(const Partition& lam, const Q& alpha, int d, double x);

}  // namespace jack
