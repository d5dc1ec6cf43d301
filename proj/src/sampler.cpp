#include "jack/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "jack/errors.hpp"

namespace jack {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
int g_exact_cap = 25;

Partition add_box(const Partition& lam, int row)
{
    std::vector<int> p = lam.parts();
    if (row == lam.length())
        p.push_back(1);
    else
        ++p[row];
    return Partition(std::move(p));
}

std::vector<int> addable_rows(const std::vector<int>& p)
{
    std::vector<int> rows;
    for (int r = 0; r <= static_cast<int>(p.size()); ++r) {
        int cur = r < static_cast<int>(p.size()) ? p[r] : 0;
        if (r == 0 || p[r - 1] > cur) rows.push_back(r);
    }
    return rows;
}

}  // namespace

std::uint64_t Rng::mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next()
{
    std::uint64_t i = counter_++;
    return mix(seed_ + kGolden * ((stream_ << 32) + i));
}

double Rng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void ExactSampler::set_cap(int d)
{
    if (d < 0) throw parameter_error("sampler cap must be nonnegative");
    g_exact_cap = d;
}

int ExactSampler::cap() { return g_exact_cap; }

ExactSampler::ExactSampler(const Ensemble& e)
{
    if (!e.fixed_size()) throw parameter_error("exact sampling needs a fixed-size ensemble");
    if (e.d() > g_exact_cap)
        throw cap_error("exact sampling is capped at d = " + std::to_string(g_exact_cap) +
                        "; use the growth sampler");
    law_ = e.law();
    Surd acc = 0;
    cum_.reserve(law_.size());
    for (const auto& [lam, m] : law_) {
        if (m.sign() < 0) throw positivity_error("negative mass at " + lam.to_string());
        acc += m;
        cum_.push_back(acc);
    }
    if (cum_.empty() || cum_.back() != Surd(1))
        throw invariant_error("law does not sum to 1: " + (cum_.empty() ? std::string("empty") : cum_.back().to_string()));
}

Partition ExactSampler::draw(Rng& rng) const
{
    // U lies in [lo, lo + 2^-bits) with lo = k / 2^bits.
    mpz_class k = 0;
    mpz_class scale = 1;
    for (int round = 0; round < 32; ++round) {
        std::uint64_t w = rng.next();
        k <<= 64;
        mpz_class wz;
        mpz_import(wz.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        k += wz;
        scale <<= 64;
        Q lo(k, scale);
        lo.canonicalize();
        Q hi(k + 1, scale);
        hi.canonicalize();
        auto it = std::upper_bound(cum_.begin(), cum_.end(), Surd(lo),
                                   [](const Surd& x, const Surd& c) { return x < c; });
        if (it == cum_.end()) throw internal_error("uniform beyond total mass");
        if ((*it - Surd(hi)).sign() >= 0) return law_[it - cum_.begin()].first;
    }
    throw internal_error("inverse CDF refinement did not terminate");
}

Partition exact_sample(const Ensemble& e, Rng& rng)
{
    return ExactSampler(e).draw(rng);
}

std::vector<std::pair<int, Q>> growth_transition(const Partition& lam, const Q& alpha)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    StaircaseShape s = profile(AnisotropicDiagram{lam, alpha, 1});
    DiscreteMeasure tm = transition_measure(s);
    std::vector<std::pair<int, Q>> out;
    for (int r : addable_rows(lam.parts())) {
        Q x = Q(lam[r]) * alpha - r;
        auto it = std::find_if(tm.atoms.begin(), tm.atoms.end(), [&](const Atom& a) { return a.pos == x; });
        if (it == tm.atoms.end()) throw internal_error("no transition atom at an addable corner");
        if (it->mass < 0) throw positivity_error("negative growth probability");
        out.emplace_back(r, it->mass);
    }
    return out;
}

std::map<Partition, Q> growth_law(const Q& alpha, int d)
{
    if (d < 0) throw parameter_error("d must be nonnegative");
    std::map<Partition, Q> level{{Partition(), Q(1)}};
    for (int n = 0; n < d; ++n) {
        std::map<Partition, Q> nxt;
        for (const auto& [lam, p] : level)
            for (const auto& [r, m] : growth_transition(lam, alpha)) nxt[add_box(lam, r)] += p * m;
        level = std::move(nxt);
    }
    return level;
}

bool validate_growth(const Q& alpha, int dmax)
{
    for (int d = 1; d <= dmax; ++d) {
        std::map<Partition, Q> law = growth_law(alpha, d);
        Ensemble e = Ensemble::plancherel(alpha, d);
        if (static_cast<long>(law.size()) != partition_count(d)) return false;
        for (const auto& [lam, m] : e.law()) {
            auto it = law.find(lam);
            if (it == law.end() || Surd(it->second) != m) return false;
        }
    }
    return true;
}

bool growth_validated()
{
    static std::once_flag once;
    static bool ok = false;
    std::call_once(once, [] {
        ok = validate_growth(Q(1, 3), 8) && validate_growth(Q(1), 8) && validate_growth(Q(2), 8);
    });
    return ok;
}

Partition growth_sample(const Q& alpha, int d, Rng& rng)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    if (d < 0) throw parameter_error("d must be nonnegative");
    if (!growth_validated()) throw growth_unavailable("growth rule failed validation against the exact law");
    const long double a = alpha.get_d();
    std::vector<int> p;
    std::vector<long double> xs, ys, mass;
    for (int n = 0; n < d; ++n) {
        std::vector<int> rows = addable_rows(p);
        xs.clear();
        ys.clear();
        for (int r : rows) xs.push_back((r < static_cast<int>(p.size()) ? p[r] : 0) * a - r);
        for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
            int cur = r < static_cast<int>(p.size()) ? p[r] : 0;
            if (p[r - 1] > cur) ys.push_back(p[r - 1] * a - r);
        }
        mass.assign(xs.size(), 0);
        long double total = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            long double m = 1;
            for (long double y : ys) m *= xs[i] - y;
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (j != i) m /= xs[i] - xs[j];
            mass[i] = std::max<long double>(m, 0);
            total += mass[i];
        }
        long double u = static_cast<long double>(rng.uniform()) * total;
        std::size_t pick = xs.size() - 1;
        long double acc = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            acc += mass[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        int r = rows[pick];
        if (r == static_cast<int>(p.size()))
            p.push_back(1);
        else
            ++p[r];
    }
    return Partition(std::move(p));
}

SampleRun run_exact(const Ensemble& e, std::uint64_t seed, int count)
{
    if (count < 0) throw parameter_error("count must be nonnegative");
    ExactSampler s(e);
    SampleRun run{e.name(), e.alpha(), e.d(), seed, count, "exact", {}};
    run.samples.reserve(count);
    for (int k = 0; k < count; ++k) {
        Rng rng(seed, static_cast<std::uint64_t>(k));
        run.samples.push_back(s.draw(rng));
    }
    return run;
}

SampleRun run_growth(const Q& alpha, int d, std::uint64_t seed, int count)
{
    if (count < 0) throw parameter_error("count must be nonnegative");
    SampleRun run{"plancherel", alpha, d, seed, count, "growth", {}};
    run.samples.reserve(count);
    for (int k = 0; k < count; ++k) {
        Rng rng(seed, static_cast<std::uint64_t>(k));
        run.samples.push_back(growth_sample(alpha, d, rng));
    }
    return run;
}

double ObservableStats::stderr_mean() const
{
    return count > 0 ? std::sqrt(variance / count) : 0.0;
}

std::vector<ObservableStats> empirical_stats(const SampleRun& run, const std::vector<NamedObservable>& obs)
{
    std::vector<ObservableStats> out;
    for (const auto& o : obs) {
        ObservableStats st{o.name, 0, 0, static_cast<int>(run.samples.size())};
        // Welford
        double mean = 0, m2 = 0;
        int n = 0;
        for (const auto& lam : run.samples) {
            double x = o.f(lam);
            ++n;
            double delta = x - mean;
            mean += delta / n;
            m2 += delta * (x - mean);
        }
        st.mean = mean;
        st.variance = n > 1 ? m2 / (n - 1) : 0.0;
        out.push_back(st);
    }
    return out;
}

NamedObservable diagram_observable(Observable kind, int ell, const Q& w, const Q& h, const std::string& name)
{
    return {name, [=](const Partition& lam) {
                return diagram_observables(AnisotropicDiagram{lam, w, h}, kind, ell)[ell].get_d();
            }};
}

NamedObservable scaled_observable(Observable kind, int ell, const Q& alpha, int d, const std::string& name)
{
    const double c = std::pow(alpha.get_d() * d, -0.5 * ell);
    return {name, [=](const Partition& lam) {
                return diagram_observables(AnisotropicDiagram{lam, alpha, 1}, kind, ell)[ell].get_d() * c;
            }};
}

NamedObservable row_observable(int row, double scale, const std::string& name)
{
    return {name, [=](const Partition& lam) { return lam[row] / scale; }};
}

double scaled_profile(const Partition& lam, const Q& alpha, int d, double x)
{
    if (d <= 0) throw parameter_error("d must be positive");
    const double a = alpha.get_d();
    const double w = std::sqrt(a / d);
    const double h = 1.0 / std::sqrt(a * d);
    const auto& p = lam.parts();
    const int L = lam.length();
    double om = 0;
    for (int r = 0; r <= L; ++r) {
        int cur = r < L ? p[r] : 0;
        if (r == 0 || p[r - 1] > cur) om += std::abs(x - (cur * w - r * h));
        if (r >= 1 && p[r - 1] > cur) om -= std::abs(x - (p[r - 1] * w - r * h));
    }
    return om;
}

std::string profile_csv(const SampleRun& run, double x_min, double x_max, int points)
{
    if (points < 2) throw parameter_error("profile needs at least two grid points");
    if (!(x_max > x_min)) throw parameter_error("empty profile window");
    std::ostringstream os;
    os.precision(10);
    os << "x,omega\n";
    for (int i = 0; i < points; ++i) {
        double x = x_min + (x_max - x_min) * i / (points - 1);
        double s = 0;
        for (const auto& lam : run.samples) s += scaled_profile(lam, run.alpha, run.d, x);
        os << x << ',' << (run.samples.empty() ? 0.0 : s / run.samples.size()) << '\n';
    }
    return os.str();
}

}  // namespace jack
