#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

#include "jack/symmetric.hpp"

namespace jack {

PowerSumPoly PowerSumPoly::p(const Partition& mu, const Q& c)
{
    PowerSumPoly f;
    f.add(mu, c);
    return f;
}

Q PowerSumPoly::coeff(const Partition& mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? Q(0) : it->second;
}

int PowerSumPoly::degree() const
{
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
}

void PowerSumPoly::add(const Partition& mu, const Q& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o)
{
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& o)
{
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

PowerSumPoly& PowerSumPoly::operator*=(const Q& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, x] : terms_) x *= c;
    return *this;
}

PowerSumPoly operator*(const PowerSumPoly& x, const PowerSumPoly& y)
{
    PowerSumPoly r;
    for (const auto& [m1, c1] : x.terms_)
        for (const auto& [m2, c2] : y.terms_) r.add(m1 * m2, c1 * c2);
    return r;
}

PowerSumPoly PowerSumPoly::times_p(int k) const
{
    PowerSumPoly r;
    for (const auto& [mu, c] : terms_) r.add(mu * Partition{k}, c);
    return r;
}

PowerSumPoly PowerSumPoly::d_dp(int k) const
{
    PowerSumPoly r;
    for (const auto& [mu, c] : terms_) {
        int m = mu.multiplicity(k);
        if (m == 0) continue;
        std::vector<int> parts = mu.parts();
        parts.erase(std::find(parts.begin(), parts.end(), k));
        r.add(Partition(std::move(parts)), c * m);
    }
    return r;
}

std::string PowerSumPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // largest partitions first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mu, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Q ac = abs(c);
        bool unit = ac == 1 && !mu.empty();
        if (!unit) os << ac.get_str();
        const auto& pts = mu.parts();
        std::size_t k = 0;
        bool start = true;
        while (k < pts.size()) {
            std::size_t e = k;
            while (e < pts.size() && pts[e] == pts[k]) ++e;
            if (!unit || !start) os << "*";
            start = false;
            os << "p" << pts[k];
            if (e - k > 1) os << "^" << (e - k);
            k = e;
        }
    }
    return os.str();
}

Q hall_inner(const PowerSumPoly& f, const PowerSumPoly& g, const Q& alpha)
{
    Q r = 0;
    for (const auto& [mu, c] : f.terms()) {
        Q d = g.coeff(mu);
        if (d == 0) continue;
        r += c * d * pow_q(alpha, mu.length()) * Q(mu.z());
    }
    return r;
}

PowerSumPoly omega_dual(const PowerSumPoly& f, const Q& alpha)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    PowerSumPoly r;
    for (const auto& [mu, c] : f.terms()) {
        int sign = (mu.norm() % 2 == 0) ? 1 : -1;   // prod (-1)^{r-1}
        r.add(mu, c * sign / pow_q(alpha, mu.length()));
    }
    return r;
}

namespace {

std::atomic<int> g_cap{12};

// Number of maps parts -> rows with each row filled exactly.
struct Filler {
    const std::vector<int>& parts;
    std::map<std::pair<std::size_t, std::vector<int>>, Z> memo;

    Z count(std::size_t i, std::vector<int> caps)
    {
        if (i == parts.size()) {
            for (int c : caps)
                if (c) return 0;
            return 1;
        }
        std::sort(caps.begin(), caps.end());
        auto key = std::make_pair(i, caps);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Z total = 0;
        for (std::size_t j = 0; j < caps.size(); ++j) {
            if (caps[j] < parts[i]) continue;
            caps[j] -= parts[i];
            total += count(i + 1, caps);
            caps[j] += parts[i];
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

// [m_lam] p_mu
Z p_to_m(const Partition& mu, const Partition& lam)
{
    Filler f{mu.parts(), {}};
    return f.count(0, lam.parts());
}

struct MBasis {
    // minv[lam][mu] = [p_mu] m_lam, indices as in partitions(d)
    std::vector<std::vector<Q>> minv;
};

const MBasis& m_basis(int d)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<MBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[d];
    if (slot) return *slot;
    const auto& P = partitions(d);
    std::size_t n = P.size();
    // L[a][b] = [m_{P[b]}] p_{P[a]}; nonzero only for b >= a (lex order)
    std::vector<std::vector<Q>> L(n, std::vector<Q>(n, Q(0)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if (dominates(P[b], P[a])) L[a][b] = Q(p_to_m(P[a], P[b]));
    // p = L m  =>  m = L^{-1} p, L upper triangular.
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
    for (std::size_t b = n; b-- > 0;) {
        // row b of L^{-1}: inv[b][c]
        inv[b][b] = Q(1) / L[b][b];
        for (std::size_t c = b + 1; c < n; ++c) {
            Q s = 0;
            for (std::size_t k = b + 1; k <= c; ++k)
                if (L[b][k] != 0 && inv[k][c] != 0) s += L[b][k] * inv[k][c];
            inv[b][c] = -s / L[b][b];
        }
    }
    // m_b = sum_a inv[b][a] p_a
    auto basis = std::make_unique<MBasis>();
    basis->minv = std::move(inv);
    slot = std::move(basis);
    return *slot;
}

struct JackBasis {
    std::vector<std::vector<Q>> J;   // J[lam][mu] = theta_mu(lam)
};

const JackBasis& jack_basis(int d, const Q& alpha)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    if (d > g_cap.load()) throw cap_error("Jack basis degree above cap: " + std::to_string(d));
    static std::mutex mu;
    static std::map<std::pair<int, Q>, std::unique_ptr<JackBasis>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({d, alpha});
        if (it != cache.end()) return *it->second;
    }
    const MBasis& mb = m_basis(d);
    const auto& P = partitions(d);
    std::size_t n = P.size();
    std::vector<Q> w(n);
    for (std::size_t a = 0; a < n; ++a) w[a] = pow_q(alpha, P[a].length()) * Q(P[a].z());
    auto inner = [&](const std::vector<Q>& x, const std::vector<Q>& y) {
        Q s = 0;
        for (std::size_t a = 0; a < n; ++a)
            if (x[a] != 0 && y[a] != 0) s += x[a] * y[a] * w[a];
        return s;
    };
    auto basis = std::make_unique<JackBasis>();
    std::vector<Q> norms;
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<Q> v = mb.minv[b];
        for (std::size_t c = 0; c < b; ++c) {
            Q coef = inner(v, basis->J[c]) / norms[c];
            if (coef == 0) continue;
            for (std::size_t a = 0; a < n; ++a) v[a] -= coef * basis->J[c][a];
        }
        // P[0] = (1^d)
        if (v[0] == 0) throw internal_error("Jack normalization coefficient vanished");
        Q s = Q(1) / v[0];
        for (auto& x : v) x *= s;
        norms.push_back(inner(v, v));
        basis->J.push_back(std::move(v));
    }
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.emplace(std::make_pair(d, alpha), std::move(basis));
    return *it->second;
}

std::size_t index_of(const Partition& lam)
{
    const auto& P = partitions(lam.size());
    auto it = std::lower_bound(P.begin(), P.end(), lam);
    return static_cast<std::size_t>(it - P.begin());
}

}  // namespace

void set_jack_degree_cap(int d)
{
    if (d < 1 || d > 20) throw parameter_error("Jack degree cap must lie in [1, 20]");
    g_cap = d;
}

int jack_degree_cap() { return g_cap.load(); }

PowerSumPoly monomial_in_p(const Partition& lam)
{
    int d = lam.size();
    const MBasis& mb = m_basis(d);
    const auto& P = partitions(d);
    PowerSumPoly f;
    const auto& row = mb.minv[index_of(lam)];
    for (std::size_t a = 0; a < P.size(); ++a) f.add(P[a], row[a]);
    return f;
}

PowerSumPoly jack_polynomial(const Partition& lam, const Q& alpha)
{
    int d = lam.size();
    const JackBasis& jb = jack_basis(d, alpha);
    const auto& P = partitions(d);
    PowerSumPoly f;
    const auto& row = jb.J[index_of(lam)];
    for (std::size_t a = 0; a < P.size(); ++a) f.add(P[a], row[a]);
    return f;
}

Q theta(const Partition& mu, const Partition& lam, const Q& alpha)
{
    if (mu.size() != lam.size()) throw parameter_error("theta needs |mu| = |lam|");
    return jack_basis(lam.size(), alpha).J[index_of(lam)][index_of(mu)];
}

Surd irreducible_character(const Partition& lam, const Partition& mu, const Q& alpha)
{
    if (mu.size() != lam.size()) throw parameter_error("character needs |lam| = |mu|");
    Q r = Q(mu.z()) * theta(mu, lam, alpha) / Q(factorial(lam.size()));
    return Surd(r) * Surd::half_power(alpha, -mu.norm());
}

Surd normalized_character(const Partition& mu, const Partition& lam, const Q& alpha)
{
    if (mu.empty()) return Surd(1);
    if (mu.size() > lam.size()) return Surd(0);
    Partition full = mu.with_ones(lam.size() - mu.size());
    return Surd(Q(falling(lam.size(), mu.size()))) * irreducible_character(lam, full, alpha);
}

bool duality_character_check(const Partition& lam, const Partition& mu, const Q& alpha)
{
    Surd lhs = irreducible_character(lam, mu, alpha);
    Surd rhs = irreducible_character(lam.conjugate(), mu, Q(1) / alpha);
    if (mu.norm() % 2) rhs = -rhs;
    return lhs == rhs;
}

PowerSumPoly ns_apply(int ell, const PowerSumPoly& f, const Q& alpha)
{
    if (ell < 0) throw parameter_error("ell must be nonnegative");
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    int deg = std::max(f.degree(), 0);
    int H = ell + deg + 1;
    // w[i] for i = 1..H
    std::vector<PowerSumPoly> w(H + 1);
    for (int k = 1; k <= H; ++k) w[k] = f.d_dp(k) * (alpha * k);
    for (int step = 0; step < ell; ++step) {
        std::vector<PowerSumPoly> nw(H + 1);
        for (int i = 1; i <= H; ++i) {
            for (int j = 1; j <= H; ++j) {
                if (w[j].is_zero()) continue;
                if (j > i)
                    nw[i] += w[j].times_p(j - i);
                else if (j == i)
                    nw[i] += w[j] * (Q(i) * (alpha - 1));
                else
                    nw[i] += w[j].d_dp(i - j) * (alpha * (i - j));
            }
        }
        w = std::move(nw);
    }
    PowerSumPoly r;
    for (int k = 1; k <= H; ++k) r += w[k].times_p(k);
    return r;
}

Q Specialization::eval(const Partition& mu) const
{
    Q r = 1;
    for (int k : mu.parts()) r *= pk(k);
    return r;
}

Q Specialization::eval(const PowerSumPoly& f) const
{
    Q r = 0;
    for (const auto& [mu, c] : f.terms()) r += c * eval(mu);
    return r;
}

Specialization finite_specialization(std::vector<Q> values, std::string label)
{
    return {[values = std::move(values)](int k) { return k >= 1 && k <= (int)values.size() ? values[k - 1] : Q(0); },
            std::move(label)};
}

Specialization plancherel_specialization(const Q& u)
{
    return {[u](int k) { return k == 1 ? u : Q(0); }, "plancherel"};
}

}  // namespace jack
