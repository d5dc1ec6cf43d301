#include "jack/paths.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace jack {

std::vector<int> Excursion::steps() const
{
    std::vector<int> s;
    for (int j = 1; j <= length(); ++j) s.push_back(step(j));
    return s;
}

Excursion Excursion::from_steps(const std::vector<int>& steps)
{
    Excursion e;
    e.heights.push_back(0);
    for (int s : steps) {
        e.heights.push_back(e.heights.back() + s);
        if (e.heights.back() < 0) throw parameter_error("excursion goes below zero");
    }
    if (e.heights.back() != 0) throw parameter_error("excursion does not return to zero");
    return e;
}

namespace {

void append_step(std::ostringstream& os, int s)
{
    if (s > 0) os << 'U' << s;
    else if (s == 0) os << 'H';
    else if (s == -1) os << 'D';
    else os << 'D' << -s;
}

}  // namespace

std::string Excursion::to_string() const
{
    std::ostringstream os;
    for (int j = 1; j <= length(); ++j) append_step(os, step(j));
    return os.str();
}

int PathStats::total_s0() const { return std::accumulate(s0.begin(), s0.end(), 0); }
int PathStats::total_unpaired_down() const { return std::accumulate(unpaired_down.begin(), unpaired_down.end(), 0); }
int PathStats::total_pairs() const { return std::accumulate(pairs.begin(), pairs.end(), 0); }
int PathStats::total_horizontal() const { return std::accumulate(horizontal.begin(), horizontal.end(), 0); }

int RibbonPath::site_of(int point) const
{
    int end = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        end += lengths[k];
        if (point <= end) return static_cast<int>(k);
    }
    throw parameter_error("point outside ribbon path");
}

Excursion RibbonPath::site(int k) const
{
    int begin = 0;
    for (int i = 0; i < k; ++i) begin += lengths[i];
    return Excursion::from_steps(std::vector<int>(steps.begin() + begin, steps.begin() + begin + lengths[k]));
}

bool RibbonPath::is_paired(int point) const
{
    for (const auto& [i, j] : pairings)
        if (i == point || j == point) return true;
    return false;
}

PathStats RibbonPath::stats() const
{
    int total = static_cast<int>(steps.size());
    PathStats s;
    s.s0.assign(lengths.size(), 0);
    s.unpaired_down.assign(lengths.size(), 0);
    s.horizontal.assign(total + 1, 0);
    s.up_unpaired.assign(total + 1, 0);
    s.pairs.assign(total + 1, 0);
    std::vector<char> paired(total + 1, 0);
    for (const auto& [i, j] : pairings) {
        paired[i] = paired[j] = 1;
        s.pairs[steps[j - 1]] += 1;
    }
    int y = 0;
    int point = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        for (int t = 0; t < lengths[k]; ++t) {
            int st = steps[point];
            ++point;
            y += st;
            s.max_height = std::max(s.max_height, y);
            if (st == 0) s.horizontal[y] += 1;
            else if (st > 0 && !paired[point]) s.up_unpaired[st] += 1;
            else if (st == -1 && !paired[point]) s.unpaired_down[k] += 1;
            if (y == 0) s.s0[k] += 1;
        }
    }
    return s;
}

namespace {

int find_root(std::vector<int>& parent, int x)
{
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

bool RibbonPath::connected(const std::vector<int>& blocks) const
{
    if (blocks.size() != lengths.size()) throw parameter_error("connectivity blocks do not match the sites");
    int nb = 0;
    for (int b : blocks) nb = std::max(nb, b + 1);
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    int comps = nb;
    for (const auto& [i, j] : pairings) {
        int x = find_root(parent, blocks[site_of(i)]);
        int y = find_root(parent, blocks[site_of(j)]);
        if (x != y) {
            parent[x] = y;
            --comps;
        }
    }
    return comps <= 1;
}

bool RibbonPath::connected() const
{
    std::vector<int> singletons(lengths.size());
    std::iota(singletons.begin(), singletons.end(), 0);
    return connected(singletons);
}

std::string RibbonPath::to_string() const
{
    std::ostringstream os;
    int point = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        if (k) os << '|';
        for (int t = 0; t < lengths[k]; ++t) append_step(os, steps[point++]);
    }
    if (!pairings.empty()) {
        os << " {";
        for (std::size_t p = 0; p < pairings.size(); ++p)
            os << (p ? "," : "") << pairings[p].first << '-' << pairings[p].second;
        os << '}';
    }
    return os.str();
}

namespace {

std::atomic<int> g_cap{14};

struct Dfs {
    const std::vector<int>& lengths;
    const RibbonFilter& filter;
    const std::function<void(const RibbonPath&)>& visit;
    int total = 0;
    std::vector<int> site_end;   // exclusive step index
    std::vector<int> steps;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> pending;   // (degree, point of the down step)
    int s0 = 0;

    void leaf()
    {
        if (!pending.empty()) return;
        if (filter.pairing_count && static_cast<int>(pairs.size()) != *filter.pairing_count) return;
        if (filter.s0_count && s0 != *filter.s0_count) return;
        RibbonPath p{lengths, steps, pairs};
        std::sort(p.pairings.begin(), p.pairings.end());
        if (filter.connectivity && !p.connected(*filter.connectivity)) return;
        visit(p);
    }

    // Can the state after taking a step still complete?
    bool feasible(int pos, int site, int y, int new_s0) const
    {
        int rem_site = site_end[site] - pos - 1;
        int rem_total = total - pos - 1;
        if (rem_site == 0 && y != 0) return false;
        if (y > 0 && rem_site < 1) return false;
        if (y >= total) return false;
        int npend = static_cast<int>(pending.size());
        // Every pending down step needs its up step, and the net descent
        // y + (pending degrees) must come from unpaired degree-1 down steps.
        int need = y + npend;
        for (const auto& pe : pending) need += pe.first;
        if (need > rem_total) return false;
        if (filter.pairing_count) {
            int used = static_cast<int>(pairs.size()) + npend;
            if (used > *filter.pairing_count) return false;
            if (used == *filter.pairing_count && y > rem_site) return false;
        }
        if (filter.s0_count) {
            int later_sites = static_cast<int>(lengths.size()) - site - 1;
            int at_least = new_s0 + (rem_site > 0 ? 1 : 0) + later_sites;
            if (at_least > *filter.s0_count) return false;
        }
        return true;
    }

    void go(int pos, int y)
    {
        if (pos == total) {
            leaf();
            return;
        }
        int site = 0;
        while (pos >= site_end[site]) ++site;
        int point = pos + 1;
        for (int c = -y; c < total - y; ++c) {
            int ny = y + c;
            if (c == 0 && y == 0) continue;
            int ns0 = s0 + (ny == 0 ? 1 : 0);
            steps.push_back(c);
            std::swap(s0, ns0);
            if (c < 0) {
                if (c == -1 && feasible(pos, site, ny, s0)) go(pos + 1, ny);
                pending.emplace_back(-c, point);
                if (feasible(pos, site, ny, s0)) go(pos + 1, ny);
                pending.pop_back();
            } else if (c == 0) {
                if (feasible(pos, site, ny, s0)) go(pos + 1, ny);
            } else {
                if (feasible(pos, site, ny, s0)) go(pos + 1, ny);
                for (std::size_t k = 0; k < pending.size(); ++k) {
                    if (pending[k].first != c) continue;
                    auto saved = pending[k];
                    pending.erase(pending.begin() + static_cast<long>(k));
                    pairs.emplace_back(saved.second, point);
                    if (feasible(pos, site, ny, s0)) go(pos + 1, ny);
                    pairs.pop_back();
                    pending.insert(pending.begin() + static_cast<long>(k), saved);
                }
            }
            std::swap(s0, ns0);
            steps.pop_back();
        }
    }
};

}  // namespace

void set_path_cap(int cap)
{
    if (cap < 1) throw parameter_error("path cap must be positive");
    g_cap = cap;
}

int path_cap() { return g_cap; }

void enumerate_ribbon(const std::vector<int>& lengths, const RibbonFilter& filter,
                      const std::function<void(const RibbonPath&)>& visit)
{
    int total = 0;
    for (int l : lengths) {
        if (l < 1) throw parameter_error("site lengths must be positive");
        total += l;
    }
    if (total > g_cap) throw cap_error("sum of lengths " + std::to_string(total) + " exceeds the path cap " +
                                       std::to_string(g_cap.load()));
    if (lengths.empty()) return;
    Dfs dfs{lengths, filter, visit, 0, {}, {}, {}, {}, 0};
    dfs.total = total;
    int acc = 0;
    for (int l : lengths) dfs.site_end.push_back(acc += l);
    dfs.go(0, 0);
}

std::vector<RibbonPath> enumerate_ribbon(const std::vector<int>& lengths, const RibbonFilter& filter)
{
    std::vector<RibbonPath> out;
    enumerate_ribbon(lengths, filter, [&](const RibbonPath& p) { out.push_back(p); });
    return out;
}

std::vector<Excursion> enumerate_lukasiewicz(int ell)
{
    if (ell < 1) throw parameter_error("length must be positive");
    RibbonFilter f;
    f.pairing_count = 0;
    std::vector<Excursion> out;
    enumerate_ribbon({ell}, f, [&](const RibbonPath& p) { out.push_back(Excursion::from_steps(p.steps)); });
    return out;
}

std::vector<Excursion> enumerate_motzkin(int ell)
{
    std::vector<Excursion> out;
    for (auto& e : enumerate_lukasiewicz(ell)) {
        auto s = e.steps();
        if (std::all_of(s.begin(), s.end(), [](int x) { return x <= 1; })) out.push_back(std::move(e));
    }
    return out;
}

namespace {

// prod (i h)^{|S->^i|} (n p)^{|P_n|} v_n^{|S_n|}; pvar < 0 drops the p variable.
Poly monomial_weight(const PathStats& s, int hvar, int pvar)
{
    Q coeff = 1;
    int hcount = 0, pcount = 0;
    for (std::size_t i = 1; i < s.horizontal.size(); ++i) {
        if (s.horizontal[i]) coeff *= pow_q(Q(static_cast<long>(i)), s.horizontal[i]);
        hcount += s.horizontal[i];
    }
    for (std::size_t n = 1; n < s.pairs.size(); ++n) {
        if (s.pairs[n]) coeff *= pow_q(Q(static_cast<long>(n)), s.pairs[n]);
        pcount += s.pairs[n];
    }
    Monomial m;
    if (hcount) m.emplace_back(hvar, hcount);
    if (pcount && pvar >= 0) m.emplace_back(pvar, pcount);
    for (std::size_t n = 1; n < s.up_unpaired.size(); ++n)
        if (s.up_unpaired[n]) m.emplace_back(var::v(static_cast<int>(n)), s.up_unpaired[n]);
    std::sort(m.begin(), m.end());
    Poly r;
    r.add_term(m, coeff);
    return r;
}

Q inv_s0(const PathStats& s)
{
    Q r = 1;
    for (int x : s.s0) r /= x;
    return r;
}

Q v_at(const std::vector<Q>& v, int k) { return k >= 1 && k <= static_cast<int>(v.size()) ? v[k - 1] : Q(0); }

Q weight_value(const PathStats& s, const Q& a, const Q& b, const std::vector<Q>& v)
{
    Q r = 1;
    for (std::size_t i = 1; i < s.horizontal.size(); ++i)
        if (s.horizontal[i]) r *= pow_q(Q(static_cast<long>(i)) * a, s.horizontal[i]);
    for (std::size_t n = 1; n < s.pairs.size(); ++n)
        if (s.pairs[n]) r *= pow_q(Q(static_cast<long>(n)) * b, s.pairs[n]);
    for (std::size_t n = 1; n < s.up_unpaired.size(); ++n)
        if (s.up_unpaired[n]) r *= pow_q(v_at(v, static_cast<int>(n)), s.up_unpaired[n]);
    return r;
}

bool degenerate(const std::vector<int>& lengths)
{
    return std::find(lengths.begin(), lengths.end(), 1) != lengths.end();
}

Poly set_v1(const Poly& p) { return p.substitute(var::v(1), Poly(1)); }

void check_ell(int ell)
{
    if (ell < 1) throw parameter_error("length must be positive");
}

Q ab_a(const Q& alpha, const Q& u) { return (alpha - 1) / u; }
Q ab_b(const Q& alpha, const Q& u) { return alpha / (u * u); }

void check_au(const Q& alpha, const Q& u)
{
    if (alpha <= 0 || u <= 0) throw parameter_error("alpha and u must be positive");
}

}  // namespace

Poly path_weight(const PathStats& s) { return monomial_weight(s, var::a, var::b); }

Poly limit_moment_poly(int ell)
{
    check_ell(ell);
    RibbonFilter f;
    f.pairing_count = 0;
    Poly r;
    enumerate_ribbon({ell}, f, [&](const RibbonPath& p) { r += monomial_weight(p.stats(), var::g, -1); });
    return r;
}

Poly limit_moment_poly_normalized(int ell) { return set_v1(limit_moment_poly(ell)); }

Surd limit_moment(int ell, const Q& g, const std::vector<Q>& v)
{
    Q v1 = v_at(v, 1);
    if (v1 <= 0) throw parameter_error("v_1 must be positive");
    Q val = evaluate_path_poly(limit_moment_poly(ell), g, 0, v);
    return Surd(val) * Surd::half_power(v1, -ell);
}

Poly finite_expectation_poly(const std::vector<int>& lengths)
{
    RibbonFilter f;
    f.s0_count = static_cast<int>(lengths.size());
    Poly r;
    if (degenerate(lengths)) return r;
    enumerate_ribbon(lengths, f, [&](const RibbonPath& p) { r += path_weight(p.stats()); });
    return r;
}

Poly finite_cumulant_S_poly(const std::vector<int>& lengths)
{
    RibbonFilter f;
    std::vector<int> singletons(lengths.size());
    std::iota(singletons.begin(), singletons.end(), 0);
    f.connectivity = singletons;
    Poly r;
    if (degenerate(lengths)) return r;
    enumerate_ribbon(lengths, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        Poly w = path_weight(s);
        w *= inv_s0(s);
        r += w;
    });
    return r;
}

namespace {

Q evaluate_ab(const Poly& p, const Q& a, const Q& b, const std::vector<Q>& v)
{
    return p.evaluate([&](int id) -> Q {
        if (id == var::a) return a;
        if (id == var::b) return b;
        if (var::is_v(id)) return v_at(v, var::v_index(id));
        throw parameter_error("unexpected variable " + var::name(id));
    });
}

}  // namespace

Q finite_expectation(const std::vector<int>& lengths, const Q& alpha, const Q& u, const std::vector<Q>& v)
{
    check_au(alpha, u);
    return evaluate_ab(finite_expectation_poly(lengths), ab_a(alpha, u), ab_b(alpha, u), v);
}

Q finite_cumulant_S(const std::vector<int>& lengths, const Q& alpha, const Q& u, const std::vector<Q>& v)
{
    check_au(alpha, u);
    return evaluate_ab(finite_cumulant_S_poly(lengths), ab_a(alpha, u), ab_b(alpha, u), v);
}

Q depoissonized_expectation(const std::vector<int>& lengths, int d, const Q& alpha, const Q& u,
                            const std::vector<Q>& v)
{
    check_au(alpha, u);
    if (d < 1) throw parameter_error("d must be positive");
    if (v_at(v, 1) != 1) throw parameter_error("depoissonized expectation needs v_1 = 1");
    Q a = ab_a(alpha, u), b = ab_b(alpha, u);
    Q r = 0;
    if (degenerate(lengths)) return r;
    RibbonFilter f;
    f.s0_count = static_cast<int>(lengths.size());
    enumerate_ribbon(lengths, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        int K = s.total_unpaired_down();
        r += Q(falling(d, K)) * pow_q(b, K) * weight_value(s, a, b, v);
    });
    return r;
}

Poly s0_weighted_sum(int ell)
{
    check_ell(ell);
    RibbonFilter f;
    f.pairing_count = 0;
    Poly r;
    enumerate_ribbon({ell}, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        Poly w = monomial_weight(s, var::g, -1);
        w *= inv_s0(s);
        r += w;
    });
    return r;
}

Poly clt_mean_poly(int ell)
{
    check_ell(ell);
    if (ell == 1) return {};
    Poly r = s0_weighted_sum(ell).derivative(var::g) * Poly::variable(var::gp);
    r *= Q(1, ell - 1);
    return r;
}

namespace {

// Connected ribbon paths on two sites with exactly one pairing.
Poly one_pairing_sum(int k, int l)
{
    RibbonFilter f;
    f.pairing_count = 1;
    f.connectivity = std::vector<int>{0, 1};
    Poly r;
    enumerate_ribbon({k, l}, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        Poly w = monomial_weight(s, var::g, -1);
        w *= inv_s0(s);
        r += w;
    });
    return r;
}

void check_kl(int k, int l)
{
    if (k < 1 || l < 1) throw parameter_error("lengths must be positive");
}

}  // namespace

Poly clt_cov_poly(int k, int l)
{
    check_kl(k, l);
    if (k == 1 || l == 1) return {};
    Poly r = one_pairing_sum(k, l);
    r *= Q(1, (k - 1) * (l - 1));
    return r;
}

Surd clt_mean(int ell, const Q& g, const Q& gp, const std::vector<Q>& v)
{
    Q v1 = v_at(v, 1);
    if (v1 <= 0) throw parameter_error("v_1 must be positive");
    return Surd(evaluate_path_poly(clt_mean_poly(ell), g, gp, v)) * Surd::half_power(v1, -ell);
}

Surd clt_cov(int k, int l, const Q& g, const std::vector<Q>& v)
{
    Q v1 = v_at(v, 1);
    if (v1 <= 0) throw parameter_error("v_1 must be positive");
    return Surd(evaluate_path_poly(clt_cov_poly(k, l), g, 0, v)) * Surd::half_power(v1, -(k + l));
}

Poly afp_mean_poly(int ell)
{
    check_ell(ell);
    if (ell == 1) return {};
    Poly t = set_v1(s0_weighted_sum(ell));
    Poly r = t.derivative(var::g) * Poly::variable(var::gp);
    for (int i = 2; i <= ell; ++i) {
        Poly d = t.derivative(var::v(i));
        if (!d.is_zero()) r += d * Poly::variable(var::vp(i));
    }
    r *= Q(1, ell - 1);
    return r;
}

Poly afp_cov_poly(int k, int l)
{
    check_kl(k, l);
    if (k == 1 || l == 1) return {};
    Poly r = one_pairing_sum(k, l);
    RibbonFilter f;
    f.pairing_count = 0;
    enumerate_ribbon({k, l}, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        // deg(s) over S_{!=0} of each site: up degree, or -1 after a down step.
        std::vector<int> deg[2];
        int point = 0;
        for (int site = 0; site < 2; ++site)
            for (int t = 0; t < p.lengths[site]; ++t) {
                int st = p.steps[point++];
                if (st > 0) deg[site].push_back(st);
                else if (st < 0) deg[site].push_back(-1);
            }
        Poly base = monomial_weight(s, var::g, -1);
        base *= inv_s0(s);
        for (int d1 : deg[0])
            for (int d2 : deg[1]) {
                if (d1 == -1 && d2 == -1) {
                    r -= base;
                } else if (d1 >= 2 && d2 >= 2) {
                    PathStats t = s;
                    t.up_unpaired[d1] -= 1;
                    t.up_unpaired[d2] -= 1;
                    Poly w = monomial_weight(t, var::g, -1) * Poly::variable(var::vkl(d1, d2));
                    w *= inv_s0(s);
                    r += w;
                }
            }
    });
    r = set_v1(r);
    r *= Q(1, (k - 1) * (l - 1));
    return r;
}

Poly depoissonized_cov_poly(int k, int l)
{
    check_kl(k, l);
    if (k == 1 || l == 1) return {};
    Poly r = one_pairing_sum(k, l);
    RibbonFilter f;
    f.pairing_count = 0;
    enumerate_ribbon({k, l}, f, [&](const RibbonPath& p) {
        PathStats s = p.stats();
        Poly w = monomial_weight(s, var::g, -1);
        w *= inv_s0(s) * s.unpaired_down[0] * s.unpaired_down[1];
        r -= w;
    });
    r = set_v1(r);
    r *= Q(1, (k - 1) * (l - 1));
    return r;
}

Q evaluate_path_poly(const Poly& p, const Q& g, const Q& gp, const std::vector<Q>& v, const std::vector<Q>& vp,
                     const std::function<Q(int, int)>& vkl)
{
    return p.evaluate([&](int id) -> Q {
        if (id == var::g) return g;
        if (id == var::gp) return gp;
        if (var::is_v(id)) return v_at(v, var::v_index(id));
        if (var::is_vp(id)) return v_at(vp, id - var::vp(0));
        if (id >= 100000) {
            if (!vkl) throw parameter_error("polynomial needs v(k|l) values");
            int code = id - 100000;
            return vkl(code / 1000 - 2, code % 1000 - 2);
        }
        throw parameter_error("unexpected variable " + var::name(id));
    });
}

Q afp_mean(int ell, const Q& g, const Q& gp, const std::vector<Q>& v, const std::vector<Q>& vp)
{
    if (v_at(v, 1) != 1) throw parameter_error("afp formulas need v_1 = 1");
    return evaluate_path_poly(afp_mean_poly(ell), g, gp, v, vp);
}

Q afp_cov(int k, int l, const Q& g, const std::vector<Q>& v, const std::function<Q(int, int)>& vkl)
{
    if (v_at(v, 1) != 1) throw parameter_error("afp formulas need v_1 = 1");
    return evaluate_path_poly(afp_cov_poly(k, l), g, 0, v, {}, vkl);
}

bool moment_duality_check(int ell, bool reflect)
{
    Poly m = limit_moment_poly_normalized(ell);
    Poly dual = m.substitute(
        [](int id) { return id == var::g || (var::is_v(id) && var::v_index(id) % 2 == 0); },
        [](int id) { return id == var::g ? -Poly::variable(var::g) : -Poly::variable(id); });
    if (reflect && ell % 2 == 1) dual = -dual;
    return m == dual;
}

}  // namespace jack
