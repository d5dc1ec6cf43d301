#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jack/poly.hpp"
#include "jack/rational.hpp"

namespace jack {

// Heights y_0 = 0, ..., y_l = 0, all >= 0.
struct Excursion {
    std::vector<int> heights;

    int length() const { return static_cast<int>(heights.size()) - 1; }
    int step(int j) const { return heights[j] - heights[j - 1]; }   // j = 1..length
    std::vector<int> steps() const;
    static Excursion from_steps(const std::vector<int>& steps);
    std::string to_string() const;   // e.g. "U1HD", "U2D2"
};

struct PathStats {
    std::vector<int> s0;               // per site, points at height 0 (origin excluded)
    std::vector<int> unpaired_down;    // per site, |S_{-1}|
    std::vector<int> horizontal;       // horizontal[i] = |S^i_->|
    std::vector<int> up_unpaired;      // up_unpaired[n] = |S_n|
    std::vector<int> pairs;            // pairs[n] = |P_n|
    int max_height = 0;

    int total_s0() const;
    int total_unpaired_down() const;
    int total_pairs() const;
    int total_horizontal() const;
};

// Concatenated excursions with pairings. Points are numbered 1..sum(lengths)
// along the concatenation; a pairing (i, j), i < j, joins the point after a
// down step of degree n with the point after an up step of degree n.
struct RibbonPath {
    std::vector<int> lengths;
    std::vector<int> steps;
    std::vector<std::pair<int, int>> pairings;

    int site_of(int point) const;
    Excursion site(int k) const;
    bool is_paired(int point) const;
    PathStats stats() const;
    // Connectivity of the pairing graph over the blocks of a set partition of
    // the sites (restricted growth string); singletons give plain connectivity.
    bool connected(const std::vector<int>& blocks) const;
    bool connected() const;
    std::string to_string() const;
};

struct RibbonFilter {
    std::optional<int> pairing_count;
    std::optional<int> s0_count;
    std::optional<std::vector<int>> connectivity;   // blocks over sites
};

// Enumeration cap on sum(lengths); default 14.
void set_path_cap(int cap);
int path_cap();

void enumerate_ribbon(const std::vector<int>& lengths, const RibbonFilter& filter,
                      const std::function<void(const RibbonPath&)>& visit);
std::vector<RibbonPath> enumerate_ribbon(const std::vector<int>& lengths, const RibbonFilter& filter = {});

std::vector<Excursion> enumerate_lukasiewicz(int ell);
std::vector<Excursion> enumerate_motzkin(int ell);

// F_{a,b,v} with a = var::a, b = var::b, v_i = var::v(i).
Poly path_weight(const PathStats& s);

// Sum over L0(ell) of prod (i g)^{|S->^i|} v_i^{|S_i|}; v_1 stays a variable.
Poly limit_moment_poly(int ell);
// Same with v_1 = 1.
Poly limit_moment_poly_normalized(int ell);
// v_1^{-ell/2} times the path sum; odd ell with nonsquare v_1 gives a surd.
Surd limit_moment(int ell, const Q& g, const std::vector<Q>& v);

// Polynomials in a, b, v_k.
Poly finite_expectation_poly(const std::vector<int>& lengths);
Poly finite_cumulant_S_poly(const std::vector<int>& lengths);

// a = (alpha-1)/u, b = alpha/u^2, v[k-1] = v_k (missing entries are 0).
Q finite_expectation(const std::vector<int>& lengths, const Q& alpha, const Q& u, const std::vector<Q>& v);
Q finite_cumulant_S(const std::vector<int>& lengths, const Q& alpha, const Q& u, const std::vector<Q>& v);
Q depoissonized_expectation(const std::vector<int>& lengths, int d, const Q& alpha, const Q& u,
                            const std::vector<Q>& v);

// Sum over L0(ell) with the 1/|S^0| weight, polynomial in g and v_k.
Poly s0_weighted_sum(int ell);

// Polynomials in g, g', v_k (v_1 kept) without the v_1^{-ell/2} prefactor.
Poly clt_mean_poly(int ell);
Poly clt_cov_poly(int k, int l);
Surd clt_mean(int ell, const Q& g, const Q& gp, const std::vector<Q>& v);
Surd clt_cov(int k, int l, const Q& g, const std::vector<Q>& v);

// Fixed-size versions with v_1 = 1. afp_cov_poly contains var::vkl(k, l)
// for k, l >= 2; the conventions v(-1|-1) = -1 and v(+-1|j) = 0 are applied.
Poly afp_mean_poly(int ell);
Poly afp_cov_poly(int k, int l);
// The two-sum covariance of the conditioned Jack-Thoma characters.
Poly depoissonized_cov_poly(int k, int l);

Q afp_mean(int ell, const Q& g, const Q& gp, const std::vector<Q>& v, const std::vector<Q>& vp);
// vkl(k, l) for k, l >= 2.
Q afp_cov(int k, int l, const Q& g, const std::vector<Q>& v, const std::function<Q(int, int)>& vkl);

// Substitutes g, g', v_k (k >= 1), v'_k, a, b into a path polynomial.
Q evaluate_path_poly(const Poly& p, const Q& g, const Q& gp, const std::vector<Q>& v,
                     const std::vector<Q>& vp = {}, const std::function<Q(int, int)>& vkl = {});

// M_l(g, v) against M_l(-g, +-v) with +-v = (v_1, -v_2, v_3, ...). With
// reflect set the comparison includes the (-1)^l of x -> -x.
bool moment_duality_check(int ell, bool reflect = true);

}  // namespace jack
