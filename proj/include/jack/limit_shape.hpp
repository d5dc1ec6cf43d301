#pragma once

#include <string>
#include <vector>

#include "jack/diagram.hpp"
#include "jack/poly.hpp"
#include "jack/rational.hpp"

namespace jack {

// Entries (i, j) = i g delta_ij + v_{j-i} with v_{-1} = 1, v_0 = 0, v_{-l} = 0.
struct JacobiOperator {
    Q g = 0;
    std::vector<Q> v{1};   // v[k-1] = v_k

    static JacobiOperator plancherel(const Q& g) { return {g, {1}}; }
};

// (J^l)_{0,0} on the (l+1) x (l+1) truncation.
Q jacobi_moment(const JacobiOperator& J, int ell);
// Symbolic version in g and v_k (v_1 kept as a variable). With vmax = 1 only
// v_1 enters, i.e. the Plancherel operator up to v_1.
Poly jacobi_moment_poly(int ell, int vmax);

// Sum over Motzkin paths of prod (i g)^{|S->^i|}.
Poly motzkin_moment_poly(int ell);

// z G(z) - 1 = G(z) G(z - g) through z^{-L} for the Plancherel moments.
bool functional_equation_check(int L);              // symbolic g
bool functional_equation_check(const Q& g, int L);

// Jacobi = Motzkin = Lukasiewicz at v = (1, 0, ...) for all l <= L.
bool moment_consistency(int L);
bool moment_consistency(const Q& g, int L);

// J_nu(x) by its power series in 50-digit arithmetic, x > 0.
double bessel_J(double nu, double x);

struct BesselZeroList {
    double g = 0;
    std::vector<double> zeros;   // l_1 < l_2 < ...
    double precision = 0;
};

// Smallest n zeros in z of J_{-z/|g|}(2/|g|).
BesselZeroList bessel_order_zeros(const Q& g, int n, double tol = 1e-12);

// lambda_i / (-g d) -> -l_i - i g for g < 0 (columns for g > 0).
std::vector<double> edge_limits(const Q& g, int n, double tol = 1e-12);

enum class Orientation { finite, to_plus_infinity, to_minus_infinity };

// Staircase with float corners. For infinite orientations the listed corners
// are the ones nearest the anchored end: minima[0] is the extreme minimum
// for to_plus_infinity, minima.back() for to_minus_infinity.
struct NumericStaircase {
    std::vector<double> minima;   // increasing
    std::vector<double> maxima;   // increasing
    Orientation orientation = Orientation::finite;

    void validate() const;              // interlacing, throws invariant_error
    double omega(double x) const;       // valid on the covered window
    NumericStaircase reflect() const;
    static NumericStaircase from_exact(const StaircaseShape& s);
};

NumericStaircase plancherel_limit_shape(const Q& g, int n_steps, double tol = 1e-12);

struct TransitionAtoms {
    std::vector<double> pos;
    std::vector<double> mass;
    double sensitivity = 0;      // max |mass_N - mass_{N-1}| over the reported atoms
    bool precision_warning = false;
};

// Residue masses at the first n minima counted from the anchored end, using
// N_trunc minima and N_trunc - 1 maxima (all corners for finite shapes).
TransitionAtoms staircase_transition_atoms(const NumericStaircase& s, int n, int N_trunc,
                                           double warn_threshold = 1e-6);

}  // namespace jack
