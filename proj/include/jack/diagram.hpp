#pragma once

#include <string>
#include <vector>

#include "jack/partition.hpp"
#include "jack/rational.hpp"

namespace jack {

// Diagram whose boxes are w wide and h high.
struct AnisotropicDiagram {
    Partition base;
    Q w = 1;
    Q h = 1;
};

// Lambda^{(alpha)}_d style scalings.
AnisotropicDiagram scaled_alpha_u(const Partition& p, const Q& alpha, const Q& u);   // T_{alpha/u, 1/u}

// Interlacing extrema of a finite profile in Russian coordinates:
// x_1 < y_1 < x_2 < ... < y_k < x_{k+1}.
struct StaircaseShape {
    std::vector<Q> minima;
    std::vector<Q> maxima;

    void validate() const;                 // throws invariant_error
    Q omega(const Q& x) const;             // sum |x - x_i| - sum |x - y_j|
    StaircaseShape reflect() const;        // x -> -x
};

StaircaseShape profile(const AnisotropicDiagram& d);

struct Atom {
    Q pos;
    Q mass;
};

struct DiscreteMeasure {
    std::vector<Atom> atoms;   // strictly increasing positions

    Q total() const;
    Q moment(int ell) const;
    bool is_probability() const;           // all masses >= 0 and total 1
};

DiscreteMeasure transition_measure(const StaircaseShape& s);

enum class Observable { moment, boolean, free, fundamental };

Observable parse_observable(const std::string& s);
const char* observable_name(Observable k);

// X_1..X_L (index 0 holds X_0: 1 for moments, 0 otherwise).
std::vector<Q> observable_sequence(const DiscreteMeasure& m, Observable kind, int L);
Q observables(const DiscreteMeasure& m, Observable kind, int ell);

// Sequence converters on moment lists M[0..L] with M[0] = 1.
std::vector<Q> boolean_from_moments(const std::vector<Q>& M);
std::vector<Q> moments_from_boolean(const std::vector<Q>& B);
std::vector<Q> free_from_moments(const std::vector<Q>& M);
std::vector<Q> fundamental_from_boolean(const std::vector<Q>& B);

// X_l(T_{cw,ch} lambda) from X_l(T_{w,h} lambda).
Q rescale_observable(const Q& x, int ell, const Q& c);

// Convenience: B_l, S_l etc. of T_{w,h}lambda.
std::vector<Q> diagram_observables(const AnisotropicDiagram& d, Observable kind, int L);

}  // namespace jack
