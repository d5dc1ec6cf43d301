#include "jack/limit_shape.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "jack/paths.hpp"

namespace jack {

namespace {

Q v_of(const std::vector<Q>& v, int k) { return k >= 1 && k <= static_cast<int>(v.size()) ? v[k - 1] : Q(0); }

}  // namespace

Q jacobi_moment(const JacobiOperator& J, int ell)
{
    if (ell < 0) throw parameter_error("moment order must be nonnegative");
    int n = ell + 1;
    std::vector<Q> row(n, 0);
    row[0] = 1;
    for (int step = 0; step < ell; ++step) {
        std::vector<Q> next(n, 0);
        for (int i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            if (i > 0) next[i - 1] += row[i];                  // v_{-1} = 1
            next[i] += row[i] * J.g * i;
            for (int j = i + 1; j < n; ++j) next[j] += row[i] * v_of(J.v, j - i);
        }
        row = std::move(next);
    }
    return row[0];
}

Poly jacobi_moment_poly(int ell, int vmax)
{
    if (ell < 0) throw parameter_error("moment order must be nonnegative");
    int n = ell + 1;
    std::vector<Poly> row(n);
    row[0] = Poly(1);
    Poly g = Poly::variable(var::g);
    for (int step = 0; step < ell; ++step) {
        std::vector<Poly> next(n);
        for (int i = 0; i < n; ++i) {
            if (row[i].is_zero()) continue;
            if (i > 0) next[i - 1] += row[i];
            if (i > 0) next[i] += row[i] * g * Poly(static_cast<long>(i));
            for (int j = i + 1; j < n && j - i <= vmax; ++j) next[j] += row[i] * Poly::variable(var::v(j - i));
        }
        row = std::move(next);
    }
    return row[0];
}

Poly motzkin_moment_poly(int ell)
{
    Poly r;
    for (const auto& e : enumerate_motzkin(ell)) {
        Q c = 1;
        int h = 0;
        for (int j = 1; j <= e.length(); ++j)
            if (e.step(j) == 0) {
                c *= e.heights[j];
                ++h;
            }
        Monomial m;
        if (h) m.emplace_back(var::g, h);
        r.add_term(m, c);
    }
    return r;
}

bool functional_equation_check(int L)
{
    if (L < 2) throw parameter_error("order must be at least 2");
    // Moments M_0..M_L as polynomials in g; M_0 = 1, M_1 = 0.
    std::vector<Poly> M(L + 1);
    M[0] = Poly(1);
    for (int l = 1; l <= L; ++l) M[l] = motzkin_moment_poly(l);
    Poly g = Poly::variable(var::g);
    // In w = 1/z: G = sum M_l w^{l+1}, G(z-g) = sum_l sum_k C(l+k, k) g^k M_l w^{l+1+k}.
    std::vector<Poly> G(L + 1), H(L + 1);
    for (int l = 0; l + 1 <= L; ++l) G[l + 1] += M[l];
    for (int l = 0; l + 1 <= L; ++l)
        for (int k = 0; l + 1 + k <= L; ++k) H[l + 1 + k] += Poly(Q(binomial(l + k, k))) * pow(g, k) * M[l];
    for (int n = 1; n <= L; ++n) {
        Poly lhs = M[n];   // [w^n] (z G - 1)
        Poly rhs;
        for (int a = 1; a < n; ++a) rhs += G[a] * H[n - a];
        if (lhs != rhs) return false;
    }
    return true;
}

bool functional_equation_check(const Q& g, int L)
{
    if (L < 2) throw parameter_error("order must be at least 2");
    std::vector<Q> M(L + 1, 0);
    M[0] = 1;
    auto at_g = [&](int id) -> Q {
        if (id == var::g) return g;
        throw parameter_error("unexpected variable");
    };
    for (int l = 1; l <= L; ++l) M[l] = motzkin_moment_poly(l).evaluate(at_g);
    std::vector<Q> G(L + 1, 0), H(L + 1, 0);
    for (int l = 0; l + 1 <= L; ++l) G[l + 1] += M[l];
    for (int l = 0; l + 1 <= L; ++l)
        for (int k = 0; l + 1 + k <= L; ++k) H[l + 1 + k] += Q(binomial(l + k, k)) * pow_q(g, k) * M[l];
    for (int n = 1; n <= L; ++n) {
        Q rhs = 0;
        for (int a = 1; a < n; ++a) rhs += G[a] * H[n - a];
        if (M[n] != rhs) return false;
    }
    return true;
}

bool moment_consistency(int L)
{
    for (int l = 1; l <= L; ++l) {
        Poly jac = jacobi_moment_poly(l, 1).substitute(var::v(1), Poly(1));
        Poly mot = motzkin_moment_poly(l);
        Poly luk = limit_moment_poly_normalized(l).substitute([](int id) { return var::is_v(id); },
                                                              [](int) { return Poly(0); });
        if (jac != mot || mot != luk) return false;
    }
    return true;
}

bool moment_consistency(const Q& g, int L)
{
    auto at_g = [&](int id) -> Q {
        if (id == var::g) return g;
        if (var::is_v(id)) return var::v_index(id) == 1 ? Q(1) : Q(0);
        throw parameter_error("unexpected variable");
    };
    for (int l = 1; l <= L; ++l) {
        Q jac = jacobi_moment(JacobiOperator::plancherel(g), l);
        Q mot = motzkin_moment_poly(l).evaluate(at_g);
        Q luk = limit_moment(l, g, {1}).rational();
        if (jac != mot || mot != luk) return false;
    }
    return true;
}

namespace {

using big = boost::multiprecision::cpp_dec_float_50;

bool is_nonpositive_integer(const big& z)
{
    return z <= 0 && boost::multiprecision::floor(z) == z;
}

// 1/Gamma(z): zero at the poles, reflection for negative arguments.
big rgamma(const big& z)
{
    if (is_nonpositive_integer(z)) return big(0);
    if (z > 0) return 1 / boost::math::tgamma(z);
    const big pi = boost::math::constants::pi<big>();
    return boost::math::tgamma(1 - z) * boost::multiprecision::sin(pi * z) / pi;
}

big bessel_series(const big& nu, const big& x)
{
    const int cap = 300;
    big hx = x / 2;
    big q = hx * hx;
    // First index with m + nu + 1 off the poles.
    int m0 = 0;
    while (is_nonpositive_integer(nu + m0 + 1)) ++m0;
    if (m0 > cap) throw precision_error("Bessel series start beyond the term cap");
    big term = boost::multiprecision::pow(hx, nu + 2 * m0) * rgamma(nu + m0 + 1) /
               boost::math::tgamma(big(m0 + 1));
    if (m0 % 2) term = -term;
    big sum = term;
    big peak = boost::multiprecision::abs(term);
    const big eps("1e-45");
    for (int m = m0 + 1; m <= cap; ++m) {
        term *= -q / (big(m) * (big(m) + nu));
        sum += term;
        big at = boost::multiprecision::abs(term);
        if (at > peak) peak = at;
        if (big(m) + nu > q && at <= eps * peak) return sum;
    }
    throw precision_error("Bessel series did not converge within the term cap");
}

}  // namespace

double bessel_J(double nu, double x)
{
    if (!(x > 0)) throw parameter_error("Bessel argument must be positive");
    return static_cast<double>(bessel_series(big(nu), big(x)));
}

namespace {

big bessel_order_fn(const big& z, const big& ag)
{
    return bessel_series(-z / ag, 2 / ag);
}

}  // namespace

BesselZeroList bessel_order_zeros(const Q& g, int n, double tol)
{
    if (g == 0) throw parameter_error("g must be nonzero");
    if (n < 1) throw parameter_error("need at least one zero");
    Q agq = abs(g);
    big ag = big(agq.get_num().get_str()) / big(agq.get_den().get_str());
    big step = ag / 4;
    big z = -2 / ag;
    const int max_steps = 200000;
    BesselZeroList out;
    out.g = to_double(g);
    out.precision = tol;
    big f = bessel_order_fn(z, ag);
    for (int s = 0; s < max_steps && static_cast<int>(out.zeros.size()) < n; ++s) {
        big z2 = z + step;
        big f2 = bessel_order_fn(z2, ag);
        if (f == 0) {
            out.zeros.push_back(static_cast<double>(z));
        } else if ((f < 0) != (f2 < 0) && f2 != 0) {
            big lo = z, hi = z2, flo = f;
            while (hi - lo > big(tol)) {
                big mid = (lo + hi) / 2;
                big fm = bessel_order_fn(mid, ag);
                if (fm == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.zeros.push_back(static_cast<double>((lo + hi) / 2));
        }
        z = z2;
        f = f2;
    }
    if (static_cast<int>(out.zeros.size()) < n) throw search_error("scan window exhausted before finding all zeros");
    return out;
}

std::vector<double> edge_limits(const Q& g, int n, double tol)
{
    auto zs = bessel_order_zeros(g, n, tol);
    double ag = std::abs(to_double(g));
    std::vector<double> out;
    for (int i = 1; i <= n; ++i) out.push_back(-zs.zeros[i - 1] + i * ag);
    if (g > 0)
        for (int i = 1; i <= n; ++i) out[i - 1] = zs.zeros[i - 1] - i * ag;
    return out;
}

void NumericStaircase::validate() const
{
    std::size_t nm = minima.size(), nx = maxima.size();
    if (orientation == Orientation::finite ? nm != nx + 1 : nm != nx)
        throw invariant_error("staircase corner counts do not match its orientation");
    std::vector<double> seq;
    if (orientation == Orientation::to_minus_infinity) {
        for (std::size_t i = 0; i < nm; ++i) {
            seq.push_back(maxima[i]);
            seq.push_back(minima[i]);
        }
    } else {
        for (std::size_t i = 0; i < nm; ++i) {
            seq.push_back(minima[i]);
            if (i < nx) seq.push_back(maxima[i]);
        }
    }
    // Deep corners of the Bessel staircases approach x_{i+1} = y_i closer than
    // double resolution, so adjacent corners may coincide; like corners may not.
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i - 1] <= seq[i])) throw invariant_error("staircase corners do not interlace");
    for (const auto* v : {&minima, &maxima})
        for (std::size_t i = 1; i < v->size(); ++i)
            if (!((*v)[i - 1] < (*v)[i])) throw invariant_error("staircase corners are not strictly increasing");
}

double NumericStaircase::omega(double x) const
{
    if (orientation == Orientation::finite) {
        double r = 0;
        for (double a : minima) r += std::abs(x - a);
        for (double b : maxima) r -= std::abs(x - b);
        return r;
    }
    // Corners in walking order from the anchored end with alternating slopes.
    std::vector<double> seq;
    if (orientation == Orientation::to_plus_infinity) {
        for (std::size_t i = 0; i < minima.size(); ++i) {
            seq.push_back(minima[i]);
            seq.push_back(maxima[i]);
        }
        if (x <= seq.front()) return -x;
        double val = -seq.front();
        double slope = 1;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (x <= seq[i]) return val + slope * (x - seq[i - 1]);
            val += slope * (seq[i] - seq[i - 1]);
            slope = -slope;
        }
        return val + slope * (x - seq.back());
    }
    for (std::size_t i = minima.size(); i-- > 0;) {
        seq.push_back(minima[i]);
        seq.push_back(maxima[i]);
    }
    if (x >= seq.front()) return x;
    double val = seq.front();
    double slope = 1;   // slope of omega seen while walking left, as d omega / d(-x)
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (x >= seq[i]) return val + slope * (seq[i - 1] - x);
        val += slope * (seq[i - 1] - seq[i]);
        slope = -slope;
    }
    return val + slope * (seq.back() - x);
}

NumericStaircase NumericStaircase::reflect() const
{
    NumericStaircase r;
    for (auto it = minima.rbegin(); it != minima.rend(); ++it) r.minima.push_back(-*it);
    for (auto it = maxima.rbegin(); it != maxima.rend(); ++it) r.maxima.push_back(-*it);
    r.orientation = orientation == Orientation::finite            ? Orientation::finite
                    : orientation == Orientation::to_plus_infinity ? Orientation::to_minus_infinity
                                                                   : Orientation::to_plus_infinity;
    return r;
}

NumericStaircase NumericStaircase::from_exact(const StaircaseShape& s)
{
    NumericStaircase r;
    for (const auto& x : s.minima) r.minima.push_back(to_double(x));
    for (const auto& y : s.maxima) r.maxima.push_back(to_double(y));
    r.orientation = Orientation::finite;
    return r;
}

NumericStaircase plancherel_limit_shape(const Q& g, int n_steps, double tol)
{
    if (n_steps < 1) throw parameter_error("need at least one step");
    auto zs = bessel_order_zeros(g, n_steps, tol).zeros;
    double gd = to_double(g);
    NumericStaircase s;
    if (g > 0) {
        s.orientation = Orientation::to_plus_infinity;
        for (double l : zs) {
            s.minima.push_back(l - gd);
            s.maxima.push_back(l);
        }
    } else {
        s.orientation = Orientation::to_minus_infinity;
        for (auto it = zs.rbegin(); it != zs.rend(); ++it) {
            s.minima.push_back(-*it - gd);
            s.maxima.push_back(-*it);
        }
    }
    s.validate();
    return s;
}

namespace {

// Masses at xs from the rational function prod (z - y) / prod (z - x).
std::vector<long double> residues(const std::vector<long double>& xs, const std::vector<long double>& ys)
{
    std::vector<long double> m(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        long double r = 1;
        for (std::size_t j = 0; j < ys.size(); ++j) r *= xs[i] - ys[j];
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) r /= xs[i] - xs[j];
        m[i] = r;
    }
    return m;
}

}  // namespace

TransitionAtoms staircase_transition_atoms(const NumericStaircase& s, int n, int N_trunc, double warn_threshold)
{
    s.validate();
    TransitionAtoms out;
    if (s.orientation == Orientation::finite) {
        std::vector<long double> xs(s.minima.begin(), s.minima.end()), ys(s.maxima.begin(), s.maxima.end());
        auto m = residues(xs, ys);
        int k = std::min<int>(n, static_cast<int>(xs.size()));
        for (int i = 0; i < k; ++i) {
            out.pos.push_back(static_cast<double>(xs[i]));
            out.mass.push_back(static_cast<double>(m[i]));
        }
        return out;
    }
    int avail = static_cast<int>(s.minima.size());
    if (N_trunc > avail) throw parameter_error("truncation level exceeds the available corners");
    if (n > N_trunc - 1) throw parameter_error("need n < N_trunc for the sensitivity estimate");
    // Corners in order from the anchored end.
    auto corner = [&](const std::vector<double>& v, int i) {
        return s.orientation == Orientation::to_plus_infinity ? v[i] : v[v.size() - 1 - i];
    };
    auto level = [&](int N) {
        std::vector<long double> xs, ys;
        for (int i = 0; i < N; ++i) xs.push_back(corner(s.minima, i));
        for (int i = 0; i + 1 < N; ++i) ys.push_back(corner(s.maxima, i));
        return residues(xs, ys);
    };
    auto hi = level(N_trunc);
    auto lo = level(N_trunc - 1);
    for (int i = 0; i < n; ++i) {
        out.pos.push_back(corner(s.minima, i));
        out.mass.push_back(static_cast<double>(hi[i]));
        out.sensitivity = std::max(out.sensitivity, static_cast<double>(std::fabs(hi[i] - lo[i])));
    }
    out.precision_warning = out.sensitivity > warn_threshold;
    return out;
}

}  // namespace jack
