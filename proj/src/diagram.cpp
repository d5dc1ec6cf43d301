#include "jack/diagram.hpp"

#include <algorithm>

namespace jack {

AnisotropicDiagram scaled_alpha_u(const Partition& p, const Q& alpha, const Q& u)
{
    if (alpha <= 0 || u <= 0) throw parameter_error("alpha and u must be positive");
    return {p, alpha / u, Q(1) / u};
}

void StaircaseShape::validate() const
{
    if (minima.size() != maxima.size() + 1)
        throw invariant_error("profile needs exactly one more minimum than maxima");
    for (std::size_t i = 0; i < maxima.size(); ++i)
        if (!(minima[i] < maxima[i] && maxima[i] < minima[i + 1]))
            throw invariant_error("profile extrema do not interlace");
}

Q StaircaseShape::omega(const Q& x) const
{
    Q r = 0;
    for (const auto& m : minima) r += abs(x - m);
    for (const auto& m : maxima) r -= abs(x - m);
    return r;
}

StaircaseShape StaircaseShape::reflect() const
{
    StaircaseShape r;
    for (auto it = minima.rbegin(); it != minima.rend(); ++it) r.minima.push_back(-*it);
    for (auto it = maxima.rbegin(); it != maxima.rend(); ++it) r.maxima.push_back(-*it);
    return r;
}

StaircaseShape profile(const AnisotropicDiagram& d)
{
    if (d.w <= 0 || d.h <= 0) throw parameter_error("box sides must be positive");
    const Partition& p = d.base;
    StaircaseShape s;
    int L = p.length();
    // addable cell in row r (0-based) exists when r == 0 or p[r-1] > p[r]
    for (int r = 0; r <= L; ++r)
        if (r == 0 || p[r - 1] > p[r]) s.minima.push_back(p[r] * d.w - r * d.h);
    // removable cell at the end of row r (1-based) when p[r-1] > p[r]
    for (int r = 1; r <= L; ++r)
        if (p[r - 1] > p[r]) s.maxima.push_back(p[r - 1] * d.w - r * d.h);
    std::sort(s.minima.begin(), s.minima.end());
    std::sort(s.maxima.begin(), s.maxima.end());
    s.validate();
    return s;
}

Q DiscreteMeasure::total() const
{
    Q t = 0;
    for (const auto& a : atoms) t += a.mass;
    return t;
}

Q DiscreteMeasure::moment(int ell) const
{
    Q t = 0;
    for (const auto& a : atoms) t += a.mass * pow_q(a.pos, ell);
    return t;
}

bool DiscreteMeasure::is_probability() const
{
    for (const auto& a : atoms)
        if (a.mass < 0) return false;
    return total() == 1;
}

DiscreteMeasure transition_measure(const StaircaseShape& s)
{
    s.validate();
    DiscreteMeasure m;
    for (std::size_t i = 0; i < s.minima.size(); ++i) {
        const Q& x = s.minima[i];
        Q num = 1, den = 1;
        for (const auto& y : s.maxima) num *= x - y;
        for (std::size_t j = 0; j < s.minima.size(); ++j)
            if (j != i) den *= x - s.minima[j];
        m.atoms.push_back({x, num / den});
    }
    return m;
}

Observable parse_observable(const std::string& s)
{
    if (s == "moment" || s == "M") return Observable::moment;
    if (s == "boolean" || s == "B") return Observable::boolean;
    if (s == "free" || s == "R") return Observable::free;
    if (s == "fundamental" || s == "S") return Observable::fundamental;
    throw parameter_error("unknown observable kind: " + s);
}

const char* observable_name(Observable k)
{
    switch (k) {
    case Observable::moment: return "M";
    case Observable::boolean: return "B";
    case Observable::free: return "R";
    case Observable::fundamental: return "S";
    }
    return "?";
}

namespace {

// c = a * b truncated to degree L (index = power of t).
std::vector<Q> mul_trunc(const std::vector<Q>& a, const std::vector<Q>& b, int L)
{
    std::vector<Q> c(L + 1, Q(0));
    for (int i = 0; i <= L && i < (int)a.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= L && j < (int)b.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

std::vector<Q> boolean_from_moments(const std::vector<Q>& M)
{
    int L = (int)M.size() - 1;
    std::vector<Q> B(L + 1, Q(0));
    for (int l = 1; l <= L; ++l) {
        Q t = M[l];
        for (int k = 1; k < l; ++k) t -= B[k] * M[l - k];
        B[l] = t;
    }
    return B;
}

std::vector<Q> moments_from_boolean(const std::vector<Q>& B)
{
    int L = (int)B.size() - 1;
    std::vector<Q> M(L + 1, Q(0));
    M[0] = 1;
    for (int l = 1; l <= L; ++l)
        for (int k = 1; k <= l; ++k) M[l] += B[k] * M[l - k];
    return M;
}

std::vector<Q> free_from_moments(const std::vector<Q>& M)
{
    int L = (int)M.size() - 1;
    std::vector<Q> R(L + 1, Q(0));
    // pw[s] = M(t)^s truncated
    std::vector<std::vector<Q>> pw(L + 1);
    pw[0].assign(L + 1, Q(0));
    pw[0][0] = 1;
    for (int s = 1; s <= L; ++s) pw[s] = mul_trunc(pw[s - 1], M, L);
    for (int n = 1; n <= L; ++n) {
        Q t = M[n];
        for (int s = 1; s < n; ++s) t -= R[s] * pw[s][n - s];
        R[n] = t;
    }
    return R;
}

std::vector<Q> fundamental_from_boolean(const std::vector<Q>& B)
{
    int L = (int)B.size() - 1;
    std::vector<Q> b = B;
    b[0] = 0;
    std::vector<Q> S(L + 1, Q(0));
    std::vector<Q> pw = b;
    for (int n = 1; n <= L; ++n) {
        for (int l = 1; l <= L; ++l) S[l] += pw[l] / n;
        pw = mul_trunc(pw, b, L);
    }
    return S;
}

std::vector<Q> observable_sequence(const DiscreteMeasure& m, Observable kind, int L)
{
    std::vector<Q> M(L + 1);
    for (int l = 0; l <= L; ++l) M[l] = m.moment(l);
    switch (kind) {
    case Observable::moment: return M;
    case Observable::boolean: return boolean_from_moments(M);
    case Observable::free: return free_from_moments(M);
    case Observable::fundamental: return fundamental_from_boolean(boolean_from_moments(M));
    }
    throw internal_error("unreachable observable kind");
}

Q observables(const DiscreteMeasure& m, Observable kind, int ell)
{
    if (ell < 1) throw parameter_error("observable index must be >= 1");
    return observable_sequence(m, kind, ell)[ell];
}

Q rescale_observable(const Q& x, int ell, const Q& c)
{
    if (c <= 0) throw parameter_error("scale must be positive");
    return pow_q(c, ell) * x;
}

std::vector<Q> diagram_observables(const AnisotropicDiagram& d, Observable kind, int L)
{
    return observable_sequence(transition_measure(profile(d)), kind, L);
}

}  // namespace jack
