#include "jack/poly.hpp"

#include <cmath>
#include <sstream>

namespace jack {

namespace var {

bool is_v(int id) { return id >= 100 && id < 1000; }
int v_index(int id) { return is_v(id) ? id - 100 : (is_vp(id) ? id - 1000 : -1); }
bool is_vp(int id) { return id >= 1000 && id < 100000; }

std::string name(int id)
{
    switch (id) {
    case g: return "g";
    case gp: return "g'";
    case a: return "a";
    case b: return "b";
    case z: return "z";
    default: break;
    }
    if (is_v(id)) return "v" + std::to_string(id - 100);
    if (is_vp(id)) return "v'" + std::to_string(id - 1000);
    if (id >= 100000) {
        int r = id - 100000;
        return "v(" + std::to_string(r / 1000 - 2) + "|" + std::to_string(r % 1000 - 2) + ")";
    }
    return "x" + std::to_string(id);
}

}  // namespace var

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Poly::Poly(const Q& c)
{
    if (c != 0) terms_[{}] = c;
}

Poly Poly::variable(int id, int exp)
{
    Poly p;
    if (exp == 0)
        p.terms_[{}] = 1;
    else
        p.terms_[{{id, exp}}] = 1;
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Q Poly::constant_term() const
{
    auto it = terms_.find({});
    return it == terms_.end() ? Q(0) : it->second;
}

int Poly::degree_in(int id) const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == id) d = std::max(d, e);
    return d;
}

void Poly::add_term(const Monomial& m, const Q& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
}

Poly& Poly::operator*=(const Q& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    r *= Q(-1);
    return r;
}

Poly Poly::derivative(int id) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != id) continue;
            Monomial n = m;
            int e = n[i].second;
            if (e == 1)
                n.erase(n.begin() + i);
            else
                --n[i].second;
            r.add_term(n, c * e);
        }
    }
    return r;
}

Poly Poly::coefficient(int id, int k) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        Monomial n;
        for (const auto& ve : m) {
            if (ve.first == id)
                e = ve.second;
            else
                n.push_back(ve);
        }
        if (e == k) r.add_term(n, c);
    }
    return r;
}

Poly Poly::substitute(int id, const Poly& value) const
{
    return substitute([id](int v) { return v == id; }, [&value](int) { return value; });
}

Poly Poly::substitute(const std::function<bool(int)>& pick, const std::function<Poly(int)>& value) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        Monomial rest;
        for (const auto& [v, e] : m) {
            if (pick(v))
                t *= pow(value(v), e);
            else
                rest.emplace_back(v, e);
        }
        Poly rm;
        rm.terms_[rest] = 1;
        r += t * rm;
    }
    return r;
}

Q Poly::evaluate(const std::function<Q(int)>& value) const
{
    Q r = 0;
    for (const auto& [m, c] : terms_) {
        Q t = c;
        for (const auto& [v, e] : m) t *= pow_q(value(v), e);
        r += t;
    }
    return r;
}

double Poly::evaluate_double(const std::function<double(int)>& value) const
{
    double r = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (const auto& [v, e] : m) t *= std::pow(value(v), e);
        r += t;
    }
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Q ac = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = ac == 1 && !m.empty();
        if (!unit) os << ac.get_str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!unit || i) os << "*";
            os << var::name(m[i].first);
            if (m[i].second > 1) os << "^" << m[i].second;
        }
    }
    return os.str();
}

Poly pow(const Poly& p, int e)
{
    Poly r(Q(1)), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace jack
