#include "jack/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace jack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw parameter_error("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw parameter_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(d, 1)); }

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int r : parts_)
        for (int j = 0; j < r; ++j) ++c[j];
    return Partition(std::move(c));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Z Partition::z() const
{
    Z r = 1;
    std::size_t k = 0;
    while (k < parts_.size()) {
        std::size_t e = k;
        while (e < parts_.size() && parts_[e] == parts_[k]) ++e;
        long m = static_cast<long>(e - k);
        Z ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), parts_[k], m);
        r *= ip * factorial(m);
        k = e;
    }
    return r;
}

Partition Partition::operator*(const Partition& o) const
{
    std::vector<int> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return from_multiset(std::move(all));
}

Partition Partition::with_ones(int k) const
{
    std::vector<int> all = parts_;
    all.insert(all.end(), k, 1);
    return Partition(std::move(all));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {

void gen(int rem, int maxp, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (rem == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
        cur.push_back(p);
        gen(rem - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions(int d)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    if (d < 0) throw parameter_error("negative partition size");
    std::lock_guard lock(mu);
    auto& slot = cache[d];
    if (!slot) {
        auto v = std::make_unique<std::vector<Partition>>();
        std::vector<int> cur;
        gen(d, d, cur, *v);
        std::reverse(v->begin(), v->end());
        slot = std::move(v);
    }
    return *slot;
}

std::vector<Partition> partitions_no_ones(int d)
{
    std::vector<Partition> out;
    for (const auto& p : partitions(d))
        if (p.multiplicity(1) == 0) out.push_back(p);
    return out;
}

long partition_count(int d) { return static_cast<long>(partitions(d).size()); }

Q j_alpha(const Partition& p, const Q& alpha)
{
    if (alpha <= 0) throw parameter_error("alpha must be positive");
    Partition c = p.conjugate();
    Q r = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            Q arm = p[i] - j - 1;
            Q leg = c[j] - i - 1;
            r *= (alpha * arm + leg + 1) * (alpha * arm + leg + alpha);
        }
    return r;
}

Z hook_product(const Partition& p)
{
    Partition c = p.conjugate();
    Z r = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            long h = (p[i] - j - 1) + (c[j] - i - 1) + 1;
            r *= h * h;
        }
    return r;
}

bool dominates(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

namespace {

void rgs_gen(int n, std::vector<int>& cur, int maxb, std::vector<std::vector<int>>& out)
{
    if ((int)cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
        cur.push_back(b);
        rgs_gen(n, cur, std::max(maxb, b), out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> set_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (n == 0) return {{}};
    rgs_gen(n, cur, -1, out);
    return out;
}

int block_count(const std::vector<int>& rgs)
{
    int m = -1;
    for (int b : rgs) m = std::max(m, b);
    return m + 1;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

}  // namespace jack
