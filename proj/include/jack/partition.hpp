#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jack/rational.hpp"

namespace jack {

// Weakly decreasing list of positive integers. Comparison is lexicographic
// on the parts, with a shorter prefix comparing smaller.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);                 // NOLINT(implicit)
    Partition(std::initializer_list<int> parts);

    // Builds from any list of positive parts by sorting.
    static Partition from_multiset(std::vector<int> parts);
    static Partition ones(int d);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int norm() const { return size_ - length(); }       // |mu| - l(mu)
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    int multiplicity(int i) const;
    Z z() const;                                         // prod i^{m_i} m_i!
    Partition operator*(const Partition& o) const;       // union of parts
    Partition with_ones(int k) const;                    // mu . 1^k

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

// All partitions of d, increasing lexicographic order: (1^d) first, (d) last.
const std::vector<Partition>& partitions(int d);

// Partitions of d with every part >= 2 (used when extending characters).
std::vector<Partition> partitions_no_ones(int d);

// Number of partitions of d.
long partition_count(int d);

// prod over cells of (alpha*arm + leg + 1)(alpha*arm + leg + alpha).
Q j_alpha(const Partition& p, const Q& alpha);

// Hook product for alpha = 1 cross-check: prod hook^2.
Z hook_product(const Partition& p);

bool dominates(const Partition& a, const Partition& b);

// Set partitions of {0..n-1} as restricted growth strings: block[i] is the
// block label of i, labels first appear in increasing order.
std::vector<std::vector<int>> set_partitions(int n);
int block_count(const std::vector<int>& rgs);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace jack
