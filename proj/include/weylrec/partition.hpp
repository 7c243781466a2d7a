#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "weylrec/rational.hpp"

namespace weylrec {

// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
// significant for the length; most contexts keep partitions padded to a
// fixed length r.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
    long size() const;
    int nonzero_length() const;
    bool is_zero() const { return nonzero_length() == 0; }

    // Same parts padded/truncated to length n (truncation requires the
    // dropped entries to be zero).
    Partition padded(int n) const;
    Partition trimmed() const;  // without trailing zeros

    // Adds c to every part (c may be negative as long as parts stay >= 0).
    Partition shifted(int c) const;

    std::string to_string() const;  // "[2,1,0]"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of `total` with at most `max_parts` parts, padded to
// max_parts, in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int max_parts, int total);

// Dominance: a <= b iff prefix sums of a never exceed those of b.
// Requires equal length and equal size; unordered when neither way holds.
std::partial_ordering dominance_compare(const Partition& a, const Partition& b);
bool dominance_leq(const Partition& a, const Partition& b);

// prod over nonzero part values i of i^{n_i} * n_i!, n_i the multiplicity.
Integer z_factor(const Partition& xi);

// Distinct rearrangements of the padded parts vector.
std::vector<std::vector<int>> distinct_permutations(const Partition& xi);

// |S_n orbit of x^xi| = n! / prod(multiplicities!), n = length.
Integer orbit_size(const Partition& xi);

}  // namespace weylrec
