#pragma once

#include <compare>
#include <string>
#include <vector>

#include "weylrec/partition.hpp"

namespace weylrec {

// Dominant integral weight of sl_r: r-1 nonnegative coefficients on the
// fundamental weights.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> coords);
    DominantWeight(std::initializer_list<int> coords);

    const std::vector<int>& coords() const { return coords_; }
    int coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    int num_coords() const { return static_cast<int>(coords_.size()); }
    bool is_zero() const;

    std::string to_string() const;  // "1,1" ("0" for the zero weight of sl_2)

    auto operator<=>(const DominantWeight&) const = default;

private:
    std::vector<int> coords_;
};

// lambda = sum lambda_i omega_i  <->  xi in Par(r-1) with xi_j = sum_{i>=j} lambda_i,
// so consecutive differences recover the coordinates.
Partition weight_to_partition(const DominantWeight& w, int r);

// Inverse; accepts a partition of length r-1, or of length r whose last part
// must be zero.
DominantWeight partition_to_weight(const Partition& xi, int r);

}  // namespace weylrec
