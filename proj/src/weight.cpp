#include "weylrec/weight.hpp"

#include <stdexcept>

namespace weylrec {

DominantWeight::DominantWeight(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_)
        if (c < 0) throw std::invalid_argument("DominantWeight: negative coordinate");
}

DominantWeight::DominantWeight(std::initializer_list<int> coords)
    : DominantWeight(std::vector<int>(coords)) {}

bool DominantWeight::is_zero() const {
    for (int c : coords_)
        if (c != 0) return false;
    return true;
}

std::string DominantWeight::to_string() const {
    std::string s;
    for (int i = 0; i < num_coords(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords_[static_cast<size_t>(i)]);
    }
    return s;
}

Partition weight_to_partition(const DominantWeight& w, int r) {
    if (w.num_coords() != r - 1)
        throw std::invalid_argument("weight_to_partition: expected r-1 coordinates");
    std::vector<int> parts(static_cast<size_t>(r - 1), 0);
    int acc = 0;
    for (int j = r - 2; j >= 0; --j) {
        acc += w.coord(j);
        parts[static_cast<size_t>(j)] = acc;
    }
    return Partition(std::move(parts));
}

DominantWeight partition_to_weight(const Partition& xi, int r) {
    if (xi.length() != r - 1 && xi.length() != r)
        throw std::invalid_argument("partition_to_weight: expected length r-1 or r");
    if (xi.length() == r && xi.part(r - 1) != 0)
        throw std::invalid_argument(
            "partition_to_weight: last part must be zero (subtract xi_r first)");
    std::vector<int> coords(static_cast<size_t>(r - 1), 0);
    for (int j = 0; j < r - 1; ++j)
        coords[static_cast<size_t>(j)] = xi.part(j) - xi.part(j + 1);
    return DominantWeight(std::move(coords));
}

}  // namespace weylrec
