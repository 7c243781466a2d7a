#include "weylrec/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weylrec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::nonzero_length() const {
    int n = length();
    while (n > 0 && parts_[static_cast<size_t>(n - 1)] == 0) --n;
    return n;
}

Partition Partition::padded(int n) const {
    if (n < nonzero_length())
        throw std::invalid_argument("Partition::padded: would drop nonzero parts");
    std::vector<int> p(parts_.begin(), parts_.begin() + std::min(length(), n));
    p.resize(static_cast<size_t>(n), 0);
    return Partition(std::move(p));
}

Partition Partition::trimmed() const { return padded(nonzero_length()); }

Partition Partition::shifted(int c) const {
    std::vector<int> p = parts_;
    for (int& x : p) {
        x += c;
        if (x < 0) throw std::invalid_argument("Partition::shifted: part became negative");
    }
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (int i = 0; i < length(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[static_cast<size_t>(i)]);
    }
    return s + "]";
}

namespace {

void enumerate_rec(int remaining, int slots, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> p = cur;
        p.resize(p.size() + static_cast<size_t>(slots), 0);
        out.emplace_back(std::move(p));
        return;
    }
    if (slots == 0) return;
    int hi = std::min(remaining, max_part);
    // ceil(remaining/slots) is the least admissible first part
    int lo = (remaining + slots - 1) / slots;
    for (int first = hi; first >= lo; --first) {
        cur.push_back(first);
        enumerate_rec(remaining - first, slots - 1, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_parts, int total) {
    if (max_parts < 1) throw std::invalid_argument("enumerate_partitions: max_parts < 1");
    if (total < 0) throw std::invalid_argument("enumerate_partitions: negative total");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(total, max_parts, total, cur, out);
    return out;
}

std::partial_ordering dominance_compare(const Partition& a, const Partition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("dominance_compare: length mismatch");
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_compare: size mismatch");
    bool leq = true, geq = true;
    long sa = 0, sb = 0;
    for (int i = 0; i < a.length(); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) leq = false;
        if (sa < sb) geq = false;
    }
    if (leq && geq) return std::partial_ordering::equivalent;
    if (leq) return std::partial_ordering::less;
    if (geq) return std::partial_ordering::greater;
    return std::partial_ordering::unordered;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    auto c = dominance_compare(a, b);
    return c == std::partial_ordering::less || c == std::partial_ordering::equivalent;
}

Integer z_factor(const Partition& xi) {
    std::map<int, int> mult;
    for (int i = 0; i < xi.length(); ++i)
        if (xi.part(i) > 0) mult[xi.part(i)]++;
    Integer z = 1;
    for (auto& [value, n] : mult) {
        for (int k = 0; k < n; ++k) z *= value;
        z *= factorial(n);
    }
    return z;
}

std::vector<std::vector<int>> distinct_permutations(const Partition& xi) {
    std::vector<int> v = xi.parts();
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Integer orbit_size(const Partition& xi) {
    Integer n = factorial(xi.length());
    std::map<int, int> mult;
    for (int i = 0; i < xi.length(); ++i) mult[xi.part(i)]++;
    for (auto& [value, m] : mult) n /= factorial(m);
    return n;
}

}  // namespace weylrec
