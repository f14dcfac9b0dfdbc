#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hec {

/**
 * A partition (l1 >= l2 >= l3 >= 0) with at most three parts, indexing an
 * irreducible representation of Sp(6) and hence a local system V_lambda.
 */
class Partition {
public:
    Partition() : parts_{0, 0, 0} {}
    Partition(int l1, int l2, int l3);

    // Accepts "a,b,c"; returns nullopt on malformed input or parts out of order.
    static std::optional<Partition> parse(const std::string& text);

    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    int weight() const { return parts_[0] + parts_[1] + parts_[2]; }
    const std::array<int, 3>& parts() const { return parts_; }

    std::string str() const;  // "(a,b,c)"

    auto operator<=>(const Partition&) const = default;

    // All partitions of the given weight, lexicographically descending.
    static std::vector<Partition> all_of_weight(int w);

    // Partitions of every weight w in [0, max_weight] with w = parity (mod 2),
    // ascending weight then lexicographically descending: the ordering of the
    // printed tables. parity < 0 means both parities.
    static std::vector<Partition> up_to_weight(int max_weight, int parity = -1);

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.str();
    }

private:
    std::array<int, 3> parts_;
};

} // namespace hec
