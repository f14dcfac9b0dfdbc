#include "hec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hec {

Partition::Partition(int l1, int l2, int l3) : parts_{l1, l2, l3} {
    if (l3 < 0 || l2 < l3 || l1 < l2)
        throw std::invalid_argument("Partition: parts must be weakly decreasing and non-negative");
}

std::optional<Partition> Partition::parse(const std::string& text) {
    std::array<int, 3> v{};
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t end = (i < 2) ? text.find(',', pos) : text.size();
        if (end == std::string::npos) return std::nullopt;
        const char* b = text.data() + pos;
        const char* e = text.data() + end;
        auto [ptr, ec] = std::from_chars(b, e, v[static_cast<size_t>(i)]);
        if (ec != std::errc() || ptr != e) return std::nullopt;
        pos = end + 1;
    }
    if (v[0] < v[1] || v[1] < v[2] || v[2] < 0) return std::nullopt;
    return Partition(v[0], v[1], v[2]);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(" << parts_[0] << "," << parts_[1] << "," << parts_[2] << ")";
    return os.str();
}

std::vector<Partition> Partition::all_of_weight(int w) {
    std::vector<Partition> out;
    for (int l1 = w; l1 >= (w + 2) / 3; --l1)
        for (int l2 = std::min(l1, w - l1); l2 >= 0; --l2) {
            int l3 = w - l1 - l2;
            if (l3 < 0 || l3 > l2) continue;
            out.emplace_back(l1, l2, l3);
        }
    return out;
}

std::vector<Partition> Partition::up_to_weight(int max_weight, int parity) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        if (parity >= 0 && w % 2 != parity % 2) continue;
        auto batch = all_of_weight(w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace hec
