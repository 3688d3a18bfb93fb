#include "finitop/subset.hpp"

#include <charconv>
#include <stdexcept>

#include "finitop/error.hpp"

namespace finitop {

Subset Subset::of(std::initializer_list<int> points, int n) { return of(std::vector<int>(points), n); }

Subset Subset::of(const std::vector<int>& points, int n) {
    Mask m = 0;
    for (int x : points) {
        if (x < 0 || x >= n) {
            throw TopologyError(ErrorCode::PointOutOfRange,
                                "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
        }
        m |= point_mask(x);
    }
    return Subset(m, n);
}

std::vector<int> mask_points(Mask m) {
    std::vector<int> out;
    for_each_point(m, [&](int x) { out.push_back(x); });
    return out;
}

std::vector<int> Subset::points() const { return mask_points(bits_); }

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for_each_point(bits_, [&](int x) {
        if (!first) s += ',';
        s += std::to_string(x);
        first = false;
    });
    return s + "}";
}

std::string Subset::to_hex() const { return mask_to_hex(bits_); }

std::string mask_to_hex(Mask m) {
    char buf[16];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, m, 16);
    return std::string(buf, end);
}

Mask mask_from_hex(const std::string& hex) {
    Mask m = 0;
    auto [end, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), m, 16);
    if (hex.empty() || ec != std::errc{} || end != hex.data() + hex.size()) {
        throw std::invalid_argument("bad hex subset '" + hex + "'");
    }
    return m;
}

}  // namespace finitop
