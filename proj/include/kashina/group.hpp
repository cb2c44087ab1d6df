#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace kashina {

/// Element x^i y^j of the abelian group G = Z4 x Z2 (x^4 = y^2 = 1, xy = yx).
struct GroupElt {
    int i = 0; // exponent of x, mod 4
    int j = 0; // exponent of y, mod 2

    static GroupElt one() { return {0, 0}; }
    static GroupElt x() { return {1, 0}; }
    static GroupElt y() { return {0, 1}; }

    GroupElt mul(const GroupElt& o) const { return {(i + o.i) & 3, (j + o.j) & 1}; }
    GroupElt inv() const { return {(4 - i) & 3, j}; }

    /// Basis ordinal j*4 + i, shared by every serialized table.
    std::size_t idx() const { return static_cast<std::size_t>(j * 4 + i); }
    static GroupElt from_idx(std::size_t k) { return {static_cast<int>(k & 3), static_cast<int>(k >> 2)}; }

    friend bool operator==(const GroupElt& a, const GroupElt& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const GroupElt& a, const GroupElt& b) { return !(a == b); }

    /// Membership in S = {1, y, x^2, x^2 y}, the fixed points of the t-action.
    bool in_S() const { return (i & 1) == 0; }

    std::string name() const {
        static const std::array<std::string, 8> names = {"1",  "x",  "x2",  "x3",
                                                         "y",  "xy", "x2y", "x3y"};
        return names[idx()];
    }

    static GroupElt parse(const std::string& s) {
        for (std::size_t k = 0; k < 8; ++k)
            if (from_idx(k).name() == s) return from_idx(k);
        throw std::invalid_argument("GroupElt::parse: unknown element '" + s + "'");
    }

    static std::array<GroupElt, 8> all() {
        std::array<GroupElt, 8> out{};
        for (std::size_t k = 0; k < 8; ++k) out[k] = from_idx(k);
        return out;
    }
};

} // namespace kashina
