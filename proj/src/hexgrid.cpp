#include "tantrix/hexgrid.hpp"

namespace tantrix {

std::optional<Direction> adjacency(Coord a, Coord b) {
    for (int i = 0; i < 6; ++i) {
        const auto& [du, dw] = kDirectionOffsets[static_cast<size_t>(i)];
        if (a.u + du == b.u && a.w + dw == b.w) return Direction{i};
    }
    return std::nullopt;
}

std::string to_string(Coord c) {
    return "(" + std::to_string(c.u) + "," + std::to_string(c.w) + ")";
}

}  // namespace tantrix
