#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace tantrix {

// Hexagonal coordinates (u, w). Two cells are adjacent iff their
// difference is one of the six offsets below.
struct Coord {
    int64_t u = 0;
    int64_t w = 0;

    friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Direction indices 0..5, cyclically consecutive around the hexagon:
//   0:(+1,0) 1:(+1,+1) 2:(0,+1) 3:(-1,0) 4:(-1,-1) 5:(0,-1)
struct Direction {
    int index = 0;

    friend auto operator<=>(const Direction&, const Direction&) = default;
};

inline constexpr std::array<std::pair<int, int>, 6> kDirectionOffsets{{
    {+1, 0}, {+1, +1}, {0, +1}, {-1, 0}, {-1, -1}, {0, -1},
}};

constexpr Direction opposite(Direction d) { return {(d.index + 3) % 6}; }

constexpr Coord neighbor(Coord c, Direction d) {
    const auto& [du, dw] = kDirectionOffsets[static_cast<size_t>(d.index)];
    return {c.u + du, c.w + dw};
}

// Direction from a to b if adjacent, empty otherwise.
std::optional<Direction> adjacency(Coord a, Coord b);

std::string to_string(Coord c);

}  // namespace tantrix
