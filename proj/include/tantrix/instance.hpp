#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "tantrix/hexgrid.hpp"
#include "tantrix/tiles.hpp"

namespace tantrix {

struct ParseError : std::runtime_error {
    // kind: SyntaxError, DuplicateCell, InvalidTile, DanglingClamp, DomainMismatch
    std::string kind;
    int line;  // 1-based; 0 when not line-specific

    ParseError(std::string k, int ln, const std::string& msg)
        : std::runtime_error(k + (ln > 0 ? " (line " + std::to_string(ln) + ")" : "") + ": " + msg),
          kind(std::move(k)),
          line(ln) {}
};

struct ClampKey {
    Coord cell;
    Direction edge;

    friend auto operator<=>(const ClampKey&, const ClampKey&) = default;
};

// A rotation-puzzle instance: tiles at cells, plus optional color clamps on
// boundary edges (edges whose neighbor cell is unoccupied).
class Instance {
  public:
    using Placements = std::map<Coord, TileCode>;
    using Clamps = std::map<ClampKey, Color>;

    Instance() = default;
    Instance(Placements placements, Clamps clamps);  // validates clamp rules

    const Placements& placements() const { return placements_; }
    const Clamps& clamps() const { return clamps_; }
    bool occupied(Coord c) const { return placements_.count(c) != 0; }
    size_t size() const { return placements_.size(); }

  private:
    Placements placements_;
    Clamps clamps_;
};

// A full rotation assignment over exactly the instance's placed cells.
using Solution = std::map<Coord, int>;

// True iff every joint edge of adjacent placed tiles matches in color and
// every clamp is satisfied. Throws ParseError(DomainMismatch) if the
// solution's domain differs from the instance's cells.
bool check_solution(const Instance& inst, const Solution& sol);

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Solution parse_solution(const std::string& text, const Instance& inst);
std::string serialize_solution(const Solution& sol);

}  // namespace tantrix
