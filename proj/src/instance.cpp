#include "tantrix/instance.hpp"

#include <sstream>
#include <vector>

namespace tantrix {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int64_t parse_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("SyntaxError", line, "expected integer, got '" + s + "'");
    }
}

}  // namespace

Instance::Instance(Placements placements, Clamps clamps)
    : placements_(std::move(placements)), clamps_(std::move(clamps)) {
    for (const auto& [key, color] : clamps_) {
        if (!placements_.count(key.cell)) {
            throw ParseError("DanglingClamp", 0,
                             "clamp on unplaced cell " + to_string(key.cell));
        }
        if (placements_.count(neighbor(key.cell, key.edge))) {
            throw ParseError("DanglingClamp", 0,
                             "clamp on interior edge " + std::to_string(key.edge.index) +
                                 " of " + to_string(key.cell));
        }
    }
}

bool check_solution(const Instance& inst, const Solution& sol) {
    if (sol.size() != inst.size()) {
        throw ParseError("DomainMismatch", 0, "solution has " + std::to_string(sol.size()) +
                                                  " cells, instance has " +
                                                  std::to_string(inst.size()));
    }
    for (const auto& [cell, rot] : sol) {
        if (!inst.occupied(cell)) {
            throw ParseError("DomainMismatch", 0, "solution cell " + to_string(cell) +
                                                      " not in instance");
        }
    }
    for (const auto& [cell, code] : inst.placements()) {
        OrientedTile tile{code, sol.at(cell)};
        for (int d = 0; d < 6; ++d) {
            Coord nb = neighbor(cell, Direction{d});
            auto it = inst.placements().find(nb);
            if (it == inst.placements().end()) continue;
            if (nb < cell) continue;  // each joint edge once
            OrientedTile other{it->second, sol.at(nb)};
            if (color_at(tile, Direction{d}) != color_at(other, opposite(Direction{d}))) {
                return false;
            }
        }
    }
    for (const auto& [key, color] : inst.clamps()) {
        OrientedTile tile{inst.placements().at(key.cell), sol.at(key.cell)};
        if (color_at(tile, key.edge) != color) return false;
    }
    return true;
}

Instance parse_instance(const std::string& text) {
    Instance::Placements placements;
    Instance::Clamps clamps;
    std::istringstream ss(text);
    std::string line;
    int ln = 0;
    while (std::getline(ss, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "!") {
            if (toks.size() != 5) {
                throw ParseError("SyntaxError", ln, "clamp line needs '! u w d c'");
            }
            Coord cell{parse_int(toks[1], ln), parse_int(toks[2], ln)};
            int64_t d = parse_int(toks[3], ln);
            if (d < 0 || d > 5) throw ParseError("SyntaxError", ln, "direction must be 0..5");
            if (toks[4].size() != 1 || !is_color_letter(toks[4][0])) {
                throw ParseError("SyntaxError", ln, "color must be one of b,g,r,y");
            }
            ClampKey key{cell, Direction{static_cast<int>(d)}};
            if (clamps.count(key)) {
                throw ParseError("SyntaxError", ln, "duplicate clamp on " + to_string(cell) +
                                                        " edge " + toks[3]);
            }
            clamps.emplace(key, color_from_letter(toks[4][0]));
        } else {
            if (toks.size() != 3) {
                throw ParseError("SyntaxError", ln, "placement line needs 'u w WORD'");
            }
            Coord cell{parse_int(toks[0], ln), parse_int(toks[1], ln)};
            if (placements.count(cell)) {
                throw ParseError("DuplicateCell", ln, "cell " + to_string(cell) + " placed twice");
            }
            if (validate_word(toks[2]) != TileError::None) {
                throw ParseError("InvalidTile", ln, "'" + toks[2] + "': " +
                                                        to_string(validate_word(toks[2])));
            }
            placements.emplace(cell, TileCode::from_word(toks[2]));
        }
    }
    try {
        return Instance(std::move(placements), std::move(clamps));
    } catch (const ParseError& e) {
        throw ParseError(e.kind, 0, e.what());
    }
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    for (const auto& [cell, code] : inst.placements()) {
        out << cell.u << ' ' << cell.w << ' ' << code.word() << '\n';
    }
    for (const auto& [key, color] : inst.clamps()) {
        out << "! " << key.cell.u << ' ' << key.cell.w << ' ' << key.edge.index << ' '
            << to_letter(color) << '\n';
    }
    return out.str();
}

Solution parse_solution(const std::string& text, const Instance& inst) {
    Solution sol;
    std::istringstream ss(text);
    std::string line;
    int ln = 0;
    while (std::getline(ss, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 3) throw ParseError("SyntaxError", ln, "solution line needs 'u w r'");
        Coord cell{parse_int(toks[0], ln), parse_int(toks[1], ln)};
        int64_t r = parse_int(toks[2], ln);
        if (r < 0 || r > 5) throw ParseError("SyntaxError", ln, "rotation must be 0..5");
        if (sol.count(cell)) {
            throw ParseError("DomainMismatch", ln, "cell " + to_string(cell) + " assigned twice");
        }
        sol.emplace(cell, static_cast<int>(r));
    }
    if (sol.size() != inst.size()) {
        throw ParseError("DomainMismatch", 0,
                         "solution covers " + std::to_string(sol.size()) + " of " +
                             std::to_string(inst.size()) + " cells");
    }
    for (const auto& [cell, rot] : sol) {
        if (!inst.occupied(cell)) {
            throw ParseError("DomainMismatch", 0, "cell " + to_string(cell) + " not in instance");
        }
    }
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    std::ostringstream out;
    for (const auto& [cell, rot] : sol) {
        out << cell.u << ' ' << cell.w << ' ' << rot << '\n';
    }
    return out.str();
}

}  // namespace tantrix
