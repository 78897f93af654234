#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tantrix/hexgrid.hpp"

namespace tantrix {

// Colors in canonical order b < g < r < y.
enum class Color : uint8_t { Blue, Green, Red, Yellow };

inline constexpr char kColorLetters[4] = {'b', 'g', 'r', 'y'};

constexpr char to_letter(Color c) { return kColorLetters[static_cast<int>(c)]; }

bool is_color_letter(char ch);
Color color_from_letter(char ch);  // throws std::invalid_argument

// Tile shapes by chord-length multiset of the three lines:
// {1,1,1}: Rond, {1,1,3}: Brid, {1,2,2}: Sint, {2,2,3}: Chin.
enum class Shape : uint8_t { Rond, Brid, Sint, Chin };

std::string to_string(Shape s);

enum class TileError { None, BadLength, BadColorMultiplicity, IllegalShape };

std::string to_string(TileError e);

// Canonical encoding of a tile: the lexicographically least of the six
// cyclic rotations of its color-at-edge word. Tile identity is the code;
// instances never carry rotations.
class TileCode {
  public:
    TileCode() = default;

    // word[k] = color of the line touching edge k in base orientation
    static TileCode from_word(const std::string& word);  // throws on invalid

    const std::string& word() const { return word_; }
    Color color_at_base(int edge) const;
    Shape shape() const;

    friend auto operator<=>(const TileCode&, const TileCode&) = default;

  private:
    std::string word_ = "bbggrr";
    explicit TileCode(std::string canonical) : word_(std::move(canonical)) {}
    friend std::pair<TileCode, int> canonicalize(const std::string&);
};

// Validation of a raw 6-letter word.
TileError validate_word(const std::string& word);

// Canonical code plus the rotation r such that reading the canonical word
// at (k - r) mod 6 reproduces the input word at k. Throws on invalid words.
std::pair<TileCode, int> canonicalize(const std::string& word);

struct OrientedTile {
    TileCode code;
    int rotation = 0;  // clockwise steps from base orientation, 0..5
};

Color color_at(const OrientedTile& t, Direction edge);

OrientedTile rotate(const OrientedTile& t, int steps);

// All 56 canonical tiles, sorted lexicographically.
const std::vector<TileCode>& enumerate_catalogue();

}  // namespace tantrix
