#include "tantrix/tiles.hpp"

#include <algorithm>
#include <map>

namespace tantrix {

bool is_color_letter(char ch) {
    return ch == 'b' || ch == 'g' || ch == 'r' || ch == 'y';
}

Color color_from_letter(char ch) {
    switch (ch) {
        case 'b': return Color::Blue;
        case 'g': return Color::Green;
        case 'r': return Color::Red;
        case 'y': return Color::Yellow;
    }
    throw std::invalid_argument(std::string("not a color letter: ") + ch);
}

std::string to_string(Shape s) {
    switch (s) {
        case Shape::Rond: return "Rond";
        case Shape::Brid: return "Brid";
        case Shape::Sint: return "Sint";
        case Shape::Chin: return "Chin";
    }
    return "?";
}

std::string to_string(TileError e) {
    switch (e) {
        case TileError::None: return "ok";
        case TileError::BadLength: return "BadLength";
        case TileError::BadColorMultiplicity: return "BadColorMultiplicity";
        case TileError::IllegalShape: return "IllegalShape";
    }
    return "?";
}

namespace {

// chord-length multiset as a sorted array of three lengths
std::array<int, 3> chord_multiset(const std::string& word) {
    std::array<int, 3> lens{};
    int n = 0;
    for (char c : {'b', 'g', 'r', 'y'}) {
        int first = -1, second = -1;
        for (int i = 0; i < 6; ++i) {
            if (word[static_cast<size_t>(i)] == c) {
                (first < 0 ? first : second) = i;
            }
        }
        if (first >= 0) {
            int d = second - first;
            lens[static_cast<size_t>(n++)] = std::min(d, 6 - d);
        }
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace

TileError validate_word(const std::string& word) {
    if (word.size() != 6) return TileError::BadLength;
    for (char ch : word) {
        if (!is_color_letter(ch)) return TileError::BadLength;
    }
    std::map<char, int> counts;
    for (char ch : word) counts[ch]++;
    if (counts.size() != 3) return TileError::BadColorMultiplicity;
    for (auto& [ch, n] : counts) {
        if (n != 2) return TileError::BadColorMultiplicity;
    }
    auto m = chord_multiset(word);
    static constexpr std::array<std::array<int, 3>, 4> legal{{
        {1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {2, 2, 3},
    }};
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) {
        return TileError::IllegalShape;
    }
    return TileError::None;
}

std::pair<TileCode, int> canonicalize(const std::string& word) {
    if (auto err = validate_word(word); err != TileError::None) {
        throw std::invalid_argument("invalid tile word '" + word + "': " + to_string(err));
    }
    std::string best = word;
    for (int i = 1; i < 6; ++i) {
        std::string rot = word.substr(static_cast<size_t>(i)) + word.substr(0, static_cast<size_t>(i));
        if (rot < best) best = rot;
    }
    for (int r = 0; r < 6; ++r) {
        bool match = true;
        for (int k = 0; k < 6 && match; ++k) {
            match = best[static_cast<size_t>(((k - r) % 6 + 6) % 6)] == word[static_cast<size_t>(k)];
        }
        if (match) return {TileCode(std::move(best)), r};
    }
    throw std::logic_error("canonicalize: no rotation matched");
}

TileCode TileCode::from_word(const std::string& word) {
    return canonicalize(word).first;
}

Color TileCode::color_at_base(int edge) const {
    return color_from_letter(word_[static_cast<size_t>(((edge % 6) + 6) % 6)]);
}

Shape TileCode::shape() const {
    auto m = chord_multiset(word_);
    if (m == std::array<int, 3>{1, 1, 1}) return Shape::Rond;
    if (m == std::array<int, 3>{1, 1, 3}) return Shape::Brid;
    if (m == std::array<int, 3>{1, 2, 2}) return Shape::Sint;
    return Shape::Chin;
}

Color color_at(const OrientedTile& t, Direction edge) {
    return t.code.color_at_base(edge.index - t.rotation);
}

OrientedTile rotate(const OrientedTile& t, int steps) {
    return {t.code, ((t.rotation + steps) % 6 + 6) % 6};
}

const std::vector<TileCode>& enumerate_catalogue() {
    static const std::vector<TileCode> catalogue = [] {
        std::vector<TileCode> out;
        std::string word(6, 'b');
        const char letters[4] = {'b', 'g', 'r', 'y'};
        for (int mask = 0; mask < 4096; ++mask) {
            int m = mask;
            for (int i = 0; i < 6; ++i) {
                word[static_cast<size_t>(i)] = letters[m & 3];
                m >>= 2;
            }
            if (validate_word(word) != TileError::None) continue;
            auto [code, rot] = canonicalize(word);
            if (rot == 0) out.push_back(code);  // already canonical: no dups
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return catalogue;
}

}  // namespace tantrix
