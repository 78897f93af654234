#pragma once

#include <cstdint>
#include <vector>

#include "tantrix/instance.hpp"

namespace tantrix {

struct SolveStats {
    uint64_t nodes = 0;      // search tree nodes explored
    uint64_t prunings = 0;   // domain wipeouts during propagation
};

struct SolveReport {
    uint64_t count = 0;
    std::vector<Solution> solutions;  // filled when enumeration requested
    SolveStats stats;
};

// Exact number of solutions. Arc-consistency propagation over joint-edge
// color constraints and clamps, then exhaustive backtracking (smallest
// domain first, ties by cell order), counting all leaves. Connected
// components are counted independently and multiplied.
uint64_t count_solutions(const Instance& inst);

SolveReport count_report(const Instance& inst);

// True iff at least one solution exists; stops at the first.
bool decide(const Instance& inst);

// True iff exactly one solution exists; stops as soon as two are found.
bool is_unique(const Instance& inst);

// Up to `cap` solutions in lexicographic order of the rotation vector read
// along cells sorted by (u, w).
std::vector<Solution> enumerate_solutions(const Instance& inst, uint64_t cap);

// Independent oracle: iterates all 6^n rotation vectors and counts those
// passing check_solution. No propagation logic shared with count_solutions.
// Throws TooLarge (std::length_error) if the instance has more than `limit`
// tiles.
uint64_t brute_force_count(const Instance& inst, size_t limit = 10);

}  // namespace tantrix
