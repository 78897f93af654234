#include "tantrix/solver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tantrix {

namespace {

constexpr uint8_t kFullDomain = 0x3f;

struct Joint {
    int other;                      // index of the adjacent cell
    std::array<uint8_t, 6> support; // support[r] = bitmask of compatible rotations of other
};

// Compiled form of an instance for search.
struct Net {
    std::vector<Coord> cells;              // sorted by (u,w)
    std::vector<std::vector<Joint>> joints;
    std::vector<uint8_t> base_domain;      // after clamp filtering

    explicit Net(const Instance& inst) {
        cells.reserve(inst.size());
        for (const auto& [c, code] : inst.placements()) cells.push_back(c);
        std::vector<TileCode> codes;
        codes.reserve(cells.size());
        for (const auto& c : cells) codes.push_back(inst.placements().at(c));

        base_domain.assign(cells.size(), kFullDomain);
        for (const auto& [key, color] : inst.clamps()) {
            size_t i = static_cast<size_t>(
                std::lower_bound(cells.begin(), cells.end(), key.cell) - cells.begin());
            uint8_t mask = 0;
            for (int r = 0; r < 6; ++r) {
                if (color_at({codes[i], r}, key.edge) == color) mask |= uint8_t(1u << r);
            }
            base_domain[i] &= mask;
        }

        joints.resize(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) {
            for (int d = 0; d < 6; ++d) {
                Coord nb = neighbor(cells[i], Direction{d});
                auto it = std::lower_bound(cells.begin(), cells.end(), nb);
                if (it == cells.end() || *it != nb) continue;
                size_t j = static_cast<size_t>(it - cells.begin());
                Joint joint;
                joint.other = static_cast<int>(j);
                for (int ra = 0; ra < 6; ++ra) {
                    uint8_t mask = 0;
                    Color mine = color_at({codes[i], ra}, Direction{d});
                    for (int rb = 0; rb < 6; ++rb) {
                        if (color_at({codes[j], rb}, opposite(Direction{d})) == mine) {
                            mask |= uint8_t(1u << rb);
                        }
                    }
                    joint.support[static_cast<size_t>(ra)] = mask;
                }
                joints[i].push_back(joint);
            }
        }
    }

    // Revise domains to arc consistency starting from `dirty` cells.
    // Returns false on a wipeout.
    bool propagate(std::vector<uint8_t>& dom, std::vector<int> queue) const {
        std::vector<char> queued(cells.size(), 0);
        for (int q : queue) queued[static_cast<size_t>(q)] = 1;
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            queued[static_cast<size_t>(i)] = 0;
            // neighbors of i must keep support against i's domain
            for (const Joint& jt : joints[static_cast<size_t>(i)]) {
                // allowed rotations of jt.other = union of support over i's domain
                uint8_t allowed = 0;
                uint8_t di = dom[static_cast<size_t>(i)];
                for (int r = 0; r < 6; ++r) {
                    if (di & (1u << r)) allowed |= jt.support[static_cast<size_t>(r)];
                }
                uint8_t& dj = dom[static_cast<size_t>(jt.other)];
                uint8_t nd = dj & allowed;
                if (nd != dj) {
                    dj = nd;
                    if (nd == 0) return false;
                    if (!queued[static_cast<size_t>(jt.other)]) {
                        queued[static_cast<size_t>(jt.other)] = 1;
                        queue.push_back(jt.other);
                    }
                }
            }
        }
        return true;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(cells.size(), -1);
        std::vector<std::vector<int>> out;
        for (size_t s = 0; s < cells.size(); ++s) {
            if (comp[s] >= 0) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<int> stack{static_cast<int>(s)};
            comp[s] = id;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                out[static_cast<size_t>(id)].push_back(i);
                for (const Joint& jt : joints[static_cast<size_t>(i)]) {
                    if (comp[static_cast<size_t>(jt.other)] < 0) {
                        comp[static_cast<size_t>(jt.other)] = id;
                        stack.push_back(jt.other);
                    }
                }
            }
        }
        return out;
    }
};

uint64_t mul_checked(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::length_error("solution count exceeds 64 bits");
    }
    return r;
}

int popcount6(uint8_t m) { return __builtin_popcount(m); }

// Count solutions within one component; early exit when `cap` reached
// (cap = 0 means unbounded).
uint64_t count_component(const Net& net, const std::vector<int>& comp,
                         std::vector<uint8_t> dom, uint64_t cap, SolveStats* stats) {
    // initial arc consistency over the component
    if (!net.propagate(dom, comp)) {
        if (stats) stats->prunings++;
        return 0;
    }

    std::function<uint64_t(std::vector<uint8_t>&, uint64_t)> rec =
        [&](std::vector<uint8_t>& d, uint64_t limit) -> uint64_t {
        if (stats) stats->nodes++;
        // pick unassigned var with smallest domain > 1 (ties: cell order)
        int best = -1, best_size = 7;
        for (int i : comp) {
            int s = popcount6(d[static_cast<size_t>(i)]);
            if (s > 1 && s < best_size) {
                best = i;
                best_size = s;
            }
        }
        if (best < 0) return 1;  // all singletons: one solution
        // check whether remaining multi-valued vars are mutually independent
        bool independent = true;
        for (int i : comp) {
            if (popcount6(d[static_cast<size_t>(i)]) <= 1) continue;
            for (const Joint& jt : net.joints[static_cast<size_t>(i)]) {
                if (popcount6(d[static_cast<size_t>(jt.other)]) > 1) {
                    independent = false;
                    break;
                }
            }
            if (!independent) break;
        }
        if (independent) {
            uint64_t prod = 1;
            for (int i : comp) prod = mul_checked(prod, uint64_t(popcount6(d[static_cast<size_t>(i)])));
            // prod counts singletons as 1
            return prod;
        }
        uint64_t total = 0;
        uint8_t domain = d[static_cast<size_t>(best)];
        for (int r = 0; r < 6; ++r) {
            if (!(domain & (1u << r))) continue;
            std::vector<uint8_t> child = d;
            child[static_cast<size_t>(best)] = uint8_t(1u << r);
            if (!net.propagate(child, {best})) {
                if (stats) stats->prunings++;
                continue;
            }
            uint64_t sub = rec(child, limit ? limit - total : 0);
            total += sub;  // counts are small; overflow only via products
            if (limit && total >= limit) return total;
        }
        return total;
    };
    return rec(dom, cap);
}

// Count with an optional early-exit cap across the whole instance.
uint64_t count_capped(const Instance& inst, uint64_t cap, SolveStats* stats) {
    if (inst.size() == 0) return 1;
    Net net(inst);
    std::vector<uint8_t> dom = net.base_domain;
    for (uint8_t d : dom) {
        if (d == 0) return 0;
    }
    // Every component must be known non-zero before any early exit, so
    // compute per-component counts first (each capped individually).
    std::vector<uint64_t> counts;
    for (const auto& comp : net.components()) {
        uint64_t c = count_component(net, comp, dom, cap, stats);
        if (c == 0) return 0;
        counts.push_back(c);
    }
    uint64_t total = 1;
    for (uint64_t c : counts) {
        if (cap && total >= cap) return total;
        total = mul_checked(total, c);
    }
    return total;
}

}  // namespace

uint64_t count_solutions(const Instance& inst) { return count_capped(inst, 0, nullptr); }

SolveReport count_report(const Instance& inst) {
    SolveReport rep;
    rep.count = count_capped(inst, 0, &rep.stats);
    return rep;
}

bool decide(const Instance& inst) { return count_capped(inst, 1, nullptr) >= 1; }

bool is_unique(const Instance& inst) { return count_capped(inst, 2, nullptr) == 1; }

std::vector<Solution> enumerate_solutions(const Instance& inst, uint64_t cap) {
    std::vector<Solution> out;
    if (cap == 0) return out;
    if (inst.size() == 0) {
        out.emplace_back();
        return out;
    }
    Net net(inst);
    std::vector<uint8_t> dom = net.base_domain;
    // static order = cells sorted by (u,w) = net.cells order; rotations
    // ascending, yielding lexicographic rotation vectors
    size_t n = net.cells.size();
    std::function<void(size_t, std::vector<uint8_t>&)> rec = [&](size_t i,
                                                                 std::vector<uint8_t>& d) {
        if (out.size() >= cap) return;
        if (i == n) {
            Solution sol;
            for (size_t k = 0; k < n; ++k) {
                sol.emplace(net.cells[k], __builtin_ctz(d[k]));
            }
            out.push_back(std::move(sol));
            return;
        }
        uint8_t domain = d[i];
        for (int r = 0; r < 6 && out.size() < cap; ++r) {
            if (!(domain & (1u << r))) continue;
            std::vector<uint8_t> child = d;
            child[i] = uint8_t(1u << r);
            if (!net.propagate(child, {static_cast<int>(i)})) continue;
            rec(i + 1, child);
        }
    };
    for (uint8_t d : dom) {
        if (d == 0) return out;
    }
    if (!net.propagate(dom, [&] {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            return all;
        }())) {
        return out;
    }
    rec(0, dom);
    return out;
}

uint64_t brute_force_count(const Instance& inst, size_t limit) {
    if (inst.size() > limit) {
        throw std::length_error("TooLarge: " + std::to_string(inst.size()) +
                                " tiles exceeds brute-force limit " + std::to_string(limit));
    }
    std::vector<Coord> cells;
    for (const auto& [c, code] : inst.placements()) cells.push_back(c);
    size_t n = cells.size();
    std::vector<int> rots(n, 0);
    uint64_t count = 0;
    while (true) {
        Solution sol;
        for (size_t i = 0; i < n; ++i) sol.emplace(cells[i], rots[i]);
        if (check_solution(inst, sol)) ++count;
        size_t i = 0;
        while (i < n && ++rots[i] == 6) {
            rots[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace tantrix
