#pragma once

#include <string>
#include <utility>
#include <vector>

#include <hibi/hibi.hpp>

namespace fixtures {

using hibi::Lattice;

// labels 1..n, covers given with the same one-based labels
inline Lattice labelled(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> c;
    for (auto [a, b] : covers) c.emplace_back(a - 1, b - 1);
    return Lattice::from_covers(names, c);
}

// the six-element example: two diamonds sharing the edge 3-4
inline Lattice fig_ex() {
    return labelled(6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

inline Lattice labelled_grid23() {
    return labelled(12, {{1, 2},  {1, 3},  {2, 4},  {2, 5},  {3, 5},   {3, 6},
                         {4, 7},  {5, 7},  {5, 8},  {6, 8},  {6, 9},   {7, 10},
                         {8, 10}, {8, 11}, {9, 11}, {10, 12}, {11, 12}});
}

// two diamonds joined through a longer middle section
inline Lattice fig_pic() {
    return labelled(13, {{1, 2},  {1, 3},  {2, 4},  {3, 4},   {3, 5},   {4, 6},
                         {4, 7},  {5, 7},  {5, 8},  {6, 9},   {7, 9},   {7, 10},
                         {8, 10}, {9, 11}, {9, 12}, {10, 12}, {11, 13}, {12, 13}});
}

// two diamonds stacked at one point
inline Lattice fig_d() {
    return Lattice::from_covers({"0", "1", "2", "3", "4", "5", "6"},
                                {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

// [0,A] x [0,B] with the block i > p, j < q removed
inline Lattice l3(int A, int B, int p, int q) {
    std::vector<std::pair<int, int>> pts;
    for (int j = 0; j <= B; ++j)
        for (int i = 0; i <= A; ++i)
            if (!(i > p && j < q)) pts.emplace_back(i, j);
    auto find = [&](int i, int j) {
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (pts[k] == std::pair(i, j)) return static_cast<int>(k);
        return -1;
    };
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> cov;
    for (auto [i, j] : pts) {
        names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        int self = find(i, j);
        if (int r = find(i + 1, j); r >= 0) cov.emplace_back(self, r);
        if (int u = find(i, j + 1); u >= 0) cov.emplace_back(self, u);
    }
    return Lattice::from_covers(names, cov);
}

inline Lattice pentagon() {
    return Lattice::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

inline Lattice diamond_m3() {
    return Lattice::from_covers({"0", "a", "b", "c", "1"},
                                {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Lattice boolean3() {
    return hibi::ideal_lattice(hibi::Poset{{0u, 0u, 0u}});
}

// free distributive lattice on three generators: ideals of B3 without its bounds
inline Lattice free3() {
    return hibi::ideal_lattice(hibi::Poset{{0u, 0u, 0u, 0b011u, 0b101u, 0b110u}});
}

inline std::vector<Lattice> census(int max_elements) {
    return hibi::enumerate_distributive(max_elements);
}

}  // namespace fixtures
