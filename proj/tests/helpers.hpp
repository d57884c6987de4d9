#pragma once

// Small construction helpers shared by the test suites.

#include <vector>

#include "mv2/lattice.hpp"

namespace mv2test {

inline mv2::IntVector vec(std::vector<long long> coords) {
    mv2::IntVector v;
    for (long long c : coords) v.push_back(c);
    return v;
}

inline mv2::Support sup(std::vector<std::vector<long long>> pts) {
    std::vector<mv2::IntVector> out;
    out.reserve(pts.size());
    for (auto& p : pts) out.push_back(vec(p));
    return mv2::Support(std::move(out));
}

inline mv2::LatticePolytope poly(std::vector<std::vector<long long>> pts) {
    return mv2::convex_hull(sup(std::move(pts)));
}

}  // namespace mv2test
