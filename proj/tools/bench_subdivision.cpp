/// bench_subdivision: wall-clock comparison of the parallel candidate scan in
/// induced_subdivision against the serial reference on one random instance.
/// Also asserts the two enumerations agree cell for cell, so a benchmark run
/// doubles as a stress check.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#include "CLI11.hpp"

#include "mv2/subdivision.hpp"

namespace {

std::vector<mv2::Support> random_supports(int dim, int count, int points, long long coord,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> c(-coord, coord);
    std::vector<mv2::Support> out;
    for (int i = 0; i < count; ++i) {
        std::vector<mv2::IntVector> pts;
        for (int j = 0; j < points; ++j) {
            mv2::IntVector p;
            for (int k = 0; k < dim; ++k) p.push_back(c(rng));
            pts.push_back(std::move(p));
        }
        out.emplace_back(std::move(pts));
    }
    return out;
}

bool same_cells(const std::vector<mv2::MixedCell>& a, const std::vector<mv2::MixedCell>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].selector != b[i].selector) return false;
        if (a[i].faces.size() != b[i].faces.size()) return false;
        for (std::size_t j = 0; j < a[i].faces.size(); ++j)
            if (!(a[i].faces[j].points == b[i].faces[j].points)) return false;
    }
    return true;
}

template <typename F>
double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: parallel vs serial mixed-subdivision enumeration"};
    int dim = 2, count = 0, points = 9;
    long long coord = 6;
    int reps = 3;
    std::uint64_t seed = 0;
    app.add_option("--dim", dim, "ambient dimension")->check(CLI::PositiveNumber);
    app.add_option("--supports", count, "number of supports (default: dim)");
    app.add_option("--points", points, "points per support")->check(CLI::PositiveNumber);
    app.add_option("--coord", coord, "coordinate range [-coord, coord]");
    app.add_option("--reps", reps, "repetitions, best time reported")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "instance seed");
    CLI11_PARSE(app, argc, argv);
    if (count <= 0) count = dim;

    auto supports = random_supports(dim, count, points, coord, seed);
    auto lifting = mv2::random_lifting(supports, seed, std::uint64_t(1) << 20);

    std::vector<mv2::MixedCell> parallel_cells, serial_cells;
    double tp = time_ms([&] { parallel_cells = mv2::induced_subdivision(supports, lifting); }, reps);
    double ts = time_ms(
        [&] { serial_cells = mv2::induced_subdivision_serial(supports, lifting); }, reps);

    if (!same_cells(parallel_cells, serial_cells)) {
        std::cerr << "MISMATCH: parallel and serial enumerations disagree\n";
        return 1;
    }

    std::cout << "instance: dim=" << dim << " supports=" << count << " points=" << points
              << " coord=" << coord << " seed=" << seed << "\n";
    std::cout << "cells: " << parallel_cells.size() << "\n";
    std::cout << "serial:   " << ts << " ms\n";
    std::cout << "parallel: " << tp << " ms\n";
    std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";
    return 0;
}
