#pragma once

#include <cstdint>
#include <vector>

#include "mv2/lattice.hpp"

namespace mv2 {

/// Rational heights on every point of every support, together with the RNG
/// seed that produced them (0 for hand-built liftings). heights[i][j] belongs
/// to supports[i].points()[j] in the supports' canonical point order.
struct Lifting {
    std::vector<std::vector<Rational>> heights;
    std::uint64_t seed = 0;
};

/// A full-dimensional cell of a regular mixed subdivision, stored as its
/// unique face decomposition F_1 + ... + F_m together with the covector
/// (selector, 1) that selects exactly these lifted points (upper faces).
struct MixedCell {
    std::vector<Face> faces;
    QVector selector;
};

enum class CellType { mixed, semi_mixed, other };

/// mixed: every face a segment; semi_mixed: one vertex, the rest segments.
CellType cell_type(const MixedCell& cell);

/// Deterministic pseudo-random heights k / 2^31 with k drawn from
/// [0, bound) by a seeded 64-bit generator. Identical across platforms.
Lifting random_lifting(const std::vector<Support>& supports, std::uint64_t seed,
                       std::uint64_t bound);

/// All full-dimensional cells of the regular mixed subdivision induced by the
/// lifting, canonically sorted by face decomposition. Candidate selectors are
/// solved exactly from simplex sub-tuples of the lifted supports; each
/// surviving selector is certified by recomputing the true argmax faces, so
/// the result is independent of enumeration order. Runs the candidate scan in
/// parallel when compiled with OpenMP.
std::vector<MixedCell> induced_subdivision(const std::vector<Support>& supports,
                                           const Lifting& lifting);

/// Serial reference implementation of the same enumeration; kept for
/// testing and benchmarking against the parallel scan.
std::vector<MixedCell> induced_subdivision_serial(const std::vector<Support>& supports,
                                                  const Lifting& lifting);

/// True iff every cell's decomposition is affinely independent (face
/// dimensions add up to the cell dimension) and every face is a simplex.
bool is_fine(const std::vector<MixedCell>& cells);

struct SubdivisionResult {
    std::vector<MixedCell> cells;
    Lifting lifting;  // records the successful seed for replay
};

/// Retry random liftings (seed, seed+1, ...) until the induced subdivision is
/// fine. Throws precondition_error("GenericityFailure") after 64 attempts,
/// which signals a bug or adversarial input rather than expected behavior.
SubdivisionResult generic_subdivision(const std::vector<Support>& supports, std::uint64_t seed);

}  // namespace mv2
