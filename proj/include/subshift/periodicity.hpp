#pragma once

#include <array>
#include <span>
#include <vector>

#include "subshift/core.hpp"

namespace subshift {

struct PeriodVector {
    int dx = 0;
    int dy = 0;
    double overlap = 0.0;  // fraction of window cells in the tested overlap
    friend bool operator==(const PeriodVector&, const PeriodVector&) = default;
};

// Basis of the sublattice of Z^2 generated by a vector set, in Hermite
// normal form: basis[0] = (a, b) with a > 0 (or (0, c) when every vector is
// vertical), basis[1] = (0, c) with c > 0 when rank 2.
struct LatticeBasis {
    int rank = 0;
    std::array<Cell, 2> basis{Cell{0, 0}, Cell{0, 0}};
};

LatticeBasis lattice_basis(std::span<const Cell> vectors);

// rank of the rational span, plus the doubly periodic flag (rank == 2).
struct LatticeRank {
    int rank = 0;
    bool doubly_periodic = false;
};

LatticeRank lattice_rank(std::span<const Cell> vectors);

struct PeriodLattice {
    std::vector<PeriodVector> vectors;  // canonical half: dx > 0, or dx == 0
                                        // and dy > 0; negations are implied
    LatticeBasis basis;
    int rank = 0;
    bool doubly_periodic = false;
    int max_shift = 0;
    double min_overlap = 0.0;
};

LatticeRank lattice_rank(const PeriodLattice& lattice);

// All (i, j) != (0, 0) with |i|, |j| <= max_shift under which the window
// agrees with its translate on their overlap, provided the overlap holds at
// least min_overlap of the window's cells.  Small overlaps produce spurious
// periods on random windows, hence the threshold.  Candidate scans are
// independent; `threads` splits them over workers and the results merge in
// candidate order.
PeriodLattice period_vectors(const Window& u, int max_shift,
                             double min_overlap = 0.5, int threads = 1);

// Pattern on the half-open fundamental rectangle of a rank-2 lattice,
// anchored at the window origin.  Reconstruction of the full window from
// the domain by lattice translation is verified cell by cell.
Pattern fundamental_domain(const Window& u, const PeriodLattice& lattice);

}  // namespace subshift
