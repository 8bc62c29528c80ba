#include "subshift/periodicity.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "subshift/bigint.hpp"

namespace subshift {

namespace {

// Extended gcd combination: returns g = gcd(a, b) > 0 together with the
// lattice vector u*(va) + v*(vb) whose x-component is g.
struct Combo {
    int g = 0;
    long long u = 0, v = 0;
};

Combo x_gcd_combo(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_s = 1, s = 0;
    long long old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        std::swap(old_r -= q * r, r);
        std::swap(old_s -= q * s, s);
        std::swap(old_t -= q * t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return Combo{static_cast<int>(old_r), old_s, old_t};
}

}  // namespace

LatticeBasis lattice_basis(std::span<const Cell> vectors) {
    LatticeBasis result;
    // Reduce to one vector with minimal positive x (a gcd combination) and
    // the gcd of the y-components that remain after clearing x.
    Cell lead{0, 0};
    long long y_gcd = 0;
    for (const Cell& v : vectors) {
        if (v.x == 0 && v.y == 0) continue;
        if (v.x == 0) {
            y_gcd = std::gcd(y_gcd, static_cast<long long>(v.y));
            continue;
        }
        if (lead.x == 0) {
            lead = v.x > 0 ? v : Cell{-v.x, -v.y};
            continue;
        }
        Combo c = x_gcd_combo(lead.x, v.x);
        Cell merged{c.g, static_cast<int>(c.u * lead.y + c.v * v.y)};
        // The two originals reduce against the merged vector to vertical
        // remainders.
        long long r1 = lead.y - static_cast<long long>(lead.x / c.g) * merged.y;
        long long r2 = v.y - static_cast<long long>(v.x / c.g) * merged.y;
        y_gcd = std::gcd(y_gcd, std::gcd(std::llabs(r1), std::llabs(r2)));
        lead = merged;
    }

    if (lead.x == 0 && y_gcd == 0) {
        result.rank = 0;
        return result;
    }
    if (lead.x == 0) {
        result.rank = 1;
        result.basis[0] = Cell{0, static_cast<int>(y_gcd)};
        return result;
    }
    if (y_gcd == 0) {
        result.rank = 1;
        result.basis[0] = lead;
        return result;
    }
    result.rank = 2;
    int c = static_cast<int>(y_gcd);
    int b = static_cast<int>(((lead.y % c) + c) % c);
    result.basis[0] = Cell{lead.x, b};
    result.basis[1] = Cell{0, c};
    return result;
}

LatticeRank lattice_rank(std::span<const Cell> vectors) {
    LatticeBasis b = lattice_basis(vectors);
    return LatticeRank{b.rank, b.rank == 2};
}

LatticeRank lattice_rank(const PeriodLattice& lattice) {
    return LatticeRank{lattice.rank, lattice.doubly_periodic};
}

namespace {

bool shift_agrees(const Window& u, int dx, int dy) {
    const int w = u.width();
    const int h = u.height();
    const int x_lo = std::max(0, -dx), x_hi = std::min(w, w - dx);
    const int y_lo = std::max(0, -dy), y_hi = std::min(h, h - dy);
    const Symbol* data = u.raw().data();
    for (int y = y_lo; y < y_hi; ++y) {
        const Symbol* row = data + static_cast<std::size_t>(y) * w;
        const Symbol* shifted =
            data + static_cast<std::size_t>(y + dy) * w + dx;
        for (int x = x_lo; x < x_hi; ++x) {
            if (row[x] != shifted[x]) return false;
        }
    }
    return true;
}

}  // namespace

PeriodLattice period_vectors(const Window& u, int max_shift,
                             double min_overlap, int threads) {
    if (max_shift < 1 || max_shift >= std::min(u.width(), u.height())) {
        throw DomainError("max_shift must satisfy 1 <= max_shift < " +
                          std::to_string(std::min(u.width(), u.height())) +
                          " for this window, got " + std::to_string(max_shift));
    }
    if (!(min_overlap > 0.0 && min_overlap <= 1.0)) {
        throw DomainError("min_overlap must lie in (0, 1]");
    }

    PeriodLattice lattice;
    lattice.max_shift = max_shift;
    lattice.min_overlap = min_overlap;

    const double total_cells =
        static_cast<double>(u.width()) * static_cast<double>(u.height());
    std::vector<PeriodVector> candidates;
    for (int dx = 0; dx <= max_shift; ++dx) {
        for (int dy = -max_shift; dy <= max_shift; ++dy) {
            if (dx == 0 && dy <= 0) continue;  // canonical half only
            double overlap =
                static_cast<double>(u.width() - dx) *
                static_cast<double>(u.height() - std::abs(dy)) / total_cells;
            if (overlap < min_overlap) continue;
            candidates.push_back(PeriodVector{dx, dy, overlap});
        }
    }

    const int count = static_cast<int>(candidates.size());
    threads = std::clamp(threads, 1, std::max(1, count));
    if (threads == 1) {
        for (const PeriodVector& c : candidates) {
            if (shift_agrees(u, c.dx, c.dy)) lattice.vectors.push_back(c);
        }
    } else {
        // chunks cover contiguous candidate ranges, so concatenation keeps
        // the canonical enumeration order
        std::vector<std::vector<PeriodVector>> found(
            static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            int lo = static_cast<int>(static_cast<std::int64_t>(count) * t /
                                      threads);
            int hi = static_cast<int>(static_cast<std::int64_t>(count) *
                                      (t + 1) / threads);
            pool.emplace_back([&, t, lo, hi] {
                for (int i = lo; i < hi; ++i) {
                    const PeriodVector& c =
                        candidates[static_cast<std::size_t>(i)];
                    if (shift_agrees(u, c.dx, c.dy)) {
                        found[static_cast<std::size_t>(t)].push_back(c);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : found) {
            lattice.vectors.insert(lattice.vectors.end(), part.begin(),
                                   part.end());
        }
    }

    std::vector<Cell> raw;
    raw.reserve(lattice.vectors.size());
    for (const PeriodVector& v : lattice.vectors) raw.push_back(Cell{v.dx, v.dy});
    lattice.basis = lattice_basis(raw);
    lattice.rank = lattice.basis.rank;
    lattice.doubly_periodic = lattice.rank == 2;
    return lattice;
}

Pattern fundamental_domain(const Window& u, const PeriodLattice& lattice) {
    if (lattice.rank != 2) {
        throw DomainError("fundamental domain requires a rank-2 period lattice");
    }
    const int a = lattice.basis.basis[0].x;
    const int b = lattice.basis.basis[0].y;
    const int c = lattice.basis.basis[1].y;
    if (a < 1 || c < 1) {
        throw DomainError("rank-2 lattice basis is not in Hermite form");
    }
    if (a > u.width() || c > u.height()) {
        throw DomainError("fundamental rectangle " + std::to_string(a) + "x" +
                          std::to_string(c) + " exceeds the window");
    }

    // Reduce window-relative (x, y) into [0, a) x [0, c) modulo the lattice.
    auto reduce = [&](int x, int y) {
        long long m = floor_div(static_cast<long long>(x), a);
        int rx = static_cast<int>(x - m * a);
        long long ry = y - m * b;
        ry -= floor_div(ry, c) * c;
        return Cell{rx, static_cast<int>(ry)};
    };

    std::vector<Symbol> symbols(static_cast<std::size_t>(a) * c);
    for (int y = 0; y < c; ++y) {
        for (int x = 0; x < a; ++x) {
            symbols[static_cast<std::size_t>(y) * a + x] =
                u.at_unchecked(u.origin().x + x, u.origin().y + y);
        }
    }
    Pattern domain(Shape::rect(a, c), std::move(symbols));

    for (int y = 0; y < u.height(); ++y) {
        for (int x = 0; x < u.width(); ++x) {
            Cell r = reduce(x, y);
            if (u.at_unchecked(u.origin().x + x, u.origin().y + y) !=
                domain.at(r.x, r.y)) {
                throw DomainError(
                    "window is not reconstructible from the fundamental domain "
                    "at cell (" + std::to_string(u.origin().x + x) + "," +
                    std::to_string(u.origin().y + y) +
                    "); detected periods do not extend across the window");
            }
        }
    }
    return domain;
}

}  // namespace subshift
