#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subshift/generators.hpp"
#include "subshift/periodicity.hpp"

using namespace subshift;

namespace {

Window random_binary_window(std::mt19937_64& rng, int width, int height) {
    std::vector<Symbol> cells(static_cast<std::size_t>(width) * height);
    for (Symbol& c : cells) c = static_cast<Symbol>(rng() & 1);
    return Window(binary_alphabet(), Cell{0, 0}, width, height,
                  std::move(cells));
}

// Direct overlap scan, written independently of period_vectors.
bool is_period_by_scan(const Window& u, int dx, int dy) {
    bool any = false;
    for (int y = u.origin().y; y < u.origin().y + u.height(); ++y) {
        for (int x = u.origin().x; x < u.origin().x + u.width(); ++x) {
            if (!u.contains(x + dx, y + dy)) continue;
            any = true;
            if (u.at(x, y) != u.at(x + dx, y + dy)) return false;
        }
    }
    return any;
}

bool has_vector(const PeriodLattice& lattice, int dx, int dy) {
    for (const PeriodVector& v : lattice.vectors) {
        if (v.dx == dx && v.dy == dy) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("lattice rank of hand-made vector sets") {
    std::vector<Cell> two{{2, 0}, {0, 3}};
    CHECK(lattice_rank(two).rank == 2);
    CHECK(lattice_rank(two).doubly_periodic);

    std::vector<Cell> parallel{{2, 4}, {1, 2}};
    CHECK(lattice_rank(parallel).rank == 1);
    CHECK(!lattice_rank(parallel).doubly_periodic);

    std::vector<Cell> none;
    CHECK(lattice_rank(none).rank == 0);

    std::vector<Cell> vertical{{0, 4}, {0, 6}};
    LatticeBasis vb = lattice_basis(vertical);
    CHECK(vb.rank == 1);
    CHECK(vb.basis[0] == Cell{0, 2});

    std::vector<Cell> skew{{1, 1}, {4, 0}};
    LatticeBasis sb = lattice_basis(skew);
    CHECK(sb.rank == 2);
    CHECK(sb.basis[0] == Cell{1, 1});
    CHECK(sb.basis[1] == Cell{0, 4});
}

TEST_CASE("doubly periodic tiling is recovered with its basis") {
    std::mt19937_64 rng(20);
    std::vector<Symbol> block(4 * 6);
    for (Symbol& s : block) s = static_cast<Symbol>(rng() & 1);
    PeriodicSource tiled{binary_alphabet(),
                         Pattern(Shape::rect(4, 6), block), Cell{4, 0},
                         Cell{0, 6}};
    Window w = generate_window(tiled, 40, 36);
    PeriodLattice lattice = period_vectors(w, 12);
    CHECK(lattice.rank == 2);
    CHECK(has_vector(lattice, 4, 0));
    CHECK(has_vector(lattice, 0, 6));
    // detected sublattice of the declared one: components divide through
    CHECK(lattice.basis.basis[0].x % 4 == 0);
    CHECK(lattice.basis.basis[1].y % 6 == 0);
}

TEST_CASE("vertically constant sturmian extension has rank 1") {
    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 120);
    Window sv = vertical_extension(make_row_window(binary_alphabet(), word), 30);
    PeriodLattice lattice = period_vectors(sv, 10);
    CHECK(lattice.rank == 1);
    CHECK(has_vector(lattice, 0, 1));
    for (const PeriodVector& v : lattice.vectors) {
        CHECK(v.dx == 0);  // no horizontal period at this scale
    }
}

TEST_CASE("times-2-times-3 coding of 1/5 is doubly periodic with period "
          "(1,1)") {
    TimesPqSource spec{2, 3, RationalPoint{BigRational(1, 5)},
                       PartitionKind::HalfInterval};
    Window w = orbit_coding_window(spec, 30, 30);
    PeriodLattice lattice = period_vectors(w, 10);
    CHECK(has_vector(lattice, 1, 1));  // 2*3 = 6 = 1 mod 5
    CHECK(lattice.rank == 2);
    for (const PeriodVector& v : lattice.vectors) {
        CHECK(is_period_by_scan(w, v.dx, v.dy));
    }
}

TEST_CASE("reported vectors agree with the direct overlap scan") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        Window w = random_binary_window(rng, 24, 18);
        PeriodLattice lattice = period_vectors(w, 6, 0.25);
        for (int dx = 0; dx <= 6; ++dx) {
            for (int dy = -6; dy <= 6; ++dy) {
                if (dx == 0 && dy <= 0) continue;
                double overlap = static_cast<double>((24 - dx) * (18 - std::abs(dy))) /
                                 (24.0 * 18.0);
                if (overlap < 0.25) continue;
                CHECK(has_vector(lattice, dx, dy) ==
                      is_period_by_scan(w, dx, dy));
            }
        }
    }
}

TEST_CASE("random windows carry no period at the default overlap") {
    std::mt19937_64 rng(22);
    Window w = random_binary_window(rng, 64, 64);
    PeriodLattice lattice = period_vectors(w, 16);
    CHECK(lattice.vectors.empty());
    CHECK(lattice.rank == 0);
}

TEST_CASE("integer combinations of basis vectors inside bounds are "
          "detected") {
    std::mt19937_64 rng(23);
    std::vector<Symbol> block(3 * 2);
    for (Symbol& s : block) s = static_cast<Symbol>(rng() & 1);
    PeriodicSource tiled{binary_alphabet(),
                         Pattern(Shape::rect(3, 2), block), Cell{3, 0},
                         Cell{0, 2}};
    Window w = generate_window(tiled, 48, 32);
    PeriodLattice lattice = period_vectors(w, 9, 0.5);
    for (int a = 0; a <= 3; ++a) {
        for (int b = -4; b <= 4; ++b) {
            int dx = 3 * a;
            int dy = 2 * b;
            if (dx == 0 && dy <= 0) continue;
            if (dx > 9 || std::abs(dy) > 9) continue;
            double overlap = static_cast<double>((48 - dx) * (32 - std::abs(dy))) /
                             (48.0 * 32.0);
            if (overlap < 0.5) continue;
            CHECK(has_vector(lattice, dx, dy));
        }
    }
}

TEST_CASE("candidate scans merge identically across thread counts") {
    std::mt19937_64 rng(26);
    std::vector<Symbol> block(5 * 3);
    for (Symbol& s : block) s = static_cast<Symbol>(rng() & 1);
    PeriodicSource tiled{binary_alphabet(),
                         Pattern(Shape::rect(5, 3), block), Cell{5, 0},
                         Cell{0, 3}};
    Window w = generate_window(tiled, 40, 30);
    PeriodLattice one = period_vectors(w, 12, 0.5, 1);
    PeriodLattice many = period_vectors(w, 12, 0.5, 8);
    CHECK(one.vectors == many.vectors);
    CHECK(one.rank == many.rank);
}

TEST_CASE("period_vectors validates its arguments") {
    std::mt19937_64 rng(24);
    Window w = random_binary_window(rng, 10, 10);
    CHECK_THROWS_AS(period_vectors(w, 10), DomainError);
    CHECK_THROWS_AS(period_vectors(w, 0), DomainError);
    CHECK_THROWS_AS(period_vectors(w, 3, 0.0), DomainError);
    CHECK_THROWS_AS(period_vectors(w, 3, 1.5), DomainError);
}

TEST_CASE("fundamental domain of a constant window is one cell") {
    Window w(binary_alphabet(), Cell{0, 0}, 12, 12,
             std::vector<Symbol>(144, 1));
    PeriodLattice lattice = period_vectors(w, 4);
    CHECK(lattice.rank == 2);
    CHECK(lattice.basis.basis[0] == Cell{1, 0});
    CHECK(lattice.basis.basis[1] == Cell{0, 1});
    Pattern domain = fundamental_domain(w, lattice);
    CHECK(domain.shape().size() == 1);
    CHECK(domain.symbols()[0] == 1);
}

TEST_CASE("fundamental domain reconstructs the tiled window") {
    std::mt19937_64 rng(25);
    std::vector<Symbol> block(4 * 6);
    for (Symbol& s : block) s = static_cast<Symbol>(rng() & 1);
    PeriodicSource tiled{binary_alphabet(),
                         Pattern(Shape::rect(4, 6), block), Cell{4, 0},
                         Cell{0, 6}};
    Window w = generate_window(tiled, 40, 36);
    PeriodLattice lattice = period_vectors(w, 12);
    Pattern domain = fundamental_domain(w, lattice);
    CHECK(domain.shape().width() == 4);
    CHECK(domain.shape().height() == 6);
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 4; ++x) {
            CHECK(domain.at(x, y) == w.at(x, y));
        }
    }
}

TEST_CASE("fundamental domain of the atomic coding has at most 5 cells") {
    TimesPqSource spec{2, 3, RationalPoint{BigRational(1, 5)},
                       PartitionKind::HalfInterval};
    Window w = orbit_coding_window(spec, 30, 30);
    PeriodLattice lattice = period_vectors(w, 10);
    Pattern domain = fundamental_domain(w, lattice);
    CHECK(domain.shape().size() <= 5);
}

TEST_CASE("fundamental domain requires rank 2") {
    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 60);
    Window sv = vertical_extension(make_row_window(binary_alphabet(), word), 20);
    PeriodLattice lattice = period_vectors(sv, 8);
    CHECK(lattice.rank == 1);
    CHECK_THROWS_AS(fundamental_domain(sv, lattice), DomainError);
}
