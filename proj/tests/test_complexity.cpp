#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "subshift/complexity.hpp"
#include "subshift/generators.hpp"
#include "subshift/periodicity.hpp"

using namespace subshift;

namespace {

Window random_window(std::mt19937_64& rng, int width, int height,
                     int alphabet_size = 2) {
    std::vector<Symbol> cells(static_cast<std::size_t>(width) * height);
    for (Symbol& c : cells) {
        c = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(alphabet_size));
    }
    std::string glyphs = "0123456789abcdefghijklmnopqrstuvwxyz";
    return Window(Alphabet(glyphs.substr(0, static_cast<std::size_t>(alphabet_size))),
                  Cell{0, 0}, width, height, std::move(cells));
}

// Exhaustive census: distinct patterns anchored in the common anchor region.
std::uint64_t brute_complexity(const Window& u, int n, int k, int n_max,
                               int k_max) {
    std::set<std::string> keys;
    Shape shape = Shape::rect(n, k);
    for (int ay = 0; ay <= u.height() - k_max; ++ay) {
        for (int ax = 0; ax <= u.width() - n_max; ++ax) {
            keys.insert(pattern_key(extract_pattern(
                u, Cell{u.origin().x + ax, u.origin().y + ay}, shape)));
        }
    }
    return keys.size();
}

Window constant_window(int width, int height) {
    return Window(binary_alphabet(), Cell{0, 0}, width, height,
                  std::vector<Symbol>(static_cast<std::size_t>(width) * height,
                                      1));
}

Window word_window(const std::vector<Symbol>& word) {
    return make_row_window(binary_alphabet(), word);
}

std::vector<Symbol> periodic_word(const std::vector<Symbol>& block,
                                  int length) {
    std::vector<Symbol> word(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        word[static_cast<std::size_t>(i)] =
            block[static_cast<std::size_t>(i) % block.size()];
    }
    return word;
}

// Least period of a finite word, by direct shift comparison.
int least_period(const std::vector<Symbol>& word) {
    for (int p = 1; p < static_cast<int>(word.size()); ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + static_cast<std::size_t>(p) < word.size();
             ++i) {
            if (word[i] != word[i + static_cast<std::size_t>(p)]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return p;
    }
    return static_cast<int>(word.size());
}

}  // namespace

TEST_CASE("constant window has P(n,k) = 1 everywhere") {
    ComplexityTable t = complexity_table(constant_window(16, 12), 6, 5);
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 5; ++k) {
            CHECK(t.at(n, k) == 1);
        }
    }
}

TEST_CASE("period-2 word has exactly two factors of every length") {
    std::vector<Symbol> word = periodic_word({0, 1}, 64);
    auto P = complexity_1d(word_window(word), 4);
    CHECK(P == std::vector<std::uint64_t>{2, 2, 2, 2});
}

TEST_CASE("empirical table matches the exhaustive oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        Window u = random_window(rng, 64, 64);
        ComplexityTable t = complexity_table(u, 4, 4);
        for (int n = 1; n <= 4; ++n) {
            for (int k = 1; k <= 4; ++k) {
                CHECK(t.at(n, k) == brute_complexity(u, n, k, 4, 4));
            }
        }
    }
}

TEST_CASE("1D complexity matches the oracle on short random words") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Window u = random_window(rng, 20, 1);
        auto P = complexity_1d(u, 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(P[static_cast<std::size_t>(n - 1)] ==
                  brute_complexity(u, n, 1, 8, 1));
        }
    }
}

TEST_CASE("sturmian words have P(n) = n + 1") {
    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 2000);
    auto P = complexity_1d(word_window(word), 30);
    for (int n = 1; n <= 30; ++n) {
        CHECK(P[static_cast<std::size_t>(n - 1)] ==
              static_cast<std::uint64_t>(n + 1));
    }
}

TEST_CASE("complexity requires the census to fit the window") {
    std::mt19937_64 rng(15);
    Window u = random_window(rng, 10, 10);
    CHECK_THROWS_AS(complexity_table(u, 11, 3), DomainError);
    CHECK_THROWS_AS(complexity_table(u, 3, 11), DomainError);
    CHECK_THROWS_AS(complexity_1d(u, 11), DomainError);
    // tight fits leave a single anchor row/column but remain legal
    ComplexityTable t = complexity_table(u, 10, 10);
    CHECK(t.anchors == 1);
    CHECK(t.at(10, 10) == 1);
}

TEST_CASE("tables are monotone in n and k") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 6; ++trial) {
        int alphabet = trial % 2 ? 2 : 3;
        Window u = random_window(rng, 40, 30, alphabet);
        ComplexityTable t = complexity_table(u, 8, 6);
        for (int n = 1; n <= 8; ++n) {
            for (int k = 1; k <= 6; ++k) {
                if (n > 1) CHECK(t.at(n, k) >= t.at(n - 1, k));
                if (k > 1) CHECK(t.at(n, k) >= t.at(n, k - 1));
                CHECK(t.at(n, k) >= 1);
            }
        }
    }
}

TEST_CASE("exact full-shift tables dominate empirical ones") {
    ComplexityTable exact = full_shift_exact_table(2, 4, 4);
    CHECK(exact.at(2, 2) == 16);
    CHECK(exact.at(4, 4) == 65536);
    CHECK(exact.provenance == TableProvenance::Exact);

    std::mt19937_64 rng(17);
    Window u = random_window(rng, 512, 512);
    ComplexityTable emp = complexity_table(u, 4, 4);
    CHECK(emp.provenance == TableProvenance::Empirical);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(emp.at(n, k) <= exact.at(n, k));
        }
    }
    // a 512x512 fair sample sees every small pattern
    CHECK(emp.at(2, 2) == 16);
    CHECK(emp.at(3, 3) == 512);
}

TEST_CASE("submultiplicativity P(n1+n2,k) <= P(n1,k) P(n2,k) on exact "
          "sources") {
    ComplexityTable exact = full_shift_exact_table(2, 8, 3);
    for (int k = 1; k <= 3; ++k) {
        for (int n1 = 1; n1 <= 4; ++n1) {
            for (int n2 = 1; n1 + n2 <= 8; ++n2) {
                CHECK(exact.at(n1 + n2, k) <= exact.at(n1, k) * exact.at(n2, k));
            }
        }
    }

    // periodic source censused beyond its fundamental domain is exact too
    PeriodicSource tiled{binary_alphabet(),
                         Pattern(Shape::rect(3, 2), {0, 1, 1, 1, 0, 0}),
                         Cell{3, 0}, Cell{0, 2}};
    Window w = generate_window(tiled, 36, 24);
    ComplexityTable t = complexity_table(w, 8, 8);
    for (int k = 1; k <= 8; ++k) {
        for (int n1 = 1; n1 <= 4; ++n1) {
            for (int n2 = 1; n1 + n2 <= 8; ++n2) {
                CHECK(t.at(n1 + n2, k) <= t.at(n1, k) * t.at(n2, k));
            }
        }
    }
}

TEST_CASE("tables do not depend on the window origin") {
    std::mt19937_64 rng(35);
    std::vector<Symbol> cells(30 * 20);
    for (Symbol& c : cells) c = static_cast<Symbol>(rng() & 1);
    Window centered(binary_alphabet(), Cell{0, 0}, 30, 20, cells);
    Window offset(binary_alphabet(), Cell{-7, 13}, 30, 20, cells);
    ComplexityTable a = complexity_table(centered, 5, 5);
    ComplexityTable b = complexity_table(offset, 5, 5);
    CHECK(a.values == b.values);
}

TEST_CASE("morse-hedlund witnesses") {
    // period 3: P(3) = 3
    std::vector<Symbol> abc = periodic_word({0, 1, 2}, 120);
    Window u(Alphabet("abc"), Cell{0, 0}, 120, 1, abc);
    auto P = complexity_1d(u, 10);
    MorseHedlundResult r = morse_hedlund_classify(P);
    CHECK(r.periodic_forced);
    CHECK(r.witness == 3);

    // sturmian: P(n) = n + 1 > n, no conclusion
    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 1000);
    MorseHedlundResult s =
        morse_hedlund_classify(complexity_1d(word_window(word), 40));
    CHECK(!s.periodic_forced);

    MorseHedlundResult c =
        morse_hedlund_classify(complexity_1d(constant_window(20, 1), 5));
    CHECK(c.periodic_forced);
    CHECK(c.witness == 1);
}

TEST_CASE("morse-hedlund agrees with a direct period search") {
    std::mt19937_64 rng(18);
    // periodic words: witness at most the period
    for (int period = 1; period <= 10; ++period) {
        std::vector<Symbol> block(static_cast<std::size_t>(period));
        for (Symbol& s : block) s = static_cast<Symbol>(rng() & 1);
        std::vector<Symbol> word = periodic_word(block, 1000);
        auto P = complexity_1d(word_window(word), 20);
        MorseHedlundResult r = morse_hedlund_classify(P);
        CHECK(r.periodic_forced);
        CHECK(r.witness <= period);
        CHECK(r.witness <= least_period(word));
    }

    // words with all-distinct symbols have no period below their length, and
    // the sub-saturation census keeps P(n) > n
    std::string glyphs = "abcdefghijklmnopqrstuvwxyz";
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Symbol> word(10);
        std::vector<Symbol> pool(26);
        for (int i = 0; i < 26; ++i) pool[static_cast<std::size_t>(i)] =
            static_cast<Symbol>(i);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::copy_n(pool.begin(), 10, word.begin());
        CHECK(least_period(word) == 10);
        Window u(Alphabet(glyphs), Cell{0, 0}, 10, 1, word);
        MorseHedlundResult r = morse_hedlund_classify(complexity_1d(u, 5));
        CHECK(!r.periodic_forced);
    }
}

TEST_CASE("gap classification of the three regimes") {
    // vertical sturmian: P(n,n) = n+1, below the n^2/2 line from n = 3
    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 200);
    Window sv = vertical_extension(word_window(word), 40);
    ComplexityTable t = complexity_table(sv, 10, 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.at(n, n) == static_cast<std::uint64_t>(n + 1));
    }
    GapClassification g = gap_classify(t);
    CHECK(g.kind == GapClassification::Kind::BelowGap);
    CHECK(g.witness_n == 3);
    CHECK(g.witness_k == 3);

    // full shift: P(2,2) = 16 > 2*2*... every square is far above the line
    std::mt19937_64 rng(19);
    Window coin = random_window(rng, 200, 200);
    GapClassification above = gap_classify(complexity_table(coin, 8, 8));
    CHECK(above.kind == GapClassification::Kind::AboveGap);

    // atomic times-pq coding: bounded plateau of at most 4 patterns
    TimesPqSource atomic{2, 3, RationalPoint{BigRational(1, 5)},
                         PartitionKind::HalfInterval};
    Window w = orbit_coding_window(atomic, 40, 40);
    GapClassification bounded = gap_classify(complexity_table(w, 10, 10));
    CHECK(bounded.kind == GapClassification::Kind::Bounded);
    CHECK(bounded.plateau_value <= 4);
    CHECK(bounded.min_square_density <= 4.0);

    CHECK_THROWS_AS(gap_classify(complexity_table(w, 2, 2)), DomainError);
}

TEST_CASE("bounded classification coincides with a rank-2 period lattice") {
    TimesPqSource atomic{2, 3, RationalPoint{BigRational(1, 5)},
                         PartitionKind::HalfInterval};
    Window w = orbit_coding_window(atomic, 40, 40);
    GapClassification g = gap_classify(complexity_table(w, 10, 10));
    PeriodLattice lattice = period_vectors(w, 10);
    CHECK(g.kind == GapClassification::Kind::Bounded);
    CHECK(lattice.rank == 2);

    auto word = sturmian_word(BigRational(377, 610), BigRational(0), 200);
    Window sv = vertical_extension(word_window(word), 40);
    GapClassification sg = gap_classify(complexity_table(sv, 10, 10));
    PeriodLattice slattice = period_vectors(sv, 10);
    CHECK(sg.kind != GapClassification::Kind::Bounded);
    CHECK(slattice.rank == 1);
}
