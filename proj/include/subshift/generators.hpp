#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subshift/bigint.hpp"
#include "subshift/core.hpp"

namespace subshift {

// ----- point and partition specs ------------------------------------------

// Uniform dyadic point a / 2^bits with `bits` pseudo-random bits.  Stands in
// for a Lebesgue sample; the bit budget must exceed the digits a window will
// read (validated per window, with a 64-bit guard).
struct DyadicPoint {
    std::uint64_t seed = 1;
    int bits = 0;
};

struct RationalPoint {
    BigRational value;  // in [0, 1)
};

using PointSpec = std::variant<DyadicPoint, RationalPoint>;

enum class PartitionKind {
    HalfInterval,  // {0,1}: symbol 0 iff y < 1/2
    BasePDigit,    // {0..p-1}: symbol = floor(p * y)
};

// ----- source specs ---------------------------------------------------------

struct FullShiftSource {
    Alphabet alphabet;
    std::uint64_t seed = 1;
};

// Doubly periodic configuration tiled by a fundamental block.  The basis is
// brought to Hermite form (a, b), (0, c); the block must be an a x c
// rectangle.
struct PeriodicSource {
    Alphabet alphabet;
    Pattern block;
    Cell basis0;
    Cell basis1;
};

struct SturmianSource {
    BigRational alpha;  // slope in (0, 1), exact
    BigRational rho;    // intercept in [0, 1)
};

struct SturmianVerticalSource {
    BigRational alpha;
    BigRational rho;
};

struct TimesPqSource {
    int p = 2;
    int q = 3;
    PointSpec point;
    PartitionKind partition = PartitionKind::HalfInterval;
};

struct FromFileSource {
    std::string path;
};

using SourceSpec =
    std::variant<FullShiftSource, PeriodicSource, SturmianSource,
                 SturmianVerticalSource, TimesPqSource, FromFileSource>;

// ----- operations -----------------------------------------------------------

// True iff no positive powers coincide: p^a != q^b for all a, b >= 1.
// Decided exactly via prime signatures.
bool is_multiplicatively_independent(long long p, long long q);

// s(n) = floor((n+1) alpha + rho) - floor(n alpha + rho), exact rational
// arithmetic, n = 0 .. length-1.
std::vector<Symbol> sturmian_word(const BigRational& alpha,
                                  const BigRational& rho, int length);

Window make_row_window(Alphabet alphabet, std::span<const Symbol> seq);

// L x height window whose rows all equal the input row.
Window vertical_extension(const Window& row, int height);

// Exact joint-orbit values on a rectangle of Z^2: value(i, j) =
// p^(i - origin.x) q^(j - origin.y) * corner mod 1, stored as numerators
// over a common denominator.
struct OrbitGrid {
    int p = 0;
    int q = 0;
    Cell origin;
    int width = 0;
    int height = 0;
    BigInt denom;
    std::vector<BigInt> nums;  // row-major, row 0 = j = origin.y

    bool contains(int i, int j) const {
        return i >= origin.x && i < origin.x + width && j >= origin.y &&
               j < origin.y + height;
    }
    const BigInt& num_at(int i, int j) const {
        return nums[static_cast<std::size_t>(j - origin.y) * width +
                    (i - origin.x)];
    }
    BigRational value(int i, int j) const;
};

// Forward orbit grid anchored at (0, 0) plus its coded window.
std::pair<OrbitGrid, Window> orbit_window(const TimesPqSource& spec, int cols,
                                          int rows);

// Symbols only; streams the orbit row by row so large samples never hold
// the exact grid in memory.
Window orbit_coding_window(const TimesPqSource& spec, int cols, int rows);

// Natural-extension rectangle [i_min, i_min + cols) x [j_min, j_min + rows)
// with i_min, j_min <= 0.  A single uniform preimage digit is drawn for the
// far corner, which makes both recurrences hold everywhere and pins
// value(0, 0) = x.
OrbitGrid natural_extension_window(const TimesPqSource& spec, int i_min,
                                   int j_min, int cols, int rows,
                                   std::uint64_t seed);

Window window_from_grid(const OrbitGrid& grid, PartitionKind partition);

// Finite joint orbit {p^i q^j x mod 1 : i, j >= 0} of a rational point whose
// denominator is coprime to p*q; closure under both maps, sorted.
std::vector<BigRational> atomic_orbit(int p, int q, const BigRational& x);

// Solutions of the period congruence in [0, 1), sorted:
//   i*j >= 0 (signs flipped to nonnegative): p^i q^j y = y (mod 1),
//     giving {m / D} with D = p^i q^j - 1 (D = 0 means y free: excluded
//     by (i, j) != (0, 0));
//   mixed signs (normalized to i < 0 < j): p^|i| y = q^j y (mod 1),
//     giving {m / D} with D = |p^|i| - q^j|, nonzero by multiplicative
//     independence.
std::vector<BigRational> fixed_points(int p, int q, int i, int j);

// Dispatch over SourceSpec; cols/rows are the sample dims (ignored by
// FromFile).
Window generate_window(const SourceSpec& spec, int cols, int rows);

// Required dyadic bit budget for a forward orbit window (64-bit guard
// included).
int required_dyadic_bits(int p, int q, int cols, int rows);

// Human-readable source kind, used in reports.
std::string source_kind(const SourceSpec& spec);

// Sturmian slopes should emulate an irrational at the sampled length: the
// word of a rational slope a/b is b-periodic, so a window longer than b sees
// the saturated language.  Returns a warning string, empty when fine.
std::string sturmian_resolution_warning(const SourceSpec& spec, int cols);

}  // namespace subshift
