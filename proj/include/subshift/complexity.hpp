#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subshift/core.hpp"

namespace subshift {

enum class TableProvenance { Exact, Empirical };

// P(n, k) for 1 <= n <= n_max, 1 <= k <= k_max.  Empirical tables count
// distinct patterns anchored in the common anchor region
// [origin.x, origin.x + width - n_max] x [origin.y, origin.y + height - k_max],
// the same region for every (n, k); monotonicity in n and k then holds by
// construction because each pattern extends in place.
struct ComplexityTable {
    int n_max = 0;
    int k_max = 0;
    int alphabet_size = 0;
    TableProvenance provenance = TableProvenance::Empirical;
    std::string source;        // window dims or exact source kind
    std::uint64_t anchors = 0; // size of the common anchor region
    std::vector<std::uint64_t> values;  // (n-1) * k_max + (k-1)

    std::uint64_t at(int n, int k) const;
};

ComplexityTable complexity_table(const Window& u, int n_max, int k_max);

// Exact table for the full shift: P(n, k) = |A|^(n k), saturating at
// UINT64_MAX.  Empirical full-shift tables approach these values from below.
ComplexityTable full_shift_exact_table(int alphabet_size, int n_max, int k_max);

// 1D specialization (k fixed at 1), same common-anchor rule.  P[i] = P(i+1).
std::vector<std::uint64_t> complexity_1d(const Window& u, int n_max);

// Least n with P(n) <= n, if any.  A hit forces eventual periodicity of the
// underlying 1D language.
struct MorseHedlundResult {
    bool periodic_forced = false;
    int witness = 0;
    friend bool operator==(const MorseHedlundResult&,
                           const MorseHedlundResult&) = default;
};

MorseHedlundResult morse_hedlund_classify(std::span<const std::uint64_t> P);

// Square-diagonal classification of a complexity table:
//   Bounded   — the diagonal has plateaued over the trailing steps,
//   BelowGap  — some square satisfies 2 P(n,n) <= n^2 (least such n),
//   AboveGap  — neither.
// Bounded is checked first.  The witness scan runs over the square diagonal:
// the gap statement concerns P(R_n), and thin rectangles would otherwise
// dominate the scan on sources with a trivially periodic direction.
struct GapClassification {
    enum class Kind { Bounded, BelowGap, AboveGap };
    Kind kind = Kind::AboveGap;
    int witness_n = 0;  // BelowGap
    int witness_k = 0;
    std::uint64_t plateau_value = 0;  // Bounded
    int plateau_steps = 0;            // steps actually required
    double min_square_density = 0.0;  // min over n of P(n,n) / n^2
};

// plateau_steps = 0 selects the default ceil(n_max / 4).
GapClassification gap_classify(const ComplexityTable& t, int plateau_steps = 0);

const char* to_string(GapClassification::Kind kind);

}  // namespace subshift
