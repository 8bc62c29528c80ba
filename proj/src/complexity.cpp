#include "subshift/complexity.hpp"

#include <algorithm>
#include <limits>

#include "subshift/census.hpp"

namespace subshift {

std::uint64_t ComplexityTable::at(int n, int k) const {
    if (n < 1 || n > n_max || k < 1 || k > k_max) {
        throw DomainError("complexity table access P(" + std::to_string(n) +
                          "," + std::to_string(k) + ") outside computed range");
    }
    return values[static_cast<std::size_t>(n - 1) * k_max + (k - 1)];
}

namespace {

ComplexityTable sweep_table(const Window& u, int n_max, int k_max) {
    ComplexityTable table;
    table.n_max = n_max;
    table.k_max = k_max;
    table.alphabet_size = u.alphabet().size();
    table.provenance = TableProvenance::Empirical;
    table.source = "window " + std::to_string(u.width()) + "x" +
                   std::to_string(u.height());
    table.values.assign(static_cast<std::size_t>(n_max) * k_max, 0);

    const int limit_x = u.width() - n_max + 1;
    const int limit_y = u.height() - k_max + 1;
    table.anchors =
        static_cast<std::uint64_t>(limit_x) * static_cast<std::uint64_t>(limit_y);

    CensusLevel base = census_base(u);
    CensusLevel column = base;  // 1 x k strip ids
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) column = census_extend_y(column, base);
        CensusLevel cur = column;
        table.values[static_cast<std::size_t>(0) * k_max + (k - 1)] =
            census_distinct(cur, limit_x, limit_y);
        for (int n = 2; n <= n_max; ++n) {
            cur = census_extend_x(cur, column);
            table.values[static_cast<std::size_t>(n - 1) * k_max + (k - 1)] =
                census_distinct(cur, limit_x, limit_y);
        }
    }
    return table;
}

}  // namespace

ComplexityTable complexity_table(const Window& u, int n_max, int k_max) {
    if (n_max < 1 || k_max < 1) {
        throw DomainError("complexity table range must be positive");
    }
    if (u.width() < n_max || u.height() < k_max) {
        throw DomainError("window " + std::to_string(u.width()) + "x" +
                          std::to_string(u.height()) +
                          " cannot fit a complexity census of range " +
                          std::to_string(n_max) + "x" + std::to_string(k_max) +
                          "; needs at least " + std::to_string(n_max) + "x" +
                          std::to_string(k_max));
    }
    return sweep_table(u, n_max, k_max);
}

ComplexityTable full_shift_exact_table(int alphabet_size, int n_max,
                                       int k_max) {
    if (alphabet_size < 1 || n_max < 1 || k_max < 1) {
        throw DomainError("full shift table parameters must be positive");
    }
    ComplexityTable table;
    table.n_max = n_max;
    table.k_max = k_max;
    table.alphabet_size = alphabet_size;
    table.provenance = TableProvenance::Exact;
    table.source = "full shift on " + std::to_string(alphabet_size) + " symbols";
    table.anchors = 0;
    table.values.assign(static_cast<std::size_t>(n_max) * k_max, 0);
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            std::uint64_t v = 1;
            for (int e = 0; e < n * k; ++e) {
                if (v > cap / static_cast<std::uint64_t>(alphabet_size)) {
                    v = cap;
                    break;
                }
                v *= static_cast<std::uint64_t>(alphabet_size);
            }
            table.values[static_cast<std::size_t>(n - 1) * k_max + (k - 1)] = v;
        }
    }
    return table;
}

std::vector<std::uint64_t> complexity_1d(const Window& u, int n_max) {
    if (n_max < 1) {
        throw DomainError("complexity range must be positive");
    }
    if (u.width() < n_max) {
        throw DomainError("window of width " + std::to_string(u.width()) +
                          " cannot fit 1D complexity up to n = " +
                          std::to_string(n_max));
    }
    ComplexityTable t = sweep_table(u, n_max, 1);
    std::vector<std::uint64_t> P(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) P[static_cast<std::size_t>(n - 1)] = t.at(n, 1);
    return P;
}

MorseHedlundResult morse_hedlund_classify(std::span<const std::uint64_t> P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i] <= i + 1) {
            return MorseHedlundResult{true, static_cast<int>(i + 1)};
        }
    }
    return MorseHedlundResult{false, 0};
}

GapClassification gap_classify(const ComplexityTable& t, int plateau_steps) {
    if (t.n_max != t.k_max || t.n_max < 3) {
        throw DomainError("gap classification needs a square table with "
                          "n_max = k_max >= 3");
    }
    const int n_max = t.n_max;
    if (plateau_steps <= 0) plateau_steps = (n_max + 3) / 4;
    plateau_steps = std::min(plateau_steps, n_max - 1);

    GapClassification result;
    result.plateau_steps = plateau_steps;
    result.min_square_density = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
        double density = static_cast<double>(t.at(n, n)) /
                         (static_cast<double>(n) * static_cast<double>(n));
        result.min_square_density = std::min(result.min_square_density, density);
    }

    bool plateau = true;
    for (int s = 1; s <= plateau_steps && plateau; ++s) {
        plateau = t.at(n_max - s, n_max - s) == t.at(n_max, n_max);
    }
    // A plateau at the anchor count means every anchor carries a distinct
    // pattern: the census is saturated, not bounded.
    if (t.anchors > 0 && t.at(n_max, n_max) >= t.anchors) plateau = false;
    if (plateau) {
        result.kind = GapClassification::Kind::Bounded;
        result.plateau_value = t.at(n_max, n_max);
        return result;
    }

    for (int n = 1; n <= n_max; ++n) {
        if (2 * t.at(n, n) <= static_cast<std::uint64_t>(n) * n) {
            result.kind = GapClassification::Kind::BelowGap;
            result.witness_n = n;
            result.witness_k = n;
            return result;
        }
    }

    result.kind = GapClassification::Kind::AboveGap;
    return result;
}

const char* to_string(GapClassification::Kind kind) {
    switch (kind) {
        case GapClassification::Kind::Bounded: return "bounded";
        case GapClassification::Kind::BelowGap: return "below_gap";
        case GapClassification::Kind::AboveGap: return "above_gap";
    }
    return "unknown";
}

}  // namespace subshift
