#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subshift/core.hpp"
#include "subshift/generators.hpp"

namespace subshift {

// Empirical cylinder frequencies of n x k patterns over the full anchor
// range.  Counts are exact integers and sum to total_anchors, so the
// frequencies sum to 1 exactly as rationals.
struct CylinderStats {
    int n = 0;
    int k = 0;
    std::uint64_t total_anchors = 0;
    std::vector<std::pair<std::string, std::uint64_t>> counts;  // key-sorted

    double frequency(std::size_t index) const {
        return static_cast<double>(counts[index].second) /
               static_cast<double>(total_anchors);
    }
};

CylinderStats empirical_measure(const Window& u, int n, int k, int threads = 1);

enum class Direction { Horizontal, Vertical };

const char* to_string(Direction d);

// H_m = -(1/m) sum nu[w] ln nu[w] over cylinders of the refinement shape:
// width m, height 2n-1 for the horizontal shift, transposed for the
// vertical one.  Natural log.
double partition_entropy(const Window& u, int m, int n, Direction direction);

struct EntropyPoint {
    int m = 0;
    double H = 0.0;            // H_m
    double block_entropy = 0.0;  // m * H_m
    double slope = 0.0;        // m H_m - (m-1) H_{m-1}; H_1 at m = 1
    std::uint64_t cylinders = 0;
    std::uint64_t anchors = 0;
    bool undersampled = false;
};

// Entropy curve over 1 <= m <= m_max.  The reported estimate is the final
// slope of m * H_m (a conditional-entropy increment, which settles much
// faster than H_m itself at desk scale); the tail H is emitted alongside.
struct EntropyEstimate {
    Direction direction = Direction::Horizontal;
    int n = 1;
    int m_max = 0;
    double estimate = 0.0;
    double tail_H = 0.0;
    bool unreliable = false;  // undersampled at the tail
    double undersample_threshold = 0.1;
    std::vector<EntropyPoint> curve;
};

EntropyEstimate directional_entropy_estimate(const Window& u,
                                             Direction direction, int n,
                                             int m_max,
                                             double undersample_threshold = 0.1);

// Generates a cols x rows sample from the source first.
EntropyEstimate directional_entropy_estimate(const SourceSpec& source,
                                             Direction direction, int n,
                                             int m_max, int cols, int rows,
                                             double undersample_threshold = 0.1);

}  // namespace subshift
