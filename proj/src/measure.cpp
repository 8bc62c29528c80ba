#include "subshift/measure.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "subshift/census.hpp"

namespace subshift {

namespace {

std::unordered_map<std::string, std::uint64_t> count_keys(const Window& u,
                                                          int n, int k,
                                                          int y_begin,
                                                          int y_end) {
    std::unordered_map<std::string, std::uint64_t> counts;
    Shape shape = Shape::rect(n, k);
    for (int ay = y_begin; ay < y_end; ++ay) {
        for (int ax = 0; ax <= u.width() - n; ++ax) {
            Pattern p = extract_pattern(
                u, Cell{u.origin().x + ax, u.origin().y + ay}, shape);
            ++counts[pattern_key(p)];
        }
    }
    return counts;
}

}  // namespace

CylinderStats empirical_measure(const Window& u, int n, int k, int threads) {
    if (n < 1 || k < 1) {
        throw DomainError("cylinder shape must be positive");
    }
    // Nontrivial dimensions need room for at least two anchors; a
    // dimension-1 shape works on a bare row or column.
    const int need_w = n == 1 ? 1 : 2 * n;
    const int need_h = k == 1 ? 1 : 2 * k;
    if (u.width() < need_w || u.height() < need_h) {
        throw DomainError("window " + std::to_string(u.width()) + "x" +
                          std::to_string(u.height()) +
                          " too small for an empirical " + std::to_string(n) +
                          "x" + std::to_string(k) + " measure; needs at least " +
                          std::to_string(need_w) + "x" + std::to_string(need_h));
    }

    const int y_anchors = u.height() - k + 1;
    threads = std::clamp(threads, 1, y_anchors);

    std::unordered_map<std::string, std::uint64_t> merged;
    if (threads == 1) {
        merged = count_keys(u, n, k, 0, y_anchors);
    } else {
        // Partial counts over anchor bands merge by addition.
        std::vector<std::unordered_map<std::string, std::uint64_t>> partial(
            static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            int y0 = static_cast<int>(static_cast<std::int64_t>(y_anchors) * t /
                                      threads);
            int y1 = static_cast<int>(static_cast<std::int64_t>(y_anchors) *
                                      (t + 1) / threads);
            pool.emplace_back(
                [&, t, y0, y1] { partial[t] = count_keys(u, n, k, y0, y1); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : partial) {
            for (auto& [key, count] : part) merged[key] += count;
        }
    }

    CylinderStats stats;
    stats.n = n;
    stats.k = k;
    stats.total_anchors = static_cast<std::uint64_t>(u.width() - n + 1) *
                          static_cast<std::uint64_t>(y_anchors);
    stats.counts.assign(merged.begin(), merged.end());
    std::sort(stats.counts.begin(), stats.counts.end());
    return stats;
}

const char* to_string(Direction d) {
    return d == Direction::Horizontal ? "horizontal" : "vertical";
}

namespace {

struct ShapeDims {
    int width = 0;
    int height = 0;
};

ShapeDims refinement_shape(int m, int n, Direction direction) {
    int transverse = 2 * n - 1;
    if (direction == Direction::Horizontal) return {m, transverse};
    return {transverse, m};
}

void check_entropy_window(const Window& u, int m, int n, Direction direction) {
    if (m < 1) throw DomainError("refinement depth m must be positive");
    if (n < 1) throw DomainError("transverse half-width n must be positive");
    ShapeDims dims = refinement_shape(m, n, direction);
    if (u.width() < dims.width || u.height() < dims.height) {
        throw DomainError("window " + std::to_string(u.width()) + "x" +
                          std::to_string(u.height()) +
                          " cannot hold the cylinder shape " +
                          std::to_string(dims.width) + "x" +
                          std::to_string(dims.height));
    }
    std::uint64_t anchors =
        static_cast<std::uint64_t>(u.width() - dims.width + 1) *
        static_cast<std::uint64_t>(u.height() - dims.height + 1);
    if (anchors < 100 * static_cast<std::uint64_t>(m)) {
        throw DomainError("window " + std::to_string(u.width()) + "x" +
                          std::to_string(u.height()) + " yields only " +
                          std::to_string(anchors) +
                          " anchors for m = " + std::to_string(m) +
                          "; at least " + std::to_string(100 * m) +
                          " are required");
    }
}

double entropy_from_histogram(const std::vector<std::uint64_t>& counts,
                              std::uint64_t total, int m) {
    // H = ln(total) - (sum c ln c) / total, divided by m.
    double acc = 0.0;
    for (std::uint64_t c : counts) {
        if (c > 0) acc += static_cast<double>(c) * std::log(static_cast<double>(c));
    }
    double total_d = static_cast<double>(total);
    return (std::log(total_d) - acc / total_d) / static_cast<double>(m);
}

// Transverse strip level of the refinement shape at m = 1.
CensusLevel transverse_strip(const Window& u, int n, Direction direction) {
    CensusLevel base = census_base(u);
    CensusLevel strip = base;
    int transverse = 2 * n - 1;
    for (int t = 1; t < transverse; ++t) {
        strip = direction == Direction::Horizontal
                    ? census_extend_y(strip, base)
                    : census_extend_x(strip, base);
    }
    return strip;
}

}  // namespace

double partition_entropy(const Window& u, int m, int n, Direction direction) {
    check_entropy_window(u, m, n, direction);
    CensusLevel strip = transverse_strip(u, n, direction);
    CensusLevel cur = strip;
    for (int depth = 2; depth <= m; ++depth) {
        cur = direction == Direction::Horizontal ? census_extend_x(cur, strip)
                                                 : census_extend_y(cur, strip);
    }
    return entropy_from_histogram(census_histogram(cur), cur.anchors(), m);
}

EntropyEstimate directional_entropy_estimate(const Window& u,
                                             Direction direction, int n,
                                             int m_max,
                                             double undersample_threshold) {
    check_entropy_window(u, m_max, n, direction);
    if (!(undersample_threshold > 0.0)) {
        throw DomainError("undersample threshold must be positive");
    }

    EntropyEstimate estimate;
    estimate.direction = direction;
    estimate.n = n;
    estimate.m_max = m_max;
    estimate.undersample_threshold = undersample_threshold;
    estimate.curve.reserve(static_cast<std::size_t>(m_max));

    CensusLevel strip = transverse_strip(u, n, direction);
    CensusLevel cur = strip;
    double prev_block = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        if (m > 1) {
            cur = direction == Direction::Horizontal
                      ? census_extend_x(cur, strip)
                      : census_extend_y(cur, strip);
        }
        std::vector<std::uint64_t> histogram = census_histogram(cur);
        std::uint64_t distinct = 0;
        for (std::uint64_t c : histogram) distinct += c > 0;

        EntropyPoint point;
        point.m = m;
        point.anchors = cur.anchors();
        point.cylinders = distinct;
        point.H = entropy_from_histogram(histogram, point.anchors, m);
        point.block_entropy = static_cast<double>(m) * point.H;
        point.slope = point.block_entropy - prev_block;
        point.undersampled =
            static_cast<double>(distinct) >
            undersample_threshold * static_cast<double>(point.anchors);
        prev_block = point.block_entropy;
        estimate.curve.push_back(point);
    }

    const EntropyPoint& tail = estimate.curve.back();
    estimate.estimate = tail.slope;
    estimate.tail_H = tail.H;
    estimate.unreliable = tail.undersampled;
    return estimate;
}

EntropyEstimate directional_entropy_estimate(const SourceSpec& source,
                                             Direction direction, int n,
                                             int m_max, int cols, int rows,
                                             double undersample_threshold) {
    Window u = generate_window(source, cols, rows);
    return directional_entropy_estimate(u, direction, n, m_max,
                                        undersample_threshold);
}

}  // namespace subshift
