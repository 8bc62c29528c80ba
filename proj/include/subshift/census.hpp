#pragma once

#include <cstdint>
#include <vector>

#include "subshift/core.hpp"

namespace subshift {

// Incremental identification of rectangular subpatterns.  A census level
// assigns a dense id to every anchor of one shape so that two anchors carry
// the same id iff their subpatterns are equal.  Levels extend by one strip
// at a time: an (n+1) x k id is the pair (n x k id, 1 x k id at the next
// column), re-encoded densely.  Ids are assigned in row-major anchor scan
// order, so a census is deterministic for a given window.
struct CensusLevel {
    int shape_w = 0;
    int shape_h = 0;
    int nx = 0;  // anchor columns: window width - shape_w + 1
    int ny = 0;  // anchor rows: window height - shape_h + 1
    std::vector<std::uint32_t> ids;  // ny * nx, row-major
    std::uint32_t id_count = 0;

    std::uint64_t anchors() const {
        return static_cast<std::uint64_t>(nx) * ny;
    }
    std::uint32_t id_at(int ax, int ay) const {
        return ids[static_cast<std::size_t>(ay) * nx + ax];
    }
};

// 1x1 level: ids are the window symbols themselves.
CensusLevel census_base(const Window& u);

// (cur.shape_w + strip.shape_w) x k level from a k-tall strip level.
CensusLevel census_extend_x(const CensusLevel& cur, const CensusLevel& strip);

// n x (cur.shape_h + strip.shape_h) level from an n-wide strip level.
CensusLevel census_extend_y(const CensusLevel& cur, const CensusLevel& strip);

// Distinct ids among anchors (ax, ay) with ax < limit_x and ay < limit_y;
// limits of -1 mean the full range.
std::uint64_t census_distinct(const CensusLevel& level, int limit_x,
                              int limit_y);

// Occurrence count per id over all anchors of the level.
std::vector<std::uint64_t> census_histogram(const CensusLevel& level);

}  // namespace subshift
