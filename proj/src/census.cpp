#include "subshift/census.hpp"

#include <unordered_map>

namespace subshift {

CensusLevel census_base(const Window& u) {
    CensusLevel level;
    level.shape_w = 1;
    level.shape_h = 1;
    level.nx = u.width();
    level.ny = u.height();
    level.ids.assign(u.raw().begin(), u.raw().end());
    level.id_count = static_cast<std::uint32_t>(u.alphabet().size());
    return level;
}

namespace {

// dx, dy locate the strip anchor relative to the current anchor; exactly one
// of them is nonzero.
CensusLevel extend(const CensusLevel& cur, const CensusLevel& strip, int dx,
                   int dy) {
    CensusLevel next;
    next.shape_w = cur.shape_w + (dx ? strip.shape_w : 0);
    next.shape_h = cur.shape_h + (dy ? strip.shape_h : 0);
    next.nx = cur.nx - (dx ? strip.shape_w : 0);
    next.ny = cur.ny - (dy ? strip.shape_h : 0);
    if (next.nx < 1 || next.ny < 1) {
        throw DomainError("census extension exceeds window extents");
    }
    next.ids.resize(static_cast<std::size_t>(next.nx) * next.ny);

    std::unordered_map<std::uint64_t, std::uint32_t> encode;
    encode.reserve(cur.id_count * 2 + 16);
    std::uint32_t fresh = 0;
    for (int ay = 0; ay < next.ny; ++ay) {
        const std::uint32_t* cur_row =
            cur.ids.data() + static_cast<std::size_t>(ay) * cur.nx;
        const std::uint32_t* strip_row =
            strip.ids.data() + static_cast<std::size_t>(ay + dy) * strip.nx + dx;
        std::uint32_t* out_row =
            next.ids.data() + static_cast<std::size_t>(ay) * next.nx;
        for (int ax = 0; ax < next.nx; ++ax) {
            std::uint64_t pair =
                (static_cast<std::uint64_t>(cur_row[ax]) << 32) | strip_row[ax];
            auto [it, inserted] = encode.try_emplace(pair, fresh);
            if (inserted) ++fresh;
            out_row[ax] = it->second;
        }
    }
    next.id_count = fresh;
    return next;
}

}  // namespace

CensusLevel census_extend_x(const CensusLevel& cur, const CensusLevel& strip) {
    if (strip.shape_h != cur.shape_h) {
        throw DomainError("census_extend_x strip height mismatch");
    }
    return extend(cur, strip, cur.shape_w, 0);
}

CensusLevel census_extend_y(const CensusLevel& cur, const CensusLevel& strip) {
    if (strip.shape_w != cur.shape_w) {
        throw DomainError("census_extend_y strip width mismatch");
    }
    return extend(cur, strip, 0, cur.shape_h);
}

std::uint64_t census_distinct(const CensusLevel& level, int limit_x,
                              int limit_y) {
    if (limit_x < 0) limit_x = level.nx;
    if (limit_y < 0) limit_y = level.ny;
    if (limit_x > level.nx || limit_y > level.ny) {
        throw DomainError("census_distinct limits exceed anchor range");
    }
    std::vector<bool> seen(level.id_count, false);
    std::uint64_t distinct = 0;
    for (int ay = 0; ay < limit_y; ++ay) {
        const std::uint32_t* row =
            level.ids.data() + static_cast<std::size_t>(ay) * level.nx;
        for (int ax = 0; ax < limit_x; ++ax) {
            if (!seen[row[ax]]) {
                seen[row[ax]] = true;
                ++distinct;
            }
        }
    }
    return distinct;
}

std::vector<std::uint64_t> census_histogram(const CensusLevel& level) {
    std::vector<std::uint64_t> counts(level.id_count, 0);
    for (std::uint32_t id : level.ids) ++counts[id];
    return counts;
}

}  // namespace subshift
