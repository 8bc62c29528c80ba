#include "subshift/core.hpp"

#include <algorithm>
#include <thread>

namespace subshift {

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.empty()) {
        throw DomainError("alphabet must contain at least one glyph");
    }
    if (glyphs_.size() > 256) {
        throw DomainError("alphabet larger than 256 glyphs is not supported");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
        unsigned char g = static_cast<unsigned char>(glyphs_[i]);
        if (index_[g] != -1) {
            throw DomainError(std::string("duplicate glyph '") + glyphs_[i] +
                              "' in alphabet");
        }
        index_[g] = static_cast<std::int16_t>(i);
    }
}

char Alphabet::glyph(int symbol) const {
    if (symbol < 0 || symbol >= size()) {
        throw DomainError("symbol index " + std::to_string(symbol) +
                          " outside alphabet of size " + std::to_string(size()));
    }
    return glyphs_[static_cast<std::size_t>(symbol)];
}

std::optional<int> Alphabet::index_of(char glyph) const {
    std::int16_t i = index_[static_cast<unsigned char>(glyph)];
    if (i < 0) return std::nullopt;
    return static_cast<int>(i);
}

Alphabet binary_alphabet() { return Alphabet("01"); }

Shape Shape::rect(int width, int height) {
    if (width < 1 || height < 1) {
        throw DomainError("rectangle extents must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
    Shape s;
    s.cells_.reserve(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            s.cells_.push_back({x, y});
        }
    }
    s.width_ = width;
    s.height_ = height;
    s.is_rect_ = true;
    return s;
}

Shape::Shape(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw DomainError("shape must contain at least one cell");
    }
    int min_x = cells_[0].x, min_y = cells_[0].y;
    int max_x = cells_[0].x, max_y = cells_[0].y;
    for (const Cell& c : cells_) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    for (Cell& c : cells_) {
        c.x -= min_x;
        c.y -= min_y;
    }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
        throw DomainError("shape contains a duplicate cell");
    }
    width_ = max_x - min_x + 1;
    height_ = max_y - min_y + 1;
    is_rect_ = cells_.size() ==
               static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
}

Pattern::Pattern(Shape shape, std::vector<Symbol> symbols)
    : shape_(std::move(shape)), symbols_(std::move(symbols)) {
    if (symbols_.size() != shape_.size()) {
        throw DomainError("pattern has " + std::to_string(symbols_.size()) +
                          " symbols for a shape of " +
                          std::to_string(shape_.size()) + " cells");
    }
}

Symbol Pattern::at(int x, int y) const {
    if (!shape_.is_rect() || x < 0 || x >= shape_.width() || y < 0 ||
        y >= shape_.height()) {
        throw DomainError("pattern cell access outside rectangular shape");
    }
    return symbols_[static_cast<std::size_t>(y) * shape_.width() + x];
}

namespace {

// Symbol indices < 62 render as one alphanumeric character; larger ones
// fall back to decimal with a distinct prefix so the two encodings cannot
// collide.
constexpr char kKeyDigits[] =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

void append_symbols(std::string& out, std::span<const Symbol> symbols) {
    bool compact = std::all_of(symbols.begin(), symbols.end(),
                               [](Symbol s) { return s < 62; });
    if (compact) {
        out += ':';
        for (Symbol s : symbols) out += kKeyDigits[s];
    } else {
        out += '#';
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(symbols[i]);
        }
    }
}

}  // namespace

std::string pattern_key(const Pattern& p) {
    std::string key;
    key += p.shape().is_rect() ? 'R' : 'S';
    key += std::to_string(p.shape().width());
    key += 'x';
    key += std::to_string(p.shape().height());
    if (!p.shape().is_rect()) {
        key += '[';
        for (const Cell& c : p.shape().cells()) {
            key += std::to_string(c.x);
            key += ',';
            key += std::to_string(c.y);
            key += ';';
        }
        key += ']';
    }
    append_symbols(key, p.symbols());
    return key;
}

Window::Window(Alphabet alphabet, Cell origin, int width, int height,
               std::vector<Symbol> cells)
    : alphabet_(std::move(alphabet)),
      origin_(origin),
      width_(width),
      height_(height),
      cells_(std::move(cells)) {
    if (width_ < 1 || height_ < 1) {
        throw DomainError("window extents must be positive, got " +
                          std::to_string(width_) + "x" + std::to_string(height_));
    }
    if (cells_.size() != static_cast<std::size_t>(width_) * height_) {
        throw DomainError("window cell count does not match extents");
    }
    for (Symbol s : cells_) {
        if (s >= alphabet_.size()) {
            throw DomainError("window cell symbol " + std::to_string(s) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_.size()));
        }
    }
}

Symbol Window::at(int x, int y) const {
    if (!contains(x, y)) {
        throw DomainError("cell (" + std::to_string(x) + "," +
                          std::to_string(y) + ") outside window [" +
                          std::to_string(origin_.x) + ".." +
                          std::to_string(origin_.x + width_ - 1) + "]x[" +
                          std::to_string(origin_.y) + ".." +
                          std::to_string(origin_.y + height_ - 1) + "]");
    }
    return at_unchecked(x, y);
}

std::span<const Symbol> Window::row(int r) const {
    if (r < 0 || r >= height_) {
        throw DomainError("row index " + std::to_string(r) +
                          " outside window of height " + std::to_string(height_));
    }
    return std::span<const Symbol>(cells_)
        .subspan(static_cast<std::size_t>(r) * width_, width_);
}

Pattern extract_pattern(const Window& w, Cell anchor, const Shape& shape) {
    std::vector<Symbol> symbols;
    symbols.reserve(shape.size());
    for (const Cell& c : shape.cells()) {
        int x = anchor.x + c.x;
        int y = anchor.y + c.y;
        if (!w.contains(x, y)) {
            throw DomainError("pattern cell (" + std::to_string(x) + "," +
                              std::to_string(y) + ") outside window");
        }
        symbols.push_back(w.at_unchecked(x, y));
    }
    return Pattern(shape, std::move(symbols));
}

namespace {

std::uint64_t count_rows(const Pattern& w, const Window& u, int y_begin,
                         int y_end) {
    const int n = w.shape().width();
    const int k = w.shape().height();
    std::span<const Symbol> pat = w.symbols();
    std::uint64_t count = 0;
    for (int ay = y_begin; ay < y_end; ++ay) {
        for (int ax = 0; ax <= u.width() - n; ++ax) {
            bool match = true;
            for (int dy = 0; dy < k && match; ++dy) {
                const Symbol* row =
                    u.raw().data() + static_cast<std::size_t>(ay + dy) * u.width();
                const Symbol* want = pat.data() + static_cast<std::size_t>(dy) * n;
                for (int dx = 0; dx < n; ++dx) {
                    if (row[ax + dx] != want[dx]) {
                        match = false;
                        break;
                    }
                }
            }
            count += match;
        }
    }
    return count;
}

}  // namespace

std::uint64_t occurrences(const Pattern& w, const Window& u, int threads) {
    if (!w.shape().is_rect()) {
        throw DomainError("occurrence counting requires a rectangular pattern");
    }
    const int n = w.shape().width();
    const int k = w.shape().height();
    if (n > u.width() || k > u.height()) return 0;

    const int y_anchors = u.height() - k + 1;
    threads = std::clamp(threads, 1, y_anchors);
    if (threads == 1) return count_rows(w, u, 0, y_anchors);

    std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        int y0 = static_cast<int>(static_cast<std::int64_t>(y_anchors) * t / threads);
        int y1 = static_cast<int>(static_cast<std::int64_t>(y_anchors) * (t + 1) /
                                  threads);
        pool.emplace_back([&, t, y0, y1] { partial[t] = count_rows(w, u, y0, y1); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

}  // namespace subshift
