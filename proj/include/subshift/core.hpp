#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

using Symbol = std::uint8_t;

struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Ordered set of distinct single-character glyphs; a symbol is its index.
class Alphabet {
public:
    explicit Alphabet(std::string glyphs);

    int size() const { return static_cast<int>(glyphs_.size()); }
    char glyph(int symbol) const;
    std::optional<int> index_of(char glyph) const;
    const std::string& glyphs() const { return glyphs_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.glyphs_ == b.glyphs_;
    }

private:
    std::string glyphs_;
    std::array<std::int16_t, 256> index_;  // -1 when the byte is not a glyph
};

Alphabet binary_alphabet();

// Finite set of cells normalized so the componentwise minimum is (0,0).
// Cells are kept sorted by (y, x); for rectangles this is bottom-up
// row-major order.
class Shape {
public:
    static Shape rect(int width, int height);
    explicit Shape(std::vector<Cell> cells);

    std::span<const Cell> cells() const { return cells_; }
    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return cells_.size(); }
    bool is_rect() const { return is_rect_; }

    friend bool operator==(const Shape& a, const Shape& b) {
        return a.cells_ == b.cells_;
    }

private:
    Shape() = default;
    std::vector<Cell> cells_;
    int width_ = 0;
    int height_ = 0;
    bool is_rect_ = false;
};

// Total symbol assignment on a shape; symbols are aligned with
// Shape::cells() order.
class Pattern {
public:
    Pattern(Shape shape, std::vector<Symbol> symbols);

    const Shape& shape() const { return shape_; }
    std::span<const Symbol> symbols() const { return symbols_; }

    // Rectangular patterns only: symbol at local cell (x, y).
    Symbol at(int x, int y) const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.shape_ == b.shape_ && a.symbols_ == b.symbols_;
    }

private:
    Shape shape_;
    std::vector<Symbol> symbols_;
};

// Canonical printable key: equal iff the patterns are equal, stable across
// runs.  Built from the shape extents and the cell symbol string, so counts
// keyed by it are exact.
std::string pattern_key(const Pattern& p);

// Dense rectangular sample of a configuration.  Row 0 of the storage is the
// bottom row (j = origin.y); x grows rightward within a row.
class Window {
public:
    Window(Alphabet alphabet, Cell origin, int width, int height,
           std::vector<Symbol> cells);

    const Alphabet& alphabet() const { return alphabet_; }
    Cell origin() const { return origin_; }
    int width() const { return width_; }
    int height() const { return height_; }

    bool contains(int x, int y) const {
        return x >= origin_.x && x < origin_.x + width_ && y >= origin_.y &&
               y < origin_.y + height_;
    }

    Symbol at(int x, int y) const;
    Symbol at_unchecked(int x, int y) const {
        return cells_[static_cast<std::size_t>(y - origin_.y) * width_ +
                      (x - origin_.x)];
    }
    char glyph_at(int x, int y) const { return alphabet_.glyph(at(x, y)); }

    // row 0 = bottom row.
    std::span<const Symbol> row(int r) const;
    std::span<const Symbol> raw() const { return cells_; }

    friend bool operator==(const Window& a, const Window& b) {
        return a.alphabet_ == b.alphabet_ && a.origin_ == b.origin_ &&
               a.width_ == b.width_ && a.height_ == b.height_ &&
               a.cells_ == b.cells_;
    }

private:
    Alphabet alphabet_;
    Cell origin_;
    int width_ = 0;
    int height_ = 0;
    std::vector<Symbol> cells_;
};

// Copies the shape's cells translated by `anchor` out of the window.
Pattern extract_pattern(const Window& w, Cell anchor, const Shape& shape);

// N(w, u): number of anchors where the rectangular pattern matches the
// window.  A pattern larger than the window occurs zero times.  Partial
// counts over anchor ranges merge by addition, so the sweep may be split
// across threads.
std::uint64_t occurrences(const Pattern& w, const Window& u, int threads = 1);

// Grid text format:
//   #alphabet: <glyphs>
//   #origin: <x> <y>
//   #size: <width> <height>
// followed by `height` rows of `width` glyphs, first row on top
// (j = origin.y + height - 1).
Window read_grid(std::istream& in);
Window read_grid_file(const std::string& path);
void write_grid(std::ostream& out, const Window& w);
void write_grid_file(const std::string& path, const Window& w);

}  // namespace subshift
