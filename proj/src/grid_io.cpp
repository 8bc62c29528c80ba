#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "subshift/core.hpp"

namespace subshift {

namespace {

std::string expect_header(std::istream& in, const std::string& prefix) {
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("grid parse error: missing '" + prefix + "' header");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(prefix, 0) != 0) {
        throw IoError("grid parse error: expected '" + prefix +
                      "' header, got \"" + line + "\"");
    }
    return line.substr(prefix.size());
}

}  // namespace

Window read_grid(std::istream& in) {
    std::string glyphs = expect_header(in, "#alphabet: ");
    if (glyphs.empty()) {
        throw IoError("grid parse error: empty alphabet");
    }

    std::istringstream origin_line(expect_header(in, "#origin: "));
    int ox = 0, oy = 0;
    if (!(origin_line >> ox >> oy)) {
        throw IoError("grid parse error: malformed origin");
    }

    std::istringstream size_line(expect_header(in, "#size: "));
    int width = 0, height = 0;
    if (!(size_line >> width >> height) || width < 1 || height < 1) {
        throw IoError("grid parse error: malformed size");
    }

    Alphabet alphabet(glyphs);
    std::vector<Symbol> cells(static_cast<std::size_t>(width) * height, 0);
    // First data row is the top of the plane.
    for (int r = 0; r < height; ++r) {
        std::string line;
        if (!std::getline(in, line)) {
            throw IoError("grid parse error: expected " + std::to_string(height) +
                          " data rows, got " + std::to_string(r));
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != width) {
            throw IoError("grid parse error: row " + std::to_string(r + 1) +
                          " has " + std::to_string(line.size()) +
                          " glyphs, expected " + std::to_string(width));
        }
        int row_index = height - 1 - r;
        for (int c = 0; c < width; ++c) {
            auto sym = alphabet.index_of(line[static_cast<std::size_t>(c)]);
            if (!sym) {
                throw IoError(std::string("grid parse error: unknown glyph '") +
                              line[static_cast<std::size_t>(c)] + "' at row " +
                              std::to_string(r + 1) + ", column " +
                              std::to_string(c + 1));
            }
            cells[static_cast<std::size_t>(row_index) * width + c] =
                static_cast<Symbol>(*sym);
        }
    }
    std::string trailing;
    while (std::getline(in, trailing)) {
        if (!trailing.empty() && trailing.back() == '\r') trailing.pop_back();
        if (!trailing.empty()) {
            throw IoError("grid parse error: unexpected trailing content \"" +
                          trailing + "\"");
        }
    }
    return Window(std::move(alphabet), Cell{ox, oy}, width, height,
                  std::move(cells));
}

Window read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    try {
        return read_grid(in);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_grid(std::ostream& out, const Window& w) {
    out << "#alphabet: " << w.alphabet().glyphs() << '\n';
    out << "#origin: " << w.origin().x << ' ' << w.origin().y << '\n';
    out << "#size: " << w.width() << ' ' << w.height() << '\n';
    for (int r = w.height() - 1; r >= 0; --r) {
        for (Symbol s : w.row(r)) {
            out << w.alphabet().glyph(s);
        }
        out << '\n';
    }
}

void write_grid_file(const std::string& path, const Window& w) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_grid(out, w);
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

}  // namespace subshift
