// JSON (de)serialization of SourceSpec: a variant tag plus parameters, with
// rationals carried as {"num", "den"} strings so exactness survives the trip.

#include <fstream>

#include <json.hpp>

#include "subshift/generators.hpp"
#include "subshift/source_json.hpp"

namespace subshift {

namespace {

using nlohmann::json;

json rational_json(const BigRational& r) {
    return json{{"num", big_numerator(r).str()},
                {"den", big_denominator(r).str()}};
}

BigRational rational_from(const json& j, const std::string& field) {
    if (!j.contains(field)) {
        throw IoError("source spec: missing rational field \"" + field + "\"");
    }
    const json& r = j.at(field);
    if (r.is_string()) {
        return parse_rational(r.get<std::string>());
    }
    if (!r.is_object() || !r.contains("num") || !r.contains("den")) {
        throw IoError("source spec: field \"" + field +
                      "\" must be a {num, den} object or an \"a/b\" string");
    }
    return parse_rational(r.at("num").get<std::string>() + "/" +
                          r.at("den").get<std::string>());
}

json pattern_rows(const Pattern& block, const Alphabet& alphabet) {
    json rows = json::array();
    for (int y = block.shape().height() - 1; y >= 0; --y) {
        std::string row;
        for (int x = 0; x < block.shape().width(); ++x) {
            row += alphabet.glyph(block.at(x, y));
        }
        rows.push_back(row);
    }
    return rows;
}

Pattern pattern_from_rows(const json& rows, const Alphabet& alphabet) {
    if (!rows.is_array() || rows.empty()) {
        throw IoError("source spec: periodic block must be a nonempty array "
                      "of glyph rows");
    }
    int height = static_cast<int>(rows.size());
    int width = -1;
    std::vector<Symbol> symbols;
    for (int r = 0; r < height; ++r) {
        std::string row = rows.at(static_cast<std::size_t>(r)).get<std::string>();
        if (width < 0) {
            width = static_cast<int>(row.size());
            symbols.assign(static_cast<std::size_t>(width) * height, 0);
        }
        if (static_cast<int>(row.size()) != width) {
            throw IoError("source spec: ragged periodic block row");
        }
        int y = height - 1 - r;  // first row is on top
        for (int x = 0; x < width; ++x) {
            auto sym = alphabet.index_of(row[static_cast<std::size_t>(x)]);
            if (!sym) {
                throw IoError(std::string("source spec: unknown glyph '") +
                              row[static_cast<std::size_t>(x)] +
                              "' in periodic block");
            }
            symbols[static_cast<std::size_t>(y) * width + x] =
                static_cast<Symbol>(*sym);
        }
    }
    return Pattern(Shape::rect(width, height), std::move(symbols));
}

const char* partition_name(PartitionKind kind) {
    return kind == PartitionKind::HalfInterval ? "half-interval"
                                               : "base-p-digit";
}

PartitionKind partition_from(const std::string& name) {
    if (name == "half-interval") return PartitionKind::HalfInterval;
    if (name == "base-p-digit") return PartitionKind::BasePDigit;
    throw IoError("source spec: unknown partition \"" + name +
                  "\" (expected half-interval or base-p-digit)");
}

}  // namespace

nlohmann::json source_to_json(const SourceSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullShiftSource>) {
                return json{{"kind", "full-shift"},
                            {"alphabet", s.alphabet.glyphs()},
                            {"seed", s.seed}};
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                return json{{"kind", "periodic"},
                            {"alphabet", s.alphabet.glyphs()},
                            {"block", pattern_rows(s.block, s.alphabet)},
                            {"basis", json::array({json::array({s.basis0.x,
                                                                s.basis0.y}),
                                                   json::array({s.basis1.x,
                                                                s.basis1.y})})}};
            } else if constexpr (std::is_same_v<T, SturmianSource>) {
                return json{{"kind", "sturmian"},
                            {"alpha", rational_json(s.alpha)},
                            {"rho", rational_json(s.rho)}};
            } else if constexpr (std::is_same_v<T, SturmianVerticalSource>) {
                return json{{"kind", "sturmian-vertical"},
                            {"alpha", rational_json(s.alpha)},
                            {"rho", rational_json(s.rho)}};
            } else if constexpr (std::is_same_v<T, TimesPqSource>) {
                json point;
                if (const auto* dyadic = std::get_if<DyadicPoint>(&s.point)) {
                    point = json{{"kind", "dyadic"},
                                 {"seed", dyadic->seed},
                                 {"bits", dyadic->bits}};
                } else {
                    const auto& rational = std::get<RationalPoint>(s.point);
                    point = json{{"kind", "rational"},
                                 {"value", rational_json(rational.value)}};
                }
                return json{{"kind", "times-pq"},
                            {"p", s.p},
                            {"q", s.q},
                            {"point", point},
                            {"partition", partition_name(s.partition)}};
            } else {
                static_assert(std::is_same_v<T, FromFileSource>);
                return json{{"kind", "from-file"}, {"path", s.path}};
            }
        },
        spec);
}

SourceSpec source_from_json(const nlohmann::json& j,
                            std::uint64_t default_seed) {
    if (!j.is_object() || !j.contains("kind")) {
        throw IoError("source spec must be an object with a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "full-shift") {
            FullShiftSource s{Alphabet(j.at("alphabet").get<std::string>()),
                              j.value("seed", default_seed)};
            return s;
        }
        if (kind == "periodic") {
            Alphabet alphabet(j.at("alphabet").get<std::string>());
            Pattern block = pattern_from_rows(j.at("block"), alphabet);
            const json& basis = j.at("basis");
            if (!basis.is_array() || basis.size() != 2 ||
                basis.at(0).size() != 2 || basis.at(1).size() != 2) {
                throw IoError("source spec: basis must be two [x, y] vectors");
            }
            return PeriodicSource{
                std::move(alphabet), std::move(block),
                Cell{basis.at(0).at(0).get<int>(), basis.at(0).at(1).get<int>()},
                Cell{basis.at(1).at(0).get<int>(), basis.at(1).at(1).get<int>()}};
        }
        if (kind == "sturmian") {
            return SturmianSource{rational_from(j, "alpha"),
                                  rational_from(j, "rho")};
        }
        if (kind == "sturmian-vertical") {
            return SturmianVerticalSource{rational_from(j, "alpha"),
                                          rational_from(j, "rho")};
        }
        if (kind == "times-pq") {
            TimesPqSource s;
            s.p = j.at("p").get<int>();
            s.q = j.at("q").get<int>();
            const json& point = j.at("point");
            const std::string point_kind = point.at("kind").get<std::string>();
            if (point_kind == "dyadic") {
                s.point = DyadicPoint{point.value("seed", default_seed),
                                      point.at("bits").get<int>()};
            } else if (point_kind == "rational") {
                s.point = RationalPoint{rational_from(point, "value")};
            } else {
                throw IoError("source spec: unknown point kind \"" +
                              point_kind + "\"");
            }
            s.partition =
                partition_from(j.value("partition", "half-interval"));
            return s;
        }
        if (kind == "from-file") {
            return FromFileSource{j.at("path").get<std::string>()};
        }
    } catch (const json::exception& e) {
        throw IoError("source spec: " + std::string(e.what()));
    }
    throw IoError("source spec: unknown kind \"" + kind + "\"");
}

SourceSpec source_from_json_file(const std::string& path,
                                 std::uint64_t default_seed) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return source_from_json(j, default_seed);
}

}  // namespace subshift
