// subshift-lab: complexity, periodicity, word-frequency and entropy analysis
// of 1D/2D symbolic windows, plus exact times-p/times-q orbit codings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "subshift/complexity.hpp"
#include "subshift/generators.hpp"
#include "subshift/measure.hpp"
#include "subshift/periodicity.hpp"
#include "subshift/reports.hpp"
#include "subshift/source_json.hpp"

namespace {

using nlohmann::json;
using namespace subshift;

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
    // input selection
    std::string source_path;
    std::string input_path;
    std::string kind;
    std::string alphabet = "01";
    std::string alpha;
    std::string rho = "0";
    int p = 2;
    int q = 3;
    std::string point;  // "a/b" or "dyadic"
    int bits = 0;
    std::string partition = "half-interval";
    std::string block_file;
    std::string basis;  // "a,b;c,d"
    std::string file;   // from-file path
    int cols = 0;
    int rows = 1;

    // parameters
    int n_max = 10;
    int k_max = 0;  // 0: auto (1 for rows of height 1, n_max otherwise)
    int n = 1;
    int m_max = 10;
    int max_shift = 10;
    double min_overlap = 0.5;
    int plateau_steps = 0;  // 0: ceil(n_max/4)
    double undersample_threshold = 0.1;
    std::string direction = "horizontal";

    // run control
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;  // 0: SUBSHIFT_LAB_THREADS or 1
    std::string format;
    std::string out;
    std::string domain_out;

    // positionals
    long long pp = 0, qq = 0;
    int fi = 0, fj = 0;
};

int resolve_threads(const Options& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("SUBSHIFT_LAB_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

Cell parse_vector(const std::string& text) {
    int x = 0, y = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> x >> comma >> y) || comma != ',') {
        throw DomainError("cannot parse vector \"" + text +
                          "\" (expected \"x,y\")");
    }
    return Cell{x, y};
}

SourceSpec inline_source(const Options& opts) {
    if (opts.kind == "full-shift") {
        return FullShiftSource{Alphabet(opts.alphabet), opts.seed};
    }
    if (opts.kind == "sturmian" || opts.kind == "sturmian-vertical") {
        if (opts.alpha.empty()) {
            throw DomainError("sturmian sources need --alpha");
        }
        BigRational alpha = parse_rational(opts.alpha);
        BigRational rho = parse_rational(opts.rho);
        if (opts.kind == "sturmian") return SturmianSource{alpha, rho};
        return SturmianVerticalSource{alpha, rho};
    }
    if (opts.kind == "times-pq") {
        TimesPqSource s;
        s.p = opts.p;
        s.q = opts.q;
        if (opts.point == "dyadic" || opts.point.empty()) {
            int bits = opts.bits > 0
                           ? opts.bits
                           : required_dyadic_bits(opts.p, opts.q, opts.cols,
                                                  opts.rows);
            s.point = DyadicPoint{opts.seed, bits};
        } else {
            s.point = RationalPoint{parse_rational(opts.point)};
        }
        if (opts.partition == "half-interval") {
            s.partition = PartitionKind::HalfInterval;
        } else if (opts.partition == "base-p-digit") {
            s.partition = PartitionKind::BasePDigit;
        } else {
            throw DomainError("unknown partition \"" + opts.partition +
                              "\" (expected half-interval or base-p-digit)");
        }
        return s;
    }
    if (opts.kind == "periodic") {
        if (opts.block_file.empty() || opts.basis.empty()) {
            throw DomainError("periodic sources need --block-file and --basis");
        }
        Window block = read_grid_file(opts.block_file);
        auto semi = opts.basis.find(';');
        if (semi == std::string::npos) {
            throw DomainError("basis must be \"a,b;c,d\"");
        }
        Pattern pattern = extract_pattern(
            block, block.origin(),
            Shape::rect(block.width(), block.height()));
        return PeriodicSource{block.alphabet(), pattern,
                              parse_vector(opts.basis.substr(0, semi)),
                              parse_vector(opts.basis.substr(semi + 1))};
    }
    if (opts.kind == "from-file") {
        if (opts.file.empty()) {
            throw DomainError("from-file sources need --file");
        }
        return FromFileSource{opts.file};
    }
    throw DomainError("unknown source kind \"" + opts.kind + "\"");
}

struct ResolvedInput {
    Window window;
    json source_desc;  // for the config block
    std::optional<SourceSpec> spec;
};

ResolvedInput resolve_window(const Options& opts) {
    if (!opts.input_path.empty()) {
        return ResolvedInput{read_grid_file(opts.input_path),
                             json{{"input", opts.input_path}}, std::nullopt};
    }
    SourceSpec spec = opts.source_path.empty()
                          ? inline_source(opts)
                          : source_from_json_file(opts.source_path, opts.seed);
    if (std::holds_alternative<FromFileSource>(spec)) {
        Window w = generate_window(spec, 1, 1);
        return ResolvedInput{std::move(w), source_to_json(spec), spec};
    }
    if (opts.cols < 1 || opts.rows < 1) {
        throw DomainError("generated sources need --cols and --rows");
    }
    Window w = generate_window(spec, opts.cols, opts.rows);
    return ResolvedInput{std::move(w), source_to_json(spec), spec};
}

void write_output(const Options& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out);
    if (!out) {
        throw IoError("cannot open '" + opts.out + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("write failed for '" + opts.out + "'");
    }
}

json base_config(const Options& opts, const ResolvedInput& input) {
    json config{{"seed", opts.seed},
                {"threads", resolve_threads(opts)},
                {"source", input.source_desc}};
    if (opts.cols > 0) {
        config["cols"] = opts.cols;
        config["rows"] = opts.rows;
    }
    return config;
}

std::vector<std::string> source_warnings(const ResolvedInput& input,
                                         int cols) {
    std::vector<std::string> warnings;
    if (input.spec) {
        std::string w = sturmian_resolution_warning(*input.spec, cols);
        if (!w.empty()) warnings.push_back(std::move(w));
    }
    return warnings;
}

std::optional<int> source_p(const ResolvedInput& input) {
    if (input.spec) {
        if (const auto* s = std::get_if<TimesPqSource>(&*input.spec)) {
            return s->p;
        }
    }
    return std::nullopt;
}

std::optional<int> source_q(const ResolvedInput& input) {
    if (input.spec) {
        if (const auto* s = std::get_if<TimesPqSource>(&*input.spec)) {
            return s->q;
        }
    }
    return std::nullopt;
}

// ----- command handlers -----------------------------------------------------

int cmd_gen(const Options& opts) {
    ResolvedInput input = resolve_window(opts);
    std::ostringstream out;
    write_grid(out, input.window);
    write_output(opts, out.str());
    return 0;
}

int cmd_complexity(const Options& opts) {
    ResolvedInput input = resolve_window(opts);
    const Window& w = input.window;
    int k_max = opts.k_max > 0 ? opts.k_max : (w.height() == 1 ? 1 : opts.n_max);

    ComplexityTable table = k_max == 1 && w.height() == 1
                                ? ComplexityTable{}
                                : complexity_table(w, opts.n_max, k_max);
    std::optional<MorseHedlundResult> mh;
    if (k_max == 1) {
        auto P = complexity_1d(w, opts.n_max);
        mh = morse_hedlund_classify(P);
        if (w.height() == 1) {
            table.n_max = opts.n_max;
            table.k_max = 1;
            table.alphabet_size = w.alphabet().size();
            table.provenance = TableProvenance::Empirical;
            table.source = "window " + std::to_string(w.width()) + "x1";
            table.anchors = static_cast<std::uint64_t>(w.width() - opts.n_max + 1);
            table.values = P;
        }
    }

    json config = base_config(opts, input);
    config["command"] = "complexity";
    config["n_max"] = opts.n_max;
    config["k_max"] = k_max;
    config["format"] = opts.format.empty() ? "json" : opts.format;

    if (opts.format == "csv") {
        write_output(opts, table_csv(table));
    } else {
        write_output(opts, dump_report(complexity_report(
                               table, mh, config,
                               source_warnings(input, w.width()))));
    }
    return 0;
}

int cmd_periods(const Options& opts) {
    ResolvedInput input = resolve_window(opts);
    PeriodLattice lattice = period_vectors(
        input.window, opts.max_shift, opts.min_overlap, resolve_threads(opts));

    json config = base_config(opts, input);
    config["command"] = "periods";
    config["max_shift"] = opts.max_shift;
    config["min_overlap"] = opts.min_overlap;

    if (!opts.domain_out.empty() && lattice.rank == 2) {
        Pattern domain = fundamental_domain(input.window, lattice);
        std::vector<Symbol> cells(domain.symbols().begin(),
                                  domain.symbols().end());
        Window dw(input.window.alphabet(), Cell{0, 0},
                  domain.shape().width(), domain.shape().height(), cells);
        write_grid_file(opts.domain_out, dw);
    }

    write_output(opts, dump_report(periods_report(input.window, lattice,
                                                  config)));
    return 0;
}

int cmd_entropy(const Options& opts) {
    ResolvedInput input = resolve_window(opts);
    Direction dir = opts.direction == "vertical" ? Direction::Vertical
                                                 : Direction::Horizontal;
    if (opts.direction != "vertical" && opts.direction != "horizontal") {
        throw DomainError("direction must be horizontal or vertical");
    }
    EntropyEstimate estimate = directional_entropy_estimate(
        input.window, dir, opts.n, opts.m_max, opts.undersample_threshold);

    json config = base_config(opts, input);
    config["command"] = "entropy";
    config["direction"] = opts.direction;
    config["n"] = opts.n;
    config["m_max"] = opts.m_max;
    config["undersample_threshold"] = opts.undersample_threshold;
    config["format"] = opts.format.empty() ? "json" : opts.format;

    if (opts.format == "csv") {
        write_output(opts, entropy_csv(estimate));
    } else {
        write_output(opts,
                     dump_report(entropy_report(
                         estimate, config, source_p(input), source_q(input),
                         source_warnings(input, input.window.width()))));
    }
    return 0;
}

int cmd_fixed_points(const Options& opts) {
    if (opts.pp > 1'000'000 || opts.qq > 1'000'000) {
        throw DomainError("fixed-points supports p, q up to 10^6");
    }
    auto points = fixed_points(static_cast<int>(opts.pp),
                               static_cast<int>(opts.qq), opts.fi, opts.fj);
    json config{{"command", "fixed-points"},
                {"p", opts.pp},
                {"q", opts.qq},
                {"i", opts.fi},
                {"j", opts.fj}};
    if (opts.format == "csv") {
        std::ostringstream out;
        out << "index,num,den\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            out << i << ',' << big_numerator(points[i]).str() << ','
                << big_denominator(points[i]).str() << '\n';
        }
        write_output(opts, out.str());
    } else {
        json list = json::array();
        for (const BigRational& y : points) {
            list.push_back(json{{"num", big_numerator(y).str()},
                                {"den", big_denominator(y).str()}});
        }
        write_output(opts, dump_report(json{{"command", "fixed-points"},
                                            {"config", config},
                                            {"count", points.size()},
                                            {"points", list}}));
    }
    return 0;
}

int cmd_mulindep(const Options& opts) {
    bool independent = is_multiplicatively_independent(opts.pp, opts.qq);
    if (opts.format == "csv") {
        std::ostringstream out;
        out << "p,q,independent\n"
            << opts.pp << ',' << opts.qq << ',' << (independent ? 1 : 0)
            << '\n';
        write_output(opts, out.str());
    } else {
        write_output(opts,
                     dump_report(json{
                         {"command", "mulindep"},
                         {"p", opts.pp},
                         {"q", opts.qq},
                         {"independent", independent},
                         {"verdict",
                          independent ? "independent" : "dependent"}}));
    }
    return 0;
}

int cmd_gap_report(const Options& opts) {
    ResolvedInput input = resolve_window(opts);
    const Window& w = input.window;

    GapReportInputs in;
    in.table = complexity_table(w, opts.n_max, opts.n_max);
    in.classification = gap_classify(in.table, opts.plateau_steps);
    in.lattice = period_vectors(w, opts.max_shift, opts.min_overlap,
                                resolve_threads(opts));
    in.horizontal = directional_entropy_estimate(
        w, Direction::Horizontal, opts.n, opts.m_max,
        opts.undersample_threshold);
    in.vertical = directional_entropy_estimate(w, Direction::Vertical, opts.n,
                                               opts.m_max,
                                               opts.undersample_threshold);
    in.warnings = source_warnings(input, w.width());
    if (input.spec) {
        if (const auto* s = std::get_if<TimesPqSource>(&*input.spec)) {
            in.atomic_style_source =
                std::holds_alternative<RationalPoint>(s->point);
        }
        if (std::holds_alternative<PeriodicSource>(*input.spec)) {
            in.atomic_style_source = true;
        }
    }

    json config = base_config(opts, input);
    config["command"] = "gap-report";
    config["n_max"] = opts.n_max;
    config["k_max"] = opts.n_max;
    config["max_shift"] = opts.max_shift;
    config["min_overlap"] = opts.min_overlap;
    config["plateau_steps"] = opts.plateau_steps;
    config["entropy_n"] = opts.n;
    config["m_max"] = opts.m_max;
    config["undersample_threshold"] = opts.undersample_threshold;

    write_output(opts, dump_report(gap_report(in, config)));
    return 0;
}

void add_input_flags(CLI::App* cmd, Options& opts) {
    cmd->add_option("--in", opts.input_path, "grid file to analyze");
    cmd->add_option("--source", opts.source_path, "source spec JSON file");
    cmd->add_option("--kind", opts.kind,
                    "inline source kind: full-shift | periodic | sturmian | "
                    "sturmian-vertical | times-pq | from-file");
    cmd->add_option("--alphabet", opts.alphabet, "glyphs for full-shift");
    cmd->add_option("--alpha", opts.alpha, "sturmian slope a/b");
    cmd->add_option("--rho", opts.rho, "sturmian intercept a/b");
    cmd->add_option("--p", opts.p, "times-pq horizontal multiplier");
    cmd->add_option("--q", opts.q, "times-pq vertical multiplier");
    cmd->add_option("--point", opts.point,
                    "times-pq point: \"a/b\" or \"dyadic\"");
    cmd->add_option("--bits", opts.bits, "dyadic point bit budget");
    cmd->add_option("--partition", opts.partition,
                    "times-pq partition: half-interval | base-p-digit");
    cmd->add_option("--block-file", opts.block_file,
                    "periodic fundamental block grid file");
    cmd->add_option("--basis", opts.basis, "periodic basis \"a,b;c,d\"");
    cmd->add_option("--file", opts.file, "grid path for --kind from-file");
    cmd->add_option("--cols", opts.cols, "sample columns");
    cmd->add_option("--rows", opts.rows, "sample rows");
    cmd->add_option("--seed", opts.seed, "random seed (fixed default)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subshift-lab: complexity, periods, frequencies and entropy "
                 "of symbolic windows"};
    app.require_subcommand(1);
    Options opts;

    app.add_option("--threads", opts.threads,
                   "worker cap (default: SUBSHIFT_LAB_THREADS or 1)");

    CLI::App* gen = app.add_subcommand("gen", "generate a window grid");
    add_input_flags(gen, opts);
    gen->add_option("--out", opts.out, "output path (default stdout)");

    CLI::App* complexity =
        app.add_subcommand("complexity", "complexity table P(n,k)");
    add_input_flags(complexity, opts);
    complexity->add_option("--n-max", opts.n_max, "max pattern width");
    complexity->add_option("--k-max", opts.k_max,
                           "max pattern height (default: n-max, or 1 for "
                           "height-1 windows)");
    complexity->add_option("--format", opts.format, "json | csv");
    complexity->add_option("--out", opts.out, "output path");

    CLI::App* periods =
        app.add_subcommand("periods", "period vectors and lattice");
    add_input_flags(periods, opts);
    periods->add_option("--max-shift", opts.max_shift, "max |i|, |j| tested");
    periods->add_option("--min-overlap", opts.min_overlap,
                        "minimum overlap fraction");
    periods->add_option("--domain-out", opts.domain_out,
                        "write the fundamental domain grid here (rank 2)");
    periods->add_option("--out", opts.out, "output path");

    CLI::App* entropy =
        app.add_subcommand("entropy", "partition entropy curve H_m");
    add_input_flags(entropy, opts);
    entropy->add_option("--direction", opts.direction,
                        "horizontal | vertical");
    entropy->add_option("--n", opts.n, "transverse half-width");
    entropy->add_option("--m-max", opts.m_max, "refinement depth");
    entropy->add_option("--undersample-threshold", opts.undersample_threshold,
                        "cylinders/anchors ratio that flags the estimate");
    entropy->add_option("--format", opts.format, "json | csv");
    entropy->add_option("--out", opts.out, "output path");

    CLI::App* fixed =
        app.add_subcommand("fixed-points", "exact period-congruence solutions");
    fixed->add_option("p", opts.pp, "p >= 2")->required();
    fixed->add_option("q", opts.qq, "q >= 2")->required();
    fixed->add_option("i", opts.fi, "horizontal exponent")->required();
    fixed->add_option("j", opts.fj, "vertical exponent")->required();
    fixed->add_option("--format", opts.format, "json | csv");
    fixed->add_option("--out", opts.out, "output path");

    CLI::App* mulindep =
        app.add_subcommand("mulindep", "multiplicative independence check");
    mulindep->add_option("p", opts.pp, "p >= 2")->required();
    mulindep->add_option("q", opts.qq, "q >= 2")->required();
    mulindep->add_option("--format", opts.format, "json | csv");
    mulindep->add_option("--out", opts.out, "output path");

    CLI::App* gap = app.add_subcommand(
        "gap-report", "complexity + periods + entropy with consistency notes");
    add_input_flags(gap, opts);
    gap->add_option("--n-max", opts.n_max, "square table range");
    gap->add_option("--max-shift", opts.max_shift, "max |i|, |j| tested");
    gap->add_option("--min-overlap", opts.min_overlap,
                    "minimum overlap fraction");
    gap->add_option("--plateau-steps", opts.plateau_steps,
                    "stable diagonal steps for the bounded call (0: auto)");
    gap->add_option("--n", opts.n, "entropy transverse half-width");
    gap->add_option("--m-max", opts.m_max, "entropy refinement depth");
    gap->add_option("--undersample-threshold", opts.undersample_threshold,
                    "cylinders/anchors ratio that flags estimates");
    gap->add_option("--out", opts.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors
    }

    try {
        if (gen->parsed()) return cmd_gen(opts);
        if (complexity->parsed()) return cmd_complexity(opts);
        if (periods->parsed()) return cmd_periods(opts);
        if (entropy->parsed()) return cmd_entropy(opts);
        if (fixed->parsed()) return cmd_fixed_points(opts);
        if (mulindep->parsed()) return cmd_mulindep(opts);
        if (gap->parsed()) return cmd_gap_report(opts);
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
