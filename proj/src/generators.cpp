#include "subshift/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "subshift/periodicity.hpp"

namespace subshift {

namespace {

constexpr char kDigitGlyphs[] =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

std::vector<std::pair<long long, int>> prime_signature(long long n) {
    std::vector<std::pair<long long, int>> factors;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

int ceil_log2(long long n) {
    int bits = 0;
    long long v = 1;
    while (v < n) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

BigInt random_bits(std::mt19937_64& rng, int bits) {
    BigInt v = 0;
    int produced = 0;
    while (produced < bits) {
        int take = std::min(64, bits - produced);
        std::uint64_t word = rng();
        if (take < 64) word >>= (64 - take);
        v <<= take;
        v |= word;
        produced += take;
    }
    return v;
}

// Uniform integer in [0, bound) by rejection on whole 64-bit blocks.
BigInt random_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    int bits = 0;
    BigInt v = 1;
    while (v < bound) {
        v <<= 1;
        ++bits;
    }
    for (;;) {
        BigInt candidate = random_bits(rng, bits);
        if (candidate < bound) return candidate;
    }
}

// Exact point as numerator over a positive denominator, 0 <= num < den.
struct ExactPoint {
    BigInt num;
    BigInt den;
};

ExactPoint resolve_point(const PointSpec& point) {
    if (const auto* dyadic = std::get_if<DyadicPoint>(&point)) {
        if (dyadic->bits < 64) {
            throw DomainError("dyadic point needs at least 64 bits, got " +
                              std::to_string(dyadic->bits));
        }
        std::mt19937_64 rng(dyadic->seed);
        ExactPoint p;
        p.num = random_bits(rng, dyadic->bits);
        p.den = BigInt(1) << dyadic->bits;
        return p;
    }
    const auto& rational = std::get<RationalPoint>(point);
    if (rational.value < 0 || rational.value >= 1) {
        throw DomainError("rational point must lie in [0, 1), got " +
                          rational_to_string(rational.value));
    }
    return ExactPoint{big_numerator(rational.value),
                      big_denominator(rational.value)};
}

void validate_times_pq(const TimesPqSource& spec) {
    if (spec.p < 2 || spec.q < 2) {
        throw DomainError("times-pq maps need p, q >= 2");
    }
    if (!is_multiplicatively_independent(spec.p, spec.q)) {
        throw DomainError("p = " + std::to_string(spec.p) + " and q = " +
                          std::to_string(spec.q) +
                          " are multiplicatively dependent");
    }
}

int partition_size(const TimesPqSource& spec) {
    return spec.partition == PartitionKind::HalfInterval ? 2 : spec.p;
}

Alphabet partition_alphabet(const TimesPqSource& spec) {
    int size = partition_size(spec);
    if (size > 62) {
        throw DomainError("base-p digit partition supports p <= 62");
    }
    return Alphabet(std::string(kDigitGlyphs, static_cast<std::size_t>(size)));
}

// Symbol classifier against precomputed interval thresholds: symbol =
// #{t in thresholds : num >= t}.
struct PartitionThresholds {
    std::vector<BigInt> cuts;

    static PartitionThresholds make(const TimesPqSource& spec,
                                    const BigInt& den) {
        PartitionThresholds t;
        if (spec.partition == PartitionKind::HalfInterval) {
            t.cuts.push_back((den + 1) / 2);  // num >= ceil(den/2) iff y >= 1/2
        } else {
            for (int i = 1; i < spec.p; ++i) {
                // floor(p y) >= i iff num >= ceil(i * den / p)
                t.cuts.push_back((BigInt(i) * den + spec.p - 1) / spec.p);
            }
        }
        return t;
    }

    Symbol classify(const BigInt& num) const {
        Symbol s = 0;
        for (const BigInt& cut : cuts) {
            if (num >= cut) ++s;
        }
        return s;
    }
};

Window tile_periodic(const PeriodicSource& spec, int cols, int rows) {
    std::array<Cell, 2> raw{spec.basis0, spec.basis1};
    LatticeBasis basis = lattice_basis(raw);
    if (basis.rank != 2) {
        throw DomainError("periodic source basis vectors are linearly "
                          "dependent");
    }
    const int a = basis.basis[0].x;
    const int b = basis.basis[0].y;
    const int c = basis.basis[1].y;
    if (!spec.block.shape().is_rect() || spec.block.shape().width() != a ||
        spec.block.shape().height() != c) {
        throw DomainError("periodic source block must be a " +
                          std::to_string(a) + "x" + std::to_string(c) +
                          " rectangle (the fundamental domain of its basis), "
                          "got " + std::to_string(spec.block.shape().width()) +
                          "x" + std::to_string(spec.block.shape().height()));
    }
    for (Symbol s : spec.block.symbols()) {
        if (s >= spec.alphabet.size()) {
            throw DomainError("periodic block symbol outside alphabet");
        }
    }
    std::vector<Symbol> cells(static_cast<std::size_t>(cols) * rows);
    for (int y = 0; y < rows; ++y) {
        for (int x = 0; x < cols; ++x) {
            long long m = floor_div(static_cast<long long>(x), a);
            int rx = static_cast<int>(x - m * a);
            long long ry = y - m * b;
            ry -= floor_div(ry, static_cast<long long>(c)) * c;
            cells[static_cast<std::size_t>(y) * cols + x] =
                spec.block.at(rx, static_cast<int>(ry));
        }
    }
    return Window(spec.alphabet, Cell{0, 0}, cols, rows, std::move(cells));
}

void check_dyadic_budget(const TimesPqSource& spec, int max_i, int max_j) {
    const auto* dyadic = std::get_if<DyadicPoint>(&spec.point);
    if (!dyadic) return;
    int required = std::max(0, max_i) * ceil_log2(spec.p) +
                   std::max(0, max_j) * ceil_log2(spec.q) + 64;
    if (dyadic->bits < required) {
        throw PrecisionError("dyadic point has " + std::to_string(dyadic->bits) +
                             " bits; this window reads up to " +
                             std::to_string(required) +
                             " bits (orbit depth plus 64-bit guard)");
    }
}

}  // namespace

bool is_multiplicatively_independent(long long p, long long q) {
    if (p < 2 || q < 2) {
        throw DomainError("multiplicative independence is defined for "
                          "integers >= 2");
    }
    auto fp = prime_signature(p);
    auto fq = prime_signature(q);
    if (fp.size() != fq.size()) return true;
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (fp[i].first != fq[i].first) return true;
    }
    // Same primes: dependent iff the exponent vectors are parallel.
    for (std::size_t i = 1; i < fp.size(); ++i) {
        if (static_cast<long long>(fp[0].second) * fq[i].second !=
            static_cast<long long>(fq[0].second) * fp[i].second) {
            return true;
        }
    }
    return false;
}

std::vector<Symbol> sturmian_word(const BigRational& alpha,
                                  const BigRational& rho, int length) {
    if (!(alpha > 0 && alpha < 1)) {
        throw DomainError("sturmian slope must lie strictly in (0, 1), got " +
                          rational_to_string(alpha));
    }
    if (!(rho >= 0 && rho < 1)) {
        throw DomainError("sturmian intercept must lie in [0, 1), got " +
                          rational_to_string(rho));
    }
    if (length < 1) {
        throw DomainError("sturmian word length must be positive");
    }
    const BigInt a = big_numerator(alpha), b = big_denominator(alpha);
    const BigInt r = big_numerator(rho), s = big_denominator(rho);
    // n alpha + rho = (n a s + r b) / (b s); floors via integer division.
    const BigInt den = b * s;
    const BigInt rb = r * b;
    const BigInt as = a * s;
    std::vector<Symbol> word(static_cast<std::size_t>(length));
    BigInt prev = rb / den;  // floor at n = 0
    BigInt acc = rb;
    for (int n = 0; n < length; ++n) {
        acc += as;
        BigInt next = acc / den;
        word[static_cast<std::size_t>(n)] = static_cast<Symbol>(next - prev);
        prev = next;
    }
    return word;
}

Window make_row_window(Alphabet alphabet, std::span<const Symbol> seq) {
    return Window(std::move(alphabet), Cell{0, 0},
                  static_cast<int>(seq.size()), 1,
                  std::vector<Symbol>(seq.begin(), seq.end()));
}

Window vertical_extension(const Window& row, int height) {
    if (row.height() != 1) {
        throw DomainError("vertical extension expects a height-1 window");
    }
    if (height < 1) {
        throw DomainError("vertical extension height must be positive");
    }
    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(row.width()) * height);
    for (int j = 0; j < height; ++j) {
        cells.insert(cells.end(), row.raw().begin(), row.raw().end());
    }
    return Window(row.alphabet(), row.origin(), row.width(), height,
                  std::move(cells));
}

BigRational OrbitGrid::value(int i, int j) const {
    if (!contains(i, j)) {
        throw DomainError("orbit grid access (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside rectangle");
    }
    return BigRational(num_at(i, j), denom);
}

int required_dyadic_bits(int p, int q, int cols, int rows) {
    return cols * ceil_log2(p) + rows * ceil_log2(q) + 64;
}

namespace {

OrbitGrid forward_grid(const TimesPqSource& spec, const ExactPoint& corner,
                       Cell origin, int cols, int rows) {
    OrbitGrid grid;
    grid.p = spec.p;
    grid.q = spec.q;
    grid.origin = origin;
    grid.width = cols;
    grid.height = rows;
    grid.denom = corner.den;
    grid.nums.reserve(static_cast<std::size_t>(cols) * rows);
    BigInt row_start = corner.num;
    for (int j = 0; j < rows; ++j) {
        BigInt v = row_start;
        for (int i = 0; i < cols; ++i) {
            grid.nums.push_back(v);
            if (i + 1 < cols) {
                mul_small_mod(v, static_cast<unsigned long>(spec.p), grid.denom);
            }
        }
        if (j + 1 < rows) {
            mul_small_mod(row_start, static_cast<unsigned long>(spec.q),
                          grid.denom);
        }
    }
    return grid;
}

}  // namespace

std::pair<OrbitGrid, Window> orbit_window(const TimesPqSource& spec, int cols,
                                          int rows) {
    validate_times_pq(spec);
    if (cols < 1 || rows < 1) {
        throw DomainError("orbit window dims must be positive");
    }
    check_dyadic_budget(spec, cols, rows);
    ExactPoint x = resolve_point(spec.point);
    OrbitGrid grid = forward_grid(spec, x, Cell{0, 0}, cols, rows);
    Window window = window_from_grid(grid, spec.partition);
    return {std::move(grid), std::move(window)};
}

Window orbit_coding_window(const TimesPqSource& spec, int cols, int rows) {
    validate_times_pq(spec);
    if (cols < 1 || rows < 1) {
        throw DomainError("orbit window dims must be positive");
    }
    check_dyadic_budget(spec, cols, rows);
    ExactPoint x = resolve_point(spec.point);
    PartitionThresholds thresholds = PartitionThresholds::make(spec, x.den);

    std::vector<Symbol> cells(static_cast<std::size_t>(cols) * rows);
    BigInt row_start = x.num;
    for (int j = 0; j < rows; ++j) {
        BigInt v = row_start;
        Symbol* out = cells.data() + static_cast<std::size_t>(j) * cols;
        for (int i = 0; i < cols; ++i) {
            out[i] = thresholds.classify(v);
            if (i + 1 < cols) {
                mul_small_mod(v, static_cast<unsigned long>(spec.p), x.den);
            }
        }
        if (j + 1 < rows) {
            mul_small_mod(row_start, static_cast<unsigned long>(spec.q), x.den);
        }
    }
    return Window(partition_alphabet(spec), Cell{0, 0}, cols, rows,
                  std::move(cells));
}

OrbitGrid natural_extension_window(const TimesPqSource& spec, int i_min,
                                   int j_min, int cols, int rows,
                                   std::uint64_t seed) {
    validate_times_pq(spec);
    if (i_min > 0 || j_min > 0) {
        throw DomainError("natural extension corner must satisfy "
                          "i_min <= 0 and j_min <= 0");
    }
    if (cols < 1 || rows < 1) {
        throw DomainError("natural extension dims must be positive");
    }
    if (i_min + cols <= 0 || j_min + rows <= 0) {
        throw DomainError("natural extension rectangle must contain (0, 0)");
    }
    check_dyadic_budget(spec, i_min + cols - 1, j_min + rows - 1);

    ExactPoint x = resolve_point(spec.point);
    // Scale factor back to the rectangle corner: P = p^|i_min| q^|j_min|.
    BigInt scale = pow_big(spec.p, -i_min) * pow_big(spec.q, -j_min);
    std::mt19937_64 rng(seed);
    BigInt preimage = random_below(rng, scale);
    // Corner value y0 = (x + m) / P; then value(i, j) =
    // p^(i - i_min) q^(j - j_min) y0 mod 1 and value(0, 0) = (x + m) mod 1 = x.
    ExactPoint corner;
    corner.num = x.num + preimage * x.den;
    corner.den = x.den * scale;
    return forward_grid(spec, corner, Cell{i_min, j_min}, cols, rows);
}

Window window_from_grid(const OrbitGrid& grid, PartitionKind partition) {
    TimesPqSource probe;
    probe.p = grid.p;
    probe.q = grid.q;
    probe.partition = partition;
    PartitionThresholds thresholds = PartitionThresholds::make(probe, grid.denom);
    std::vector<Symbol> cells;
    cells.reserve(grid.nums.size());
    for (const BigInt& num : grid.nums) {
        cells.push_back(thresholds.classify(num));
    }
    return Window(partition_alphabet(probe), grid.origin, grid.width,
                  grid.height, std::move(cells));
}

std::vector<BigRational> atomic_orbit(int p, int q, const BigRational& x) {
    if (p < 2 || q < 2) {
        throw DomainError("atomic orbit needs p, q >= 2");
    }
    if (x < 0 || x >= 1) {
        throw DomainError("atomic orbit point must lie in [0, 1)");
    }
    BigInt den = big_denominator(x);
    if (gcd(den, BigInt(p) * q) != 1) {
        throw DomainError("atomic orbit needs a denominator coprime to p*q; "
                          "got " + rational_to_string(x));
    }
    // Orbit lives in {m / den}: track numerators.
    std::set<BigInt> seen;
    std::vector<BigInt> frontier{big_numerator(x)};
    seen.insert(big_numerator(x));
    while (!frontier.empty()) {
        BigInt n = frontier.back();
        frontier.pop_back();
        for (int mult : {p, q}) {
            BigInt next = (n * mult) % den;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    std::vector<BigRational> orbit;
    orbit.reserve(seen.size());
    for (const BigInt& n : seen) orbit.emplace_back(n, den);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<BigRational> fixed_points(int p, int q, int i, int j) {
    if (p < 2 || q < 2) {
        throw DomainError("fixed points need p, q >= 2");
    }
    if (i == 0 && j == 0) {
        throw DomainError("fixed points need (i, j) != (0, 0)");
    }
    if (!is_multiplicatively_independent(p, q)) {
        throw DomainError("p = " + std::to_string(p) + " and q = " +
                          std::to_string(q) +
                          " are multiplicatively dependent");
    }
    BigInt D;
    if (static_cast<long long>(i) * j >= 0) {
        // Same signs: flip to i, j >= 0; (p^i q^j - 1) y must be an integer.
        int ai = std::abs(i), aj = std::abs(j);
        D = pow_big(p, ai) * pow_big(q, aj) - 1;
    } else {
        // Mixed signs: normalize to i < 0 < j; p^|i| y = q^j y (mod 1).
        int ai = std::abs(i), aj = std::abs(j);
        D = pow_big(p, ai) - pow_big(q, aj);
        if (D < 0) D = -D;
    }
    if (D > 100'000'000) {
        throw DomainError("fixed point set of size " + D.str() +
                          " is too large to enumerate");
    }
    std::vector<BigRational> points;
    points.reserve(D.convert_to<std::size_t>());
    for (BigInt m = 0; m < D; ++m) {
        points.emplace_back(m, D);
    }
    return points;
}

Window generate_window(const SourceSpec& spec, int cols, int rows) {
    if (!std::holds_alternative<FromFileSource>(spec) && (cols < 1 || rows < 1)) {
        throw DomainError("sample dims must be positive");
    }
    return std::visit(
        [&](const auto& s) -> Window {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullShiftSource>) {
                std::mt19937_64 rng(s.seed);
                std::vector<Symbol> cells(static_cast<std::size_t>(cols) * rows);
                const auto size = static_cast<std::uint64_t>(s.alphabet.size());
                for (Symbol& c : cells) {
                    c = static_cast<Symbol>(rng() % size);
                }
                return Window(s.alphabet, Cell{0, 0}, cols, rows,
                              std::move(cells));
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                return tile_periodic(s, cols, rows);
            } else if constexpr (std::is_same_v<T, SturmianSource>) {
                auto word = sturmian_word(s.alpha, s.rho, cols);
                Window row = make_row_window(binary_alphabet(), word);
                return rows == 1 ? row : vertical_extension(row, rows);
            } else if constexpr (std::is_same_v<T, SturmianVerticalSource>) {
                auto word = sturmian_word(s.alpha, s.rho, cols);
                return vertical_extension(make_row_window(binary_alphabet(), word),
                                          rows);
            } else if constexpr (std::is_same_v<T, TimesPqSource>) {
                return orbit_coding_window(s, cols, rows);
            } else {
                static_assert(std::is_same_v<T, FromFileSource>);
                return read_grid_file(s.path);
            }
        },
        spec);
}

std::string source_kind(const SourceSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullShiftSource>) {
                return "full-shift";
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                return "periodic";
            } else if constexpr (std::is_same_v<T, SturmianSource>) {
                return "sturmian";
            } else if constexpr (std::is_same_v<T, SturmianVerticalSource>) {
                return "sturmian-vertical";
            } else if constexpr (std::is_same_v<T, TimesPqSource>) {
                return "times-pq";
            } else {
                return "from-file";
            }
        },
        spec);
}

std::string sturmian_resolution_warning(const SourceSpec& spec, int cols) {
    const BigRational* alpha = nullptr;
    if (const auto* s = std::get_if<SturmianSource>(&spec)) alpha = &s->alpha;
    if (const auto* s = std::get_if<SturmianVerticalSource>(&spec)) {
        alpha = &s->alpha;
    }
    if (!alpha) return {};
    if (big_denominator(*alpha) > cols) return {};
    return "sturmian slope denominator " +
           big_denominator(*alpha).str() + " does not exceed the sampled "
           "length " + std::to_string(cols) +
           "; the word is periodic at this scale";
}

}  // namespace subshift
