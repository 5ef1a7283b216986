#include "walkmom/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "walkmom/denominators.hpp"
#include "walkmom/errors.hpp"
#include "walkmom/numtheory.hpp"
#include "walkmom/parallel.hpp"

namespace walkmom {

DenominatorGrid::DenominatorGrid(std::int64_t nu, std::int64_t rows, std::vector<Cell> cells)
    : nu_(nu), rows_(rows), cells_(std::move(cells)) {
    if (nu < 0 || rows < 1) throw std::domain_error("DenominatorGrid: need nu >= 0, rows >= 1");
    for (const Cell& c : cells_) {
        if (c.k < 0 || c.k >= rows || c.j < 0 || c.j > c.k) {
            throw std::domain_error("DenominatorGrid: cell outside the lower triangle");
        }
        if (c.denominator < Integer(2)) {
            throw std::domain_error("DenominatorGrid: stored denominators must be >= 2");
        }
    }
}

const Integer* DenominatorGrid::find(std::int64_t k, std::int64_t j) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), std::pair(k, j),
                                     [](const Cell& c, const std::pair<std::int64_t, std::int64_t>& key) {
                                         return std::pair(c.k, c.j) < key;
                                     });
    if (it != cells_.end() && it->k == k && it->j == j) return &it->denominator;
    return nullptr;
}

void Palette::add(Integer denominator, Rgb color) {
    for (const auto& [d, c] : entries_) {
        if (d == denominator) {
            throw std::domain_error("Palette: duplicate denominator " + denominator.str());
        }
    }
    entries_.emplace_back(std::move(denominator), color);
}

std::optional<Rgb> Palette::lookup(const Integer& denominator) const {
    for (const auto& [d, c] : entries_) {
        if (d == denominator) return c;
    }
    return std::nullopt;
}

namespace {

// Categorical colors for divisors beyond the four canonical ones; cycled in
// ascending divisor order.
constexpr Rgb kAutoColors[] = {
    {31, 119, 180}, {255, 127, 14},  {44, 160, 44},   {214, 39, 40},   {148, 103, 189},
    {140, 86, 75},  {227, 119, 194}, {188, 189, 34},  {23, 190, 207},  {174, 199, 232},
    {255, 187, 120}, {152, 223, 138}, {255, 152, 150}, {197, 176, 213}, {196, 156, 148},
    {247, 182, 210}, {219, 219, 141}, {158, 218, 229}, {199, 199, 199}, {140, 162, 82},
};

std::vector<Integer> divisors_of(const Factorization& f, std::size_t cap) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& e : f.entries()) {
        const std::size_t base = divs.size();
        if (base * static_cast<std::size_t>(e.exponent + 1) > cap) return {};
        Integer pw = 1;
        for (std::int64_t x = 1; x <= e.exponent; ++x) {
            pw *= e.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

Palette default_palette(std::int64_t nu) {
    Palette pal;
    const Integer tight = nu >= 1 ? tightened_bound(nu).value() : Integer(1);
    const struct {
        long long den;
        Rgb color;
    } canonical[] = {
        {2, {255, 0, 0}},   // red
        {3, {0, 0, 255}},   // blue
        {7, {0, 128, 0}},   // green
        {9, {255, 165, 0}}, // orange
    };
    for (const auto& c : canonical) {
        if (Integer(c.den).divides(tight)) pal.add(Integer(c.den), c.color);
    }
    if (nu >= 1) {
        std::size_t next = 0;
        for (const Integer& d : divisors_of(tightened_bound(nu), 4096)) {
            if (d.is_one() || pal.lookup(d)) continue;
            pal.add(d, kAutoColors[next % std::size(kAutoColors)]);
            ++next;
        }
    }
    return pal;
}

Palette parse_palette(std::string_view text) {
    Palette pal;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string den;
        int r = -1, g = -1, b = -1;
        ls >> den >> r >> g >> b;
        if (ls.fail() || r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255) {
            throw std::domain_error("palette: bad line " + std::to_string(lineno) + ": " + line);
        }
        const Rgb color{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                        static_cast<std::uint8_t>(b)};
        if (den == "known") {
            pal.set_fallback_known(color);
        } else if (den == "unknown") {
            pal.set_fallback_unknown(color);
        } else {
            Integer d(den);
            if (d < Integer(2)) throw std::domain_error("palette: denominator must be >= 2");
            pal.add(std::move(d), color);
        }
    }
    return pal;
}

DenominatorGrid denominator_grid(std::int64_t nu, std::int64_t rows, unsigned threads) {
    if (nu < 0 || rows < 1) throw std::domain_error("denominator_grid: need nu >= 0, rows >= 1");
    std::vector<DenominatorGrid::Cell> cells;
    for (const DenCell& c : denominator_cells(nu, rows, threads)) {
        cells.push_back({c.k, c.j, c.den});
    }
    return DenominatorGrid(nu, rows, std::move(cells));
}

std::vector<std::uint8_t> render_image(const DenominatorGrid& grid, const Palette& palette,
                                       RenderStats* stats) {
    const std::int64_t n = grid.rows();
    const Integer tight =
        grid.nu() >= 1 ? tightened_bound(grid.nu()).value() : Integer(1);

    std::string header = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.size() + static_cast<std::size_t>(n) * n * 3, 0xFF);
    std::copy(header.begin(), header.end(), bytes.begin());

    RenderStats local;
    for (const auto& cell : grid.cells()) {
        Rgb color;
        if (auto hit = palette.lookup(cell.denominator)) {
            color = *hit;
            ++local.palette_hits;
        } else if (cell.denominator.divides(tight)) {
            color = palette.fallback_known();
            ++local.known_fallback;
        } else {
            color = palette.fallback_unknown();
            ++local.unknown_fallback;
        }
        const std::size_t at = header.size() + 3 * static_cast<std::size_t>(cell.k * n + cell.j);
        bytes[at] = color.r;
        bytes[at + 1] = color.g;
        bytes[at + 2] = color.b;
    }
    local.cells = static_cast<std::int64_t>(grid.cells().size());
    if (stats) *stats = local;
    return bytes;
}

std::string dump_grid_csv(const DenominatorGrid& grid) {
    std::string out = "k,j,denominator\n";
    for (const auto& cell : grid.cells()) {
        out += std::to_string(cell.k);
        out += ',';
        out += std::to_string(cell.j);
        out += ',';
        out += cell.denominator.str();
        out += '\n';
    }
    return out;
}

} // namespace walkmom
