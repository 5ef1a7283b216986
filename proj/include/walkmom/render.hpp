#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkmom/integer.hpp"

namespace walkmom {

// Reduced denominators of the non-integer entries in the first `rows` rows
// of the order-nu moment matrix; integer entries are not stored. Cells are
// kept sorted by (k, j).
class DenominatorGrid {
public:
    struct Cell {
        std::int64_t k = 0;
        std::int64_t j = 0;
        Integer denominator; // >= 2
    };

    DenominatorGrid(std::int64_t nu, std::int64_t rows, std::vector<Cell> cells);

    std::int64_t nu() const { return nu_; }
    std::int64_t rows() const { return rows_; }
    const std::vector<Cell>& cells() const { return cells_; }

    // Denominator at (k, j), or nullptr when the entry is an integer.
    const Integer* find(std::int64_t k, std::int64_t j) const;

private:
    std::int64_t nu_;
    std::int64_t rows_;
    std::vector<Cell> cells_;
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Maps exact reduced denominators to colors. Denominators missing from the
// table fall back to `known` when they divide the tightened bound for the
// grid's nu, and to `unknown` (black) otherwise — a black pixel means a
// denominator that no proven bound accounts for.
class Palette {
public:
    Palette() = default;

    void add(Integer denominator, Rgb color); // denominators must stay distinct
    std::optional<Rgb> lookup(const Integer& denominator) const;

    const std::vector<std::pair<Integer, Rgb>>& entries() const { return entries_; }
    Rgb fallback_known() const { return fallback_known_; }
    Rgb fallback_unknown() const { return fallback_unknown_; }
    void set_fallback_known(Rgb c) { fallback_known_ = c; }
    void set_fallback_unknown(Rgb c) { fallback_unknown_ = c; }

private:
    std::vector<std::pair<Integer, Rgb>> entries_;
    Rgb fallback_known_{128, 128, 128};
    Rgb fallback_unknown_{0, 0, 0};
};

// Palette used when no palette file is given: 2 red, 3 blue, 7 green, 9
// orange, and every other divisor (> 1) of the tightened bound gets a color
// from a fixed categorical table, assigned in ascending divisor order.
Palette default_palette(std::int64_t nu);

// Palette file format, one entry per line:
//   <denominator> <r> <g> <b>
//   known <r> <g> <b>
//   unknown <r> <g> <b>
// Blank lines and lines starting with '#' are ignored.
Palette parse_palette(std::string_view text);

// Exact denominators of all non-integer entries with k < rows. Every stored
// denominator is checked against the proven factorial-ratio bound; a
// violation aborts with arithmetic_integrity_error.
DenominatorGrid denominator_grid(std::int64_t nu, std::int64_t rows, unsigned threads = 0);

struct RenderStats {
    std::int64_t cells = 0;            // non-integer entries
    std::int64_t palette_hits = 0;     // colored via an exact palette entry
    std::int64_t known_fallback = 0;   // divides the tightened bound, not in palette
    std::int64_t unknown_fallback = 0; // escapes the tightened bound (black)
};

// Binary portable pixmap (P6, maxval 255), rows x rows, white background,
// one matrix entry per pixel: row k of the matrix is image row k (top-down),
// column j runs left to right. Byte-deterministic for fixed inputs.
std::vector<std::uint8_t> render_image(const DenominatorGrid& grid, const Palette& palette,
                                       RenderStats* stats = nullptr);

// "k,j,denominator" header plus one row per cell, sorted by (k, j).
std::string dump_grid_csv(const DenominatorGrid& grid);

} // namespace walkmom
