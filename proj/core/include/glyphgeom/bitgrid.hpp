#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace glyphgeom {

/// Grid coordinate, row-major, 0-based. Row 0 is the top row.
/// Printed output (debug dumps, diagnostics) uses the 1-based
/// convention where the top-left pixel is (1,1).
struct Pixel {
    int row = 0;
    int col = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
    friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// Rectangular binary raster. Immutable in spirit: the pipeline
/// treats grids as values and never mutates one after it is built.
class BitGrid {
public:
    BitGrid() = default;
    BitGrid(int rows, int cols) : rows_(rows), cols_(cols), cells_(size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty_extent() const { return rows_ == 0 || cols_ == 0; }

    bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }
    bool in_bounds(Pixel p) const { return in_bounds(p.row, p.col); }

    bool at(int r, int c) const { return cells_[size_t(r) * cols_ + c] != 0; }
    bool at(Pixel p) const { return at(p.row, p.col); }
    void set(int r, int c, bool v) { cells_[size_t(r) * cols_ + c] = v ? 1 : 0; }
    void set(Pixel p, bool v) { set(p.row, p.col, v); }

    /// Foreground test that tolerates out-of-range coordinates.
    bool at_or_bg(int r, int c) const { return in_bounds(r, c) && at(r, c); }

    int foreground_count() const {
        int n = 0;
        for (uint8_t v : cells_) n += v;
        return n;
    }

    std::vector<Pixel> foreground_pixels() const {
        std::vector<Pixel> out;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) out.push_back({r, c});
        return out;
    }

    friend bool operator==(const BitGrid&, const BitGrid&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> cells_;
};

/// 8-bit grayscale raster as produced by PGM parsing. Values are
/// rescaled to 0..255 when the file's maxval differs.
class GrayGrid {
public:
    GrayGrid() = default;
    GrayGrid(int rows, int cols) : rows_(rows), cols_(cols), cells_(size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return cells_[size_t(r) * cols_ + c]; }
    void set(int r, int c, uint8_t v) { cells_[size_t(r) * cols_ + c] = v; }

    friend bool operator==(const GrayGrid&, const GrayGrid&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> cells_;
};

/// Copy of `img` with extra background rows/columns on each side.
BitGrid pad(const BitGrid& img, int top, int bottom, int left, int right);

} // namespace glyphgeom

template <>
struct std::hash<glyphgeom::Pixel> {
    size_t operator()(const glyphgeom::Pixel& p) const noexcept {
        return std::hash<long long>()((long long(p.row) << 32) ^ (unsigned int)p.col);
    }
};
