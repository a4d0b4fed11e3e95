#pragma once

#include <vector>

#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

enum class ZoneScheme { grid3x3, horizontal3 };

/// One zone of a partition: half-open row/col ranges into the source
/// grid plus the zone's own copy of the covered cells. Ranges may be
/// empty for sources narrower than 3 pixels along an axis.
struct Zone {
    int row_begin = 0;
    int row_end = 0;
    int col_begin = 0;
    int col_end = 0;
    BitGrid grid;

    int rows() const { return row_end - row_begin; }
    int cols() const { return col_end - col_begin; }
};

/// grid3x3: 9 zones in row-major order. horizontal3: 3 full-width
/// strips top to bottom. Zones are disjoint and cover the source.
struct ZoneSet {
    ZoneScheme scheme;
    std::vector<Zone> zones;
};

/// Minimal bounding-box crop around the foreground ("shortest matrix
/// that fits the skeleton"). Throws DomainError("empty skeleton") if
/// there is no foreground.
BitGrid universe_of_discourse(const BitGrid& img);

/// Partition boundaries sit at floor(i*n/3), so later zones absorb
/// the remainder and extents differ by at most one pixel.
ZoneSet zone(const BitGrid& img, ZoneScheme scheme);

} // namespace glyphgeom
