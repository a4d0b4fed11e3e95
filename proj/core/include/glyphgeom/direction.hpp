#pragma once

#include <array>
#include <cassert>

#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

/// Clockwise direction codes around a centre pixel, starting from the
/// pixel directly below it:
///
///   4 5 6
///   3 C 7
///   2 1 8
///
/// so 1=S, 2=SW, 3=W, 4=NW, 5=N, 6=NE, 7=E, 8=SE.
/// kDirectionDelta[code - 1] is the (row, col) step for a code.
inline constexpr std::array<Pixel, 8> kDirectionDelta = {{
    {1, 0},   // 1 S
    {1, -1},  // 2 SW
    {0, -1},  // 3 W
    {-1, -1}, // 4 NW
    {-1, 0},  // 5 N
    {-1, 1},  // 6 NE
    {0, 1},   // 7 E
    {1, 1},   // 8 SE
}};

inline Pixel step(Pixel p, int code) {
    const Pixel d = kDirectionDelta[size_t(code - 1)];
    return {p.row + d.row, p.col + d.col};
}

/// Step code for a move between 8-adjacent pixels.
inline int direction_code(Pixel from, Pixel to) {
    const int dr = to.row - from.row;
    const int dc = to.col - from.col;
    for (int code = 1; code <= 8; ++code) {
        const Pixel d = kDirectionDelta[size_t(code - 1)];
        if (d.row == dr && d.col == dc) return code;
    }
    assert(false && "pixels are not 8-adjacent");
    return 0;
}

/// Code of the opposite direction (1<->5, 2<->6, 3<->7, 4<->8).
inline int opposite_code(int code) { return (code + 3) % 8 + 1; }

/// Direct neighbours share an edge with the centre (codes 1,3,5,7);
/// the rest are diagonal.
inline bool is_direct_code(int code) { return code % 2 == 1; }

} // namespace glyphgeom
