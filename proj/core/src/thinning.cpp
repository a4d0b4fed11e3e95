#include "glyphgeom/thinning.hpp"

#include <array>
#include <vector>

namespace glyphgeom {

namespace {

// Zhang-Suen neighbourhood, P2..P9 clockwise from north:
//   P9 P2 P3
//   P8 P1 P4
//   P7 P6 P5
std::array<int, 8> ring(const BitGrid& img, int r, int c) {
    return {
        img.at_or_bg(r - 1, c),     // P2
        img.at_or_bg(r - 1, c + 1), // P3
        img.at_or_bg(r, c + 1),     // P4
        img.at_or_bg(r + 1, c + 1), // P5
        img.at_or_bg(r + 1, c),     // P6
        img.at_or_bg(r + 1, c - 1), // P7
        img.at_or_bg(r, c - 1),     // P8
        img.at_or_bg(r - 1, c - 1), // P9
    };
}

int neighbour_sum(const std::array<int, 8>& p) {
    int b = 0;
    for (int v : p) b += v;
    return b;
}

// 0->1 transitions around the ring (crossing number A).
int transitions(const std::array<int, 8>& p) {
    int a = 0;
    for (int i = 0; i < 8; ++i)
        if (p[i] == 0 && p[(i + 1) % 8] == 1) ++a;
    return a;
}

bool marked_for_deletion(const BitGrid& img, int r, int c, int subiter) {
    const auto p = ring(img, r, c);
    const int b = neighbour_sum(p);
    if (b < 2 || b > 6) return false;
    if (transitions(p) != 1) return false;
    // p[0]=P2, p[2]=P4, p[4]=P6, p[6]=P8
    if (subiter == 0) {
        if (p[0] * p[2] * p[4] != 0) return false;
        if (p[2] * p[4] * p[6] != 0) return false;
    } else {
        if (p[0] * p[2] * p[6] != 0) return false;
        if (p[0] * p[4] * p[6] != 0) return false;
    }
    return true;
}

// Re-checked on the partially updated image right before deleting:
// still locally simple and not an endpoint.
bool still_safe(const BitGrid& img, int r, int c) {
    const auto p = ring(img, r, c);
    const int b = neighbour_sum(p);
    return b >= 2 && transitions(p) == 1;
}

} // namespace

BitGrid thin(const BitGrid& img) {
    BitGrid cur = img;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int subiter = 0; subiter < 2; ++subiter) {
            std::vector<Pixel> marks;
            for (int r = 0; r < cur.rows(); ++r)
                for (int c = 0; c < cur.cols(); ++c)
                    if (cur.at(r, c) && marked_for_deletion(cur, r, c, subiter))
                        marks.push_back({r, c});
            for (const Pixel& p : marks) {
                if (!still_safe(cur, p.row, p.col)) continue;
                cur.set(p, false);
                changed = true;
            }
        }
    }
    return cur;
}

} // namespace glyphgeom
