#include "glyphgeom/geometry.hpp"

#include "glyphgeom/errors.hpp"

namespace glyphgeom {

BitGrid universe_of_discourse(const BitGrid& img) {
    int rmin = img.rows(), rmax = -1, cmin = img.cols(), cmax = -1;
    for (int r = 0; r < img.rows(); ++r)
        for (int c = 0; c < img.cols(); ++c)
            if (img.at(r, c)) {
                if (r < rmin) rmin = r;
                if (r > rmax) rmax = r;
                if (c < cmin) cmin = c;
                if (c > cmax) cmax = c;
            }
    if (rmax < 0) throw DomainError("empty skeleton");

    BitGrid out(rmax - rmin + 1, cmax - cmin + 1);
    for (int r = rmin; r <= rmax; ++r)
        for (int c = cmin; c <= cmax; ++c)
            if (img.at(r, c)) out.set(r - rmin, c - cmin, true);
    return out;
}

namespace {

Zone make_zone(const BitGrid& img, int r0, int r1, int c0, int c1) {
    Zone z{r0, r1, c0, c1, BitGrid(r1 - r0, c1 - c0)};
    for (int r = r0; r < r1; ++r)
        for (int c = c0; c < c1; ++c)
            if (img.at(r, c)) z.grid.set(r - r0, c - c0, true);
    return z;
}

int boundary(int i, int n) { return int(long(i) * n / 3); }

} // namespace

ZoneSet zone(const BitGrid& img, ZoneScheme scheme) {
    ZoneSet zs{scheme, {}};
    if (scheme == ZoneScheme::grid3x3) {
        zs.zones.reserve(9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                zs.zones.push_back(make_zone(img, boundary(i, img.rows()),
                                             boundary(i + 1, img.rows()),
                                             boundary(j, img.cols()),
                                             boundary(j + 1, img.cols())));
    } else {
        zs.zones.reserve(3);
        for (int i = 0; i < 3; ++i)
            zs.zones.push_back(make_zone(img, boundary(i, img.rows()),
                                         boundary(i + 1, img.rows()), 0, img.cols()));
    }
    return zs;
}

} // namespace glyphgeom
