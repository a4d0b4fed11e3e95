#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

BitGrid pad(const BitGrid& img, int top, int bottom, int left, int right) {
    BitGrid out(img.rows() + top + bottom, img.cols() + left + right);
    for (int r = 0; r < img.rows(); ++r)
        for (int c = 0; c < img.cols(); ++c)
            if (img.at(r, c)) out.set(r + top, c + left, true);
    return out;
}

} // namespace glyphgeom
