#include "glyphgeom/features.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "glyphgeom/errors.hpp"
#include "glyphgeom/geometry.hpp"
#include "glyphgeom/traversal.hpp"

namespace glyphgeom {

namespace {

double normalized_count(int raw) { return 1.0 - (raw / 10.0) * 2.0; }

// 8-connected flood fill over foreground; returns component count.
int count_objects(const BitGrid& img) {
    std::vector<uint8_t> seen(size_t(img.rows()) * img.cols(), 0);
    auto idx = [&](int r, int c) { return size_t(r) * img.cols() + c; };
    int components = 0;
    std::vector<Pixel> stack;
    for (int r = 0; r < img.rows(); ++r)
        for (int c = 0; c < img.cols(); ++c) {
            if (!img.at(r, c) || seen[idx(r, c)]) continue;
            ++components;
            stack.push_back({r, c});
            seen[idx(r, c)] = 1;
            while (!stack.empty()) {
                const Pixel p = stack.back();
                stack.pop_back();
                for (int dr = -1; dr <= 1; ++dr)
                    for (int dc = -1; dc <= 1; ++dc) {
                        const int nr = p.row + dr, nc = p.col + dc;
                        if (!img.at_or_bg(nr, nc) || seen[idx(nr, nc)]) continue;
                        seen[idx(nr, nc)] = 1;
                        stack.push_back({nr, nc});
                    }
            }
        }
    return components;
}

// 4-connected background components that never touch the border.
int count_holes(const BitGrid& img) {
    const int rows = img.rows(), cols = img.cols();
    std::vector<uint8_t> seen(size_t(rows) * cols, 0);
    auto idx = [&](int r, int c) { return size_t(r) * cols + c; };

    std::vector<Pixel> stack;
    auto flood_bg = [&](int r, int c) {
        stack.push_back({r, c});
        seen[idx(r, c)] = 1;
        while (!stack.empty()) {
            const Pixel p = stack.back();
            stack.pop_back();
            constexpr int dr[] = {1, -1, 0, 0};
            constexpr int dc[] = {0, 0, 1, -1};
            for (int i = 0; i < 4; ++i) {
                const int nr = p.row + dr[i], nc = p.col + dc[i];
                if (!img.in_bounds(nr, nc) || img.at(nr, nc) || seen[idx(nr, nc)]) continue;
                seen[idx(nr, nc)] = 1;
                stack.push_back({nr, nc});
            }
        }
    };

    // Background reachable from the border is not a hole.
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if ((r == 0 || r == rows - 1 || c == 0 || c == cols - 1) && !img.at(r, c) &&
                !seen[idx(r, c)])
                flood_bg(r, c);

    int holes = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!img.at(r, c) && !seen[idx(r, c)]) {
                ++holes;
                flood_bg(r, c);
            }
    return holes;
}

} // namespace

ZoneFeatures zone_features(const BitGrid& zone, const std::vector<ClassifiedStroke>& strokes) {
    ZoneFeatures f;
    if (zone.empty_extent()) return f;

    int count[4] = {0, 0, 0, 0};
    long pixels[4] = {0, 0, 0, 0};
    for (const ClassifiedStroke& s : strokes) {
        if (s.single_pixel) continue; // isolated pixels only count toward area
        const int t = int(s.type);
        ++count[t];
        pixels[t] += long(s.pixels.size());
    }

    const double total = double(zone.rows()) * zone.cols();
    f.n_horizontal = normalized_count(count[int(LineType::horizontal)]);
    f.n_vertical = normalized_count(count[int(LineType::vertical)]);
    f.n_right_diag = normalized_count(count[int(LineType::right_diagonal)]);
    f.n_left_diag = normalized_count(count[int(LineType::left_diagonal)]);
    f.len_horizontal = pixels[int(LineType::horizontal)] / total;
    f.len_vertical = pixels[int(LineType::vertical)] / total;
    f.len_right_diag = pixels[int(LineType::right_diagonal)] / total;
    f.len_left_diag = pixels[int(LineType::left_diagonal)] / total;
    f.area = zone.foreground_count() / total;
    return f;
}

int euler_number(const BitGrid& img) {
    if (img.empty_extent()) return 0;
    return count_objects(img) - count_holes(img);
}

double regional_area(const BitGrid& img) {
    if (img.empty_extent()) throw DomainError("regional_area on zero-extent image");
    return img.foreground_count() / (double(img.rows()) * img.cols());
}

double eccentricity(const BitGrid& img) {
    const auto points = img.foreground_pixels();
    if (points.empty()) throw DomainError("eccentricity on empty foreground");
    if (points.size() == 1) return 0.0;

    double mr = 0.0, mc = 0.0;
    for (const Pixel& p : points) {
        mr += p.row;
        mc += p.col;
    }
    mr /= double(points.size());
    mc /= double(points.size());

    double mu20 = 0.0, mu02 = 0.0, mu11 = 0.0;
    for (const Pixel& p : points) {
        const double dr = p.row - mr, dc = p.col - mc;
        mu20 += dr * dr;
        mu02 += dc * dc;
        mu11 += dr * dc;
    }
    mu20 /= double(points.size());
    mu02 /= double(points.size());
    mu11 /= double(points.size());

    const double tr = mu20 + mu02;
    const double det = std::sqrt((mu20 - mu02) * (mu20 - mu02) + 4.0 * mu11 * mu11);
    const double l1 = (tr + det) / 2.0;
    const double l2 = (tr - det) / 2.0;
    if (l1 <= 0.0) return 0.0;
    const double ratio = std::clamp(l2 / l1, 0.0, 1.0);
    return std::sqrt(1.0 - ratio);
}

namespace {

void append_zone(std::vector<double>& out, const ZoneFeatures& f) {
    out.push_back(f.n_horizontal);
    out.push_back(f.n_vertical);
    out.push_back(f.n_right_diag);
    out.push_back(f.n_left_diag);
    out.push_back(f.len_horizontal);
    out.push_back(f.len_vertical);
    out.push_back(f.len_right_diag);
    out.push_back(f.len_left_diag);
    out.push_back(f.area);
}

} // namespace

FeatureVector extract_features(const BitGrid& img) {
    const BitGrid crop = universe_of_discourse(img); // throws on empty skeleton

    FeatureVector fv;
    fv.values.reserve(kFeatureCount);
    for (const ZoneScheme scheme : {ZoneScheme::grid3x3, ZoneScheme::horizontal3}) {
        const ZoneSet zs = zone(crop, scheme);
        for (const Zone& z : zs.zones) {
            const auto strokes = classify_segments(extract_segments(z.grid));
            append_zone(fv.values, zone_features(z.grid, strokes));
        }
    }
    fv.values.push_back(double(euler_number(crop)));
    fv.values.push_back(regional_area(crop));
    fv.values.push_back(eccentricity(crop));
    return fv;
}

} // namespace glyphgeom
