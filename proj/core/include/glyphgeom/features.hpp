#pragma once

#include <string>
#include <vector>

#include "glyphgeom/bitgrid.hpp"
#include "glyphgeom/segments.hpp"

namespace glyphgeom {

/// Per-zone feature record. Counts are normalized as
/// 1 - (raw/10)*2 (so 1.0 means none; 6+ strokes of a type go
/// negative, deliberately unclamped). Lengths and area are fractions
/// of the zone's full pixel count. An empty or zero-extent zone
/// yields counts 1, lengths 0, area 0.
struct ZoneFeatures {
    double n_horizontal = 1.0;
    double n_vertical = 1.0;
    double n_right_diag = 1.0;
    double n_left_diag = 1.0;
    double len_horizontal = 0.0;
    double len_vertical = 0.0;
    double len_right_diag = 0.0;
    double len_left_diag = 0.0;
    double area = 0.0;
};

constexpr int kFeatureCount = 111; // 12 zones x 9 + euler, area, eccentricity

/// Flat 111-element feature vector: 9 grid3x3 zones row-major, then 3
/// horizontal strips, 9 values each in ZoneFeatures field order, then
/// euler number, regional area, eccentricity.
struct FeatureVector {
    std::vector<double> values;
    std::string label;  // optional
    std::string source; // optional
};

ZoneFeatures zone_features(const BitGrid& zone, const std::vector<ClassifiedStroke>& strokes);

/// Objects minus holes: 8-connected foreground components minus
/// 4-connected background components that do not touch the border.
int euler_number(const BitGrid& img);

/// Foreground fraction of the whole grid. Throws on zero extent.
double regional_area(const BitGrid& img);

/// Eccentricity of the ellipse with the same second central moments
/// as the foreground point set, in [0,1]. A single pixel gives 0, a
/// straight line 1. Throws on empty foreground.
double eccentricity(const BitGrid& img);

/// Whole pipeline: crop to the universe of discourse, zone both ways,
/// traverse/split/classify per zone, then append the three regional
/// features. Throws DomainError("empty skeleton") on blank input.
FeatureVector extract_features(const BitGrid& img);

} // namespace glyphgeom
