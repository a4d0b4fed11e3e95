#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glyphgeom/direction.hpp"
#include "glyphgeom/traversal.hpp"

namespace glyphgeom {

/// Sequence of direction codes 1..8 (see direction.hpp for the
/// clockwise convention).
using DirectionVector = std::vector<int>;

enum class LineType { horizontal, vertical, right_diagonal, left_diagonal };

/// Per-step codes along a segment; empty for single-pixel segments.
DirectionVector direction_vector(const Segment& seg);

/// Break a direction vector into straight strokes. A new sub-vector
/// starts before `next` when one of these fires at the (prev, next)
/// transition, checked in order, at most one split per transition:
///   1. prev in {6,2} and next in {8,4}
///   2. prev in {8,4} and next in {6,2}
///   3. next would be a 4th distinct code in the running sub-vector
/// Concatenating the output reproduces the input.
std::vector<DirectionVector> split_directions(const DirectionVector& dv);

/// Majority bucket: {2,6} right diagonal, {4,8} left diagonal,
/// {1,5} vertical, {3,7} horizontal. Ties go to the bucket whose
/// member code appears earliest in the vector. Throws on empty input.
LineType classify(const DirectionVector& dv);

std::string line_type_name(LineType t);

/// A classified stroke after splitting. The pivot pixel shared by two
/// strokes stays with the earlier one, so pixel lists partition the
/// parent segment: the first stroke has |codes|+1 pixels, later ones
/// |codes|. `single_pixel` marks the degenerate one-pixel segment,
/// which has no direction vector and no line type.
struct ClassifiedStroke {
    bool single_pixel = false;
    LineType type = LineType::horizontal;
    DirectionVector codes;
    std::vector<Pixel> pixels;
};

/// Full per-zone treatment of raw traversal output: split every
/// multi-pixel segment and classify the pieces.
std::vector<ClassifiedStroke> classify_segments(const std::vector<Segment>& segments);

} // namespace glyphgeom
