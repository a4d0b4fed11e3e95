#pragma once

#include <vector>

#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

/// Skeleton pixels that anchor traversal. Starters have exactly one
/// neighbour; intersections are junction pixels picked by the
/// direct/diagonal adjacency rules on their neighbour count.
struct PixelClassification {
    std::vector<Pixel> starters;      // scan order
    std::vector<Pixel> intersections; // scan order
};

/// One traversed line segment: consecutive pixels are 8-neighbours,
/// no pixel repeats.
struct Segment {
    std::vector<Pixel> pixels;
};

/// Optional traversal introspection. minor_after_segment[i] is the
/// pending minor-starters queue right after segment i was closed.
struct TraversalTrace {
    std::vector<std::vector<Pixel>> minor_after_segment;
};

/// Foreground neighbours of p in clockwise direction-code order
/// 1..8, starting from the pixel directly below p.
std::vector<Pixel> neighbours(const BitGrid& img, Pixel p);

/// Number of foreground pixels among the 8 surrounding cells.
int neighbour_count(const BitGrid& img, Pixel p);

PixelClassification classify_pixels(const BitGrid& zone);

/// Traverse the zone's skeleton into segments.
///
/// Walk order: starters in scan order, then the minor-starters queue
/// FIFO; if unvisited foreground remains with both exhausted (pure
/// loops), traversal reseeds at the first unvisited pixel in scan
/// order. Reaching an intersection or a queued minor starter closes
/// the current segment and queues the pixel's unvisited neighbours.
/// A branch pixel that is not an intersection keeps the walk going
/// only straight ahead; everything else gets queued. Every
/// foreground pixel ends up in exactly one segment.
std::vector<Segment> extract_segments(const BitGrid& zone);
std::vector<Segment> extract_segments(const BitGrid& zone, TraversalTrace* trace);

} // namespace glyphgeom
