#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glyphgeom/bitgrid.hpp"
#include "glyphgeom/classify.hpp"

namespace glyphgeom {

/// Straight stroke between two points on the 16x16 reference grid,
/// inclusive endpoints, (row, col) in 0..15.
struct Stroke {
    int r0, c0, r1, c1;
};

/// Hand-authored letterform: the simplest polyline shape that keeps
/// the letter's stroke/hole topology.
struct GlyphTemplate {
    char label;
    std::vector<Stroke> strokes;
};

/// The 26 uppercase templates, A..Z.
const std::vector<GlyphTemplate>& glyph_templates();
const GlyphTemplate& glyph_template(char label);

/// Rasterize the template's strokes onto a rows x cols grid with
/// integer (Bresenham) lines, then thin to a 1-pixel skeleton.
/// Requires rows, cols >= 8.
BitGrid render(const GlyphTemplate& tmpl, int rows, int cols);

/// Deterministic perturbation: rescale by a factor drawn from
/// [1-scale/100, 1+scale/100] (nearest-neighbour, then re-thin) and
/// translate by offsets drawn from [-shift, +shift] inside a grown
/// canvas. shift=0, scale=0 returns the input unchanged.
BitGrid perturb(const BitGrid& img, uint64_t seed, int shift, int scale);

/// Labeled synthetic corpus: n_train + n_test instances per letter,
/// perturbation seeds derived from (seed, label, instance) so train
/// and test never share one and generation order is irrelevant.
std::pair<Dataset, Dataset> build_corpus(int n_train_per_label, int n_test_per_label,
                                         uint64_t seed);

/// The perturbed skeleton for one corpus instance; index runs over
/// train instances first, then test. Used for PBM dumps.
BitGrid corpus_image(char label, int index, int n_train_per_label, uint64_t seed);

} // namespace glyphgeom
