#pragma once

#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

/// Zhang-Suen two-subiteration thinning, run to a fixpoint.
///
/// Deletions proposed by each subiteration are applied in scan order
/// and re-checked against the partially updated image (crossing
/// number 1, at least 2 neighbours) so a deletion can never split or
/// erase a component. The textbook parallel update lacks that guard
/// and wipes out isolated 2x2 squares.
///
/// Guarantees: idempotent, never adds foreground, preserves the
/// number of 8-connected foreground components.
BitGrid thin(const BitGrid& img);

} // namespace glyphgeom
