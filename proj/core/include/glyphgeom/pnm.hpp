#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "glyphgeom/bitgrid.hpp"

namespace glyphgeom {

enum class ImageFormat { pbm, pgm, text_matrix };

/// PBM and the 0/1 text matrix parse to a BitGrid, PGM to a GrayGrid
/// that still needs binarize().
using ParsedImage = std::variant<BitGrid, GrayGrid>;

/// Parse PBM (P1/P4), PGM (P2/P5) or a whitespace-separated 0/1 text
/// matrix. Throws ParseError with the offending byte offset on
/// malformed headers, truncated rasters or ragged matrices.
ParsedImage parse_image(const std::vector<uint8_t>& bytes, ImageFormat format);

/// Sniff the format from the magic number; anything that is not P1/P4
/// (pbm) or P2/P5 (pgm) is treated as a text matrix.
ImageFormat detect_format(const std::vector<uint8_t>& bytes);

/// Foreground iff intensity < threshold (dark ink on light paper).
BitGrid binarize(const GrayGrid& gray, int threshold);

// Serializers. Round trip: parse(serialize(x)) == x.
std::string write_pbm(const BitGrid& img, bool binary = false);
std::string write_pgm(const GrayGrid& img, bool binary = false);
std::string write_text_matrix(const BitGrid& img);

/// One-stop loader for the CLI: parse, binarize PGM input with the
/// given threshold. Does not thin.
BitGrid load_bitgrid(const std::vector<uint8_t>& bytes, int threshold = 128);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::string& data);

} // namespace glyphgeom
