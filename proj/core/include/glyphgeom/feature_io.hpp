#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "glyphgeom/features.hpp"

namespace glyphgeom {

/// Feature-record serialization. Two formats:
///   jsonl: {"label": "A", "source": "path", "features": [...]}
///   csv:   header label,f000..f110 then one row per record
/// Numbers are written with 17 significant digits so parsing them
/// back is exact.

std::string format_double(double v);

std::string to_jsonl_line(const FeatureVector& fv);
void write_jsonl(std::ostream& os, const std::vector<FeatureVector>& records);
std::vector<FeatureVector> read_jsonl(std::istream& is);

std::string csv_header();
std::string to_csv_row(const FeatureVector& fv);
void write_csv(std::ostream& os, const std::vector<FeatureVector>& records);
std::vector<FeatureVector> read_csv(std::istream& is);

/// Reads .csv by extension, anything else as jsonl.
std::vector<FeatureVector> read_feature_file(const std::string& path);

} // namespace glyphgeom
