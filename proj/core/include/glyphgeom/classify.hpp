#pragma once

#include <map>
#include <string>
#include <vector>

#include "glyphgeom/features.hpp"

namespace glyphgeom {

/// Labeled feature vectors for the benchmark harness.
struct Dataset {
    std::vector<FeatureVector> records;
};

struct EvalReport {
    int total = 0;
    int errors = 0;
    double accuracy = 0.0;
    // confusion[truth][predicted], sorted keys for stable output
    std::map<std::string, std::map<std::string, int>> confusion;
};

/// k-nearest-neighbour vote under Euclidean distance over all 111
/// features. Distance ties break by earlier dataset index; vote ties
/// go to the label of the nearest tied neighbour. Requires a
/// nonempty training set and 1 <= k <= |train|.
std::string knn_predict(const Dataset& train, const FeatureVector& query, int k);

/// Nearest class-centroid alternative to k-NN.
std::string nearest_centroid_predict(const Dataset& train, const FeatureVector& query);

EvalReport evaluate(const Dataset& train, const Dataset& test, int k);

/// "accuracy=<x> errors=<e>/<n>" plus a confusion table.
std::string format_report(const EvalReport& report);

} // namespace glyphgeom
