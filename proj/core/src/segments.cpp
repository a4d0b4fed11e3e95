#include "glyphgeom/segments.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace glyphgeom {

DirectionVector direction_vector(const Segment& seg) {
    DirectionVector dv;
    if (seg.pixels.size() < 2) return dv;
    dv.reserve(seg.pixels.size() - 1);
    for (size_t i = 0; i + 1 < seg.pixels.size(); ++i)
        dv.push_back(direction_code(seg.pixels[i], seg.pixels[i + 1]));
    return dv;
}

namespace {

bool in_pair(int code, int a, int b) { return code == a || code == b; }

bool contains(const DirectionVector& v, int code) {
    return std::find(v.begin(), v.end(), code) != v.end();
}

} // namespace

std::vector<DirectionVector> split_directions(const DirectionVector& dv) {
    std::vector<DirectionVector> out;
    if (dv.empty()) return out;

    DirectionVector run{dv.front()};
    int distinct = 1;
    for (size_t i = 1; i < dv.size(); ++i) {
        const int prev = run.back();
        const int next = dv[i];
        bool cut = false;
        if (in_pair(prev, 6, 2) && in_pair(next, 8, 4)) {
            cut = true; // V-stroke, rising then falling
        } else if (in_pair(prev, 8, 4) && in_pair(next, 6, 2)) {
            cut = true; // V-stroke, the other way
        } else if (distinct == 3 && !contains(run, next)) {
            cut = true; // wandered through a 4th direction
        }
        if (cut) {
            out.push_back(std::move(run));
            run = {next};
            distinct = 1;
        } else {
            if (!contains(run, next)) ++distinct;
            run.push_back(next);
        }
    }
    out.push_back(std::move(run));
    return out;
}

LineType classify(const DirectionVector& dv) {
    if (dv.empty()) throw std::invalid_argument("cannot classify an empty direction vector");

    // bucket order: right_diagonal, left_diagonal, vertical, horizontal
    auto bucket_of = [](int code) -> int {
        switch (code) {
        case 2: case 6: return 0;
        case 4: case 8: return 1;
        case 1: case 5: return 2;
        default: return 3; // 3, 7
        }
    };
    std::array<int, 4> tally{};
    std::array<int, 4> first_seen{-1, -1, -1, -1};
    for (size_t i = 0; i < dv.size(); ++i) {
        const int b = bucket_of(dv[i]);
        ++tally[size_t(b)];
        if (first_seen[size_t(b)] < 0) first_seen[size_t(b)] = int(i);
    }

    int best = -1;
    for (int b = 0; b < 4; ++b) {
        if (tally[size_t(b)] == 0) continue;
        if (best < 0 || tally[size_t(b)] > tally[size_t(best)] ||
            (tally[size_t(b)] == tally[size_t(best)] &&
             first_seen[size_t(b)] < first_seen[size_t(best)]))
            best = b;
    }

    switch (best) {
    case 0: return LineType::right_diagonal;
    case 1: return LineType::left_diagonal;
    case 2: return LineType::vertical;
    default: return LineType::horizontal;
    }
}

std::string line_type_name(LineType t) {
    switch (t) {
    case LineType::horizontal: return "horizontal";
    case LineType::vertical: return "vertical";
    case LineType::right_diagonal: return "right_diagonal";
    case LineType::left_diagonal: return "left_diagonal";
    }
    return "?";
}

std::vector<ClassifiedStroke> classify_segments(const std::vector<Segment>& segments) {
    std::vector<ClassifiedStroke> out;
    for (const Segment& seg : segments) {
        if (seg.pixels.size() == 1) {
            ClassifiedStroke s;
            s.single_pixel = true;
            s.pixels = seg.pixels;
            out.push_back(std::move(s));
            continue;
        }
        const DirectionVector dv = direction_vector(seg);
        const auto pieces = split_directions(dv);

        // The pivot pixel at each cut belongs to the earlier stroke:
        // the first piece spans |codes|+1 pixels, later pieces pick up
        // after the pivot and span |codes| pixels.
        size_t px = 0;
        for (size_t i = 0; i < pieces.size(); ++i) {
            ClassifiedStroke s;
            s.codes = pieces[i];
            s.type = classify(s.codes);
            const size_t count = pieces[i].size() + (i == 0 ? 1 : 0);
            s.pixels.assign(seg.pixels.begin() + long(px), seg.pixels.begin() + long(px + count));
            px += count;
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace glyphgeom
