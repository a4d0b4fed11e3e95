#include "glyphgeom/traversal.hpp"

#include <deque>

#include "glyphgeom/direction.hpp"

namespace glyphgeom {

std::vector<Pixel> neighbours(const BitGrid& img, Pixel p) {
    std::vector<Pixel> out;
    for (int code = 1; code <= 8; ++code) {
        const Pixel q = step(p, code);
        if (img.at_or_bg(q.row, q.col)) out.push_back(q);
    }
    return out;
}

int neighbour_count(const BitGrid& img, Pixel p) {
    int n = 0;
    for (int code = 1; code <= 8; ++code) {
        const Pixel q = step(p, code);
        if (img.at_or_bg(q.row, q.col)) ++n;
    }
    return n;
}

namespace {

bool cells_adjacent(Pixel a, Pixel b) {
    const int dr = a.row - b.row, dc = a.col - b.col;
    return dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1 && !(dr == 0 && dc == 0);
}

// Junction test on the direct/diagonal structure of the neighbourhood.
bool is_intersection(const BitGrid& img, Pixel p) {
    std::vector<Pixel> direct, diagonal;
    for (int code = 1; code <= 8; ++code) {
        const Pixel q = step(p, code);
        if (!img.at_or_bg(q.row, q.col)) continue;
        (is_direct_code(code) ? direct : diagonal).push_back(q);
    }
    const size_t n = direct.size() + diagonal.size();

    if (n <= 2) return false;
    if (n >= 5) return true;

    if (n == 3) {
        // Any direct touching any diagonal means a thick corner, not
        // a junction.
        for (const Pixel& d : direct)
            for (const Pixel& g : diagonal)
                if (cells_adjacent(d, g)) return false;
        return true;
    }

    // n == 4: not a junction only when the neighbourhood pairs up
    // completely -- every direct next to some diagonal and every
    // diagonal next to some direct.
    for (const Pixel& d : direct) {
        bool paired = false;
        for (const Pixel& g : diagonal)
            if (cells_adjacent(d, g)) { paired = true; break; }
        if (!paired) return true;
    }
    for (const Pixel& g : diagonal) {
        bool paired = false;
        for (const Pixel& d : direct)
            if (cells_adjacent(d, g)) { paired = true; break; }
        if (!paired) return true;
    }
    return false;
}

// Traversal bookkeeping over one zone.
struct Walker {
    const BitGrid& zone;
    std::vector<uint8_t> visited;
    std::vector<uint8_t> intersection;
    std::vector<uint8_t> in_minor;
    std::deque<Pixel> minor_queue;
    std::vector<Segment> segments;

    explicit Walker(const BitGrid& z)
        : zone(z),
          visited(size_t(z.rows()) * z.cols(), 0),
          intersection(size_t(z.rows()) * z.cols(), 0),
          in_minor(size_t(z.rows()) * z.cols(), 0) {}

    size_t idx(Pixel p) const { return size_t(p.row) * zone.cols() + p.col; }

    std::vector<Pixel> unvisited_neighbours(Pixel p) const {
        std::vector<Pixel> out;
        for (int code = 1; code <= 8; ++code) {
            const Pixel q = step(p, code);
            if (zone.at_or_bg(q.row, q.col) && !visited[idx(q)]) out.push_back(q);
        }
        return out;
    }

    // Queue in clockwise code order; pixels already queued or visited
    // are skipped.
    void queue_unvisited(Pixel p, const Pixel* except = nullptr) {
        for (const Pixel& q : unvisited_neighbours(p)) {
            if (except && q == *except) continue;
            if (in_minor[idx(q)]) continue;
            in_minor[idx(q)] = 1;
            minor_queue.push_back(q);
        }
    }

    void walk_from(Pixel start) {
        in_minor[idx(start)] = 0;
        Segment seg;
        seg.pixels.push_back(start);
        visited[idx(start)] = 1;

        Pixel cur = start;
        Pixel prev{};
        bool have_prev = false;

        // A starting pixel that is itself a junction is a one-pixel
        // segment; its arms all continue from the queue.
        if (intersection[idx(cur)]) {
            queue_unvisited(cur);
            segments.push_back(std::move(seg));
            return;
        }

        while (true) {
            Pixel next{};
            bool have_next = false;

            if (!have_prev) {
                // Segment start: head for the lowest direction code,
                // queue any siblings.
                const auto unv = unvisited_neighbours(cur);
                if (!unv.empty()) {
                    next = unv.front();
                    have_next = true;
                    queue_unvisited(cur, &next);
                }
            } else if (neighbour_count(zone, cur) > 2) {
                // Branch pixel that is not a junction: keep going only
                // if some unvisited neighbour continues the current
                // direction; everything else is queued.
                const int dir = direction_code(prev, cur);
                const Pixel ahead = step(cur, dir);
                if (zone.at_or_bg(ahead.row, ahead.col) && !visited[idx(ahead)]) {
                    next = ahead;
                    have_next = true;
                    queue_unvisited(cur, &next);
                } else {
                    queue_unvisited(cur);
                }
            } else {
                // Plain path pixel: at most one way forward.
                const auto unv = unvisited_neighbours(cur);
                if (!unv.empty()) {
                    next = unv.front();
                    have_next = true;
                }
            }

            if (!have_next) break;

            seg.pixels.push_back(next);
            visited[idx(next)] = 1;

            if (intersection[idx(next)]) {
                queue_unvisited(next);
                break;
            }
            if (in_minor[idx(next)]) {
                in_minor[idx(next)] = 0;
                queue_unvisited(next);
                break;
            }

            prev = cur;
            have_prev = true;
            cur = next;
        }

        segments.push_back(std::move(seg));
    }
};

} // namespace

PixelClassification classify_pixels(const BitGrid& zone) {
    PixelClassification out;
    for (int r = 0; r < zone.rows(); ++r)
        for (int c = 0; c < zone.cols(); ++c) {
            if (!zone.at(r, c)) continue;
            const Pixel p{r, c};
            const int n = neighbour_count(zone, p);
            if (n == 1)
                out.starters.push_back(p);
            else if (is_intersection(zone, p))
                out.intersections.push_back(p);
        }
    return out;
}

std::vector<Segment> extract_segments(const BitGrid& zone) {
    return extract_segments(zone, nullptr);
}

std::vector<Segment> extract_segments(const BitGrid& zone, TraversalTrace* trace) {
    Walker w(zone);
    const PixelClassification cls = classify_pixels(zone);
    for (const Pixel& p : cls.intersections) w.intersection[w.idx(p)] = 1;

    auto record = [&]() {
        if (!trace) return;
        std::vector<Pixel> pending;
        for (const Pixel& p : w.minor_queue)
            if (w.in_minor[w.idx(p)]) pending.push_back(p);
        trace->minor_after_segment.push_back(std::move(pending));
    };

    for (const Pixel& s : cls.starters) {
        if (w.visited[w.idx(s)]) continue;
        w.walk_from(s);
        record();
    }

    // Drain the minor-starter queue; reseed in scan order for closed
    // curves that no starter or junction ever reaches.
    while (true) {
        bool popped = false;
        while (!w.minor_queue.empty()) {
            const Pixel p = w.minor_queue.front();
            w.minor_queue.pop_front();
            if (!w.in_minor[w.idx(p)] || w.visited[w.idx(p)]) continue;
            w.walk_from(p);
            record();
            popped = true;
        }

        Pixel seed{};
        bool found = false;
        for (int r = 0; r < zone.rows() && !found; ++r)
            for (int c = 0; c < zone.cols() && !found; ++c)
                if (zone.at(r, c) && !w.visited[w.idx({r, c})]) {
                    seed = {r, c};
                    found = true;
                }
        if (!found) break;
        w.walk_from(seed);
        record();
        (void)popped;
    }

    return std::move(w.segments);
}

} // namespace glyphgeom
