#pragma once

#include <vector>

#include "lfpso/geometry.hpp"
#include "lfpso/grid.hpp"
#include "lfpso/params.hpp"

namespace lfpso {

/// Rectangular world: obstacle rectangles, victim points, and the
/// exploration grid. Origin at the lower-left corner, x right, y up.
struct Arena {
    double width = 20.0;
    double height = 20.0;
    std::vector<Rect> obstacles;
    std::vector<Vec2> victims;
    ExplorationGrid grid;

    static Arena empty(double w, double h, double cell_size) {
        Arena a;
        a.width = w;
        a.height = h;
        a.grid = ExplorationGrid(w, h, cell_size);
        return a;
    }

    bool inside(Vec2 p) const noexcept {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }

    void validate() const {
        for (const auto& r : obstacles) {
            if (r.xmin >= r.xmax || r.ymin >= r.ymax)
                throw ConfigError("obstacles: rectangle must have positive extent");
            if (r.xmin < 0.0 || r.ymin < 0.0 || r.xmax > width || r.ymax > height)
                throw ConfigError("obstacles: rectangle must lie inside the arena");
        }
        for (const auto& v : victims) {
            if (!inside(v)) throw ConfigError("victims: point must lie inside the arena");
        }
    }
};

/// True when a robot footprint of half-width `half` centered at `pos` stays
/// inside the arena and overlaps no obstacle interior. Touching a boundary
/// is allowed.
inline bool footprint_free(const Arena& arena, Vec2 pos, double half) noexcept {
    if (pos.x < half || pos.x > arena.width - half) return false;
    if (pos.y < half || pos.y > arena.height - half) return false;
    for (const auto& obs : arena.obstacles) {
        if (obs.inflated(half).contains_interior(pos)) return false;
    }
    return true;
}

struct MotionClip {
    Vec2 end;
    bool blocked_x = false;    // motion truncated along x (wall or obstacle face)
    bool blocked_y = false;
    int hit_obstacle = -1;     // index of the blocking obstacle, -1 if none
    bool blocked() const noexcept { return blocked_x || blocked_y; }
};

/// Clips the segment from -> to so the footprint never penetrates an
/// obstacle interior or leaves the arena. `from` must already be free; the
/// clipped endpoint may land exactly on a boundary. blocked_x / blocked_y
/// name the axes where further motion is obstructed at the endpoint.
inline MotionClip clip_motion(const Arena& arena, Vec2 from, Vec2 to, double half) noexcept {
    MotionClip clip{to};
    const Vec2 d = to - from;
    if (d.x == 0.0 && d.y == 0.0) {
        clip.end = from;
        return clip;
    }

    double t_stop = 1.0;
    // Arena walls, shrunk by the footprint half-width.
    if (d.x > 0.0) t_stop = std::min(t_stop, (arena.width - half - from.x) / d.x);
    if (d.x < 0.0) t_stop = std::min(t_stop, (half - from.x) / d.x);
    if (d.y > 0.0) t_stop = std::min(t_stop, (arena.height - half - from.y) / d.y);
    if (d.y < 0.0) t_stop = std::min(t_stop, (half - from.y) / d.y);

    // Obstacles, inflated by the half-width. An entry hit only blocks when
    // the path actually points into the interior (grazing along a face does
    // not).
    for (std::size_t i = 0; i < arena.obstacles.size(); ++i) {
        const Rect infl = arena.obstacles[i].inflated(half);
        const auto hit = ray_rect_hit(from, d, infl);
        if (!hit || *hit >= t_stop) continue;
        const Vec2 probe = from + d * std::min(1.0, *hit + 1e-12);
        if (!infl.contains_interior(probe)) continue;
        t_stop = *hit;
        clip.hit_obstacle = static_cast<int>(i);
    }

    t_stop = std::clamp(t_stop, 0.0, 1.0);
    clip.end = (t_stop >= 1.0) ? to : from + d * t_stop;

    if (t_stop < 1.0) {
        // Identify the obstructed axes by probing one epsilon past the stop.
        const double eps = 1e-9;
        if (d.x != 0.0)
            clip.blocked_x = !footprint_free(
                arena, {clip.end.x + (d.x > 0.0 ? eps : -eps), clip.end.y}, half);
        if (d.y != 0.0)
            clip.blocked_y = !footprint_free(
                arena, {clip.end.x, clip.end.y + (d.y > 0.0 ? eps : -eps)}, half);
    }
    return clip;
}

/// Longest collision-free advance from `pos` along the unit direction
/// `dir`, capped at `max_dist`. Returns the realized endpoint.
inline MotionClip advance(const Arena& arena, Vec2 pos, Vec2 dir, double max_dist,
                          double half) noexcept {
    return clip_motion(arena, pos, pos + dir * max_dist, half);
}

} // namespace lfpso
