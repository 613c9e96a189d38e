#pragma once

#include <span>
#include <utility>

#include "lfpso/geometry.hpp"
#include "lfpso/params.hpp"

namespace lfpso {

struct PsoCoefficients {
    double omega = 0.6;     // inertia
    double p_omega = 2.0;   // cognitive weight
    double n_omega = 2.0;   // social weight

    static PsoCoefficients from(const SimParams& p) {
        return {p.omega, p.p_omega, p.n_omega};
    }
};

/// Velocity update, componentwise:
///   v' = omega*v + p_omega*rand_cog.*(p_lb - x) + n_omega*rand_soc.*(p_gb - x)
/// The random factors are drawn per component and per term; no clamping here.
inline Vec2 velocity_update(Vec2 v, Vec2 x, Vec2 p_lb, Vec2 p_gb,
                            const PsoCoefficients& c, Vec2 rand_cog,
                            Vec2 rand_soc) noexcept {
    return {c.omega * v.x + c.p_omega * rand_cog.x * (p_lb.x - x.x) +
                c.n_omega * rand_soc.x * (p_gb.x - x.x),
            c.omega * v.y + c.p_omega * rand_cog.y * (p_lb.y - x.y) +
                c.n_omega * rand_soc.y * (p_gb.y - x.y)};
    }

inline Vec2 position_update(Vec2 x, Vec2 v, double dt) noexcept {
    return x + v * dt;
}

/// Rescales v to magnitude v_max when it exceeds the cap; direction is
/// preserved.
inline Vec2 clamp_speed(Vec2 v, double v_max) noexcept {
    const double mag = v.norm();
    if (mag <= v_max || mag == 0.0) return v;
    return v * (v_max / mag);
}

/// Per-robot fitness memory for the plain-PSO baseline: the position where
/// the robot saw its largest single-step exploration gain. Gains start at
/// -1 so the first observation always records.
struct BaselineFitnessMemo {
    int best_gain = -1;
    Vec2 best_pos;
};

/// Records `step_gain` at `pos` when it strictly beats the stored gain;
/// ties keep the earlier position.
inline void update_memo(BaselineFitnessMemo& memo, Vec2 pos, int step_gain) noexcept {
    if (step_gain > memo.best_gain) {
        memo.best_gain = step_gain;
        memo.best_pos = pos;
    }
}

/// Fleet-wide best position: the memo with maximal gain, ties broken by the
/// lowest robot id.
inline Vec2 fleet_best(std::span<const BaselineFitnessMemo> memos) noexcept {
    int best = 0;
    for (int i = 1; i < static_cast<int>(memos.size()); ++i) {
        if (memos[i].best_gain > memos[best].best_gain) best = i;
    }
    return memos[best].best_pos;
}

/// Baseline best-position pair for one robot: updates its memo from the
/// latest stamp gain, then returns (own best, fleet best).
inline std::pair<Vec2, Vec2> baseline_pso_bests(Vec2 robot_pos,
                                                BaselineFitnessMemo& memo,
                                                int step_gain,
                                                std::span<const BaselineFitnessMemo> all) noexcept {
    update_memo(memo, robot_pos, step_gain);
    return {memo.best_pos, fleet_best(all)};
}

} // namespace lfpso
