#pragma once

#include <vector>

#include "lfpso/geometry.hpp"

namespace lfpso {

/// Progress through the robot's current Levy step. step_size 0 means no
/// step has been drawn yet; traveled accumulates realized displacement and
/// stays within [0, step_size] between redraws.
struct LevyProgress {
    double step_size = 0.0;
    double direction = 0.0;
    double traveled = 0.0;

    bool due() const noexcept { return traveled >= step_size; }
};

struct RobotState {
    int id = 0;
    Vec2 pos;
    Vec2 vel;
    double heading = 0.0;
    LevyProgress lf;
    Vec2 local_best;
    bool avoidance_active = false;
    double energy_joules = 0.0;
    std::vector<Vec2> path;   // append-only; path[0] is the start position
};

} // namespace lfpso
