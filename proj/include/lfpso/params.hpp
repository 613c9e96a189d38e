#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfpso/geometry.hpp"

namespace lfpso {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Algorithm { hybrid, pso, lf };
enum class StartMode { random_placement, fixed_points };
enum class RepulsionAggregate { sum, mean };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::hybrid: return "hybrid";
        case Algorithm::pso: return "pso";
        case Algorithm::lf: return "lf";
    }
    return "?";
}

inline Algorithm algorithm_from_string(const std::string& s) {
    if (s == "hybrid") return Algorithm::hybrid;
    if (s == "pso") return Algorithm::pso;
    if (s == "lf") return Algorithm::lf;
    throw ConfigError("algorithm: unknown variant '" + s + "' (valid: hybrid, pso, lf)");
}

/// All tunable constants of a trial. Defaults are the reference setup:
/// 20x20 m empty arena, 10 robots, 600 one-second steps, omega 0.6,
/// cognitive and social weights 2, beta 1, 2 m communication range,
/// 0.2 m/s speed cap, 0.6 m square robots.
struct SimParams {
    double omega = 0.6;
    double p_omega = 2.0;
    double n_omega = 2.0;
    double beta = 1.0;
    double comm_range = 2.0;
    double v_max = 0.2;
    double dt = 1.0;
    double arena_width = 20.0;
    double arena_height = 20.0;
    double robot_size = 0.6;
    double cell_size = 0.2;
    double sensor_range = 0.5;
    double victim_detect_range = 0.5;
    double levy_scale = 1.0;
    double levy_step_cap = 0.0;   // 0 resolves to the arena diagonal
    int n_robots = 10;
    int n_steps = 600;
    Algorithm algorithm = Algorithm::hybrid;
    RepulsionAggregate repulsion_aggregate = RepulsionAggregate::sum;
    double energy_idle_power = 9.0;    // W
    double energy_move_coeff = 30.0;   // J/m
    StartMode start_mode = StartMode::random_placement;
    std::vector<Vec2> start_points;    // used when start_mode == fixed_points

    bool operator==(const SimParams&) const = default;

    double half_size() const noexcept { return robot_size / 2.0; }
    double arena_diagonal() const noexcept { return std::hypot(arena_width, arena_height); }

    /// Resolves derived defaults and checks every invariant; throws
    /// ConfigError naming the offending key.
    void validate() {
        if (levy_step_cap == 0.0) levy_step_cap = arena_diagonal();

        auto require = [](bool ok, const std::string& msg) {
            if (!ok) throw ConfigError(msg);
        };
        require(omega >= 0.0, "omega: must be >= 0");
        require(p_omega >= 0.0, "p_omega: must be >= 0");
        require(n_omega >= 0.0, "n_omega: must be >= 0");
        require(beta >= 0.3 && beta <= 1.99, "beta: must lie in [0.3, 1.99]");
        require(comm_range > 0.0, "comm_range: must be > 0");
        require(v_max > 0.0, "v_max: must be > 0");
        require(dt > 0.0, "dt: must be > 0");
        require(arena_width > 0.0, "arena_width: must be > 0");
        require(arena_height > 0.0, "arena_height: must be > 0");
        require(robot_size > 0.0, "robot_size: must be > 0");
        require(cell_size > 0.0, "cell_size: must be > 0");
        require(sensor_range > 0.0, "sensor_range: must be > 0");
        require(victim_detect_range > 0.0, "victim_detect_range: must be > 0");
        require(levy_scale > 0.0, "levy_scale: must be > 0");
        require(levy_step_cap > 0.0, "levy_step_cap: must be > 0");
        require(energy_idle_power >= 0.0, "energy_idle_power: must be >= 0");
        require(energy_move_coeff >= 0.0, "energy_move_coeff: must be >= 0");
        require(n_robots >= 1, "n_robots: must be >= 1");
        require(n_steps >= 0, "n_steps: must be >= 0");
        require(v_max * dt < std::min(arena_width, arena_height),
                "v_max: v_max*dt must be smaller than the arena side");
        require(robot_size < std::min(arena_width, arena_height),
                "robot_size: robot must fit inside the arena");
        require(divides(cell_size, arena_width),
                "cell_size: must divide arena_width exactly");
        require(divides(cell_size, arena_height),
                "cell_size: must divide arena_height exactly");
        if (start_mode == StartMode::fixed_points) {
            require(!start_points.empty(),
                    "start_points: required when start_mode is fixed");
            require(static_cast<int>(start_points.size()) == 1 ||
                        static_cast<int>(start_points.size()) == n_robots,
                    "start_points: provide one shared point or one per robot");
        }
    }

    static bool divides(double cell, double extent) noexcept {
        const double q = extent / cell;
        return std::abs(q - std::round(q)) < 1e-9 && std::round(q) >= 1.0;
    }
};

} // namespace lfpso
