#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lfpso/geometry.hpp"
#include "lfpso/params.hpp"

namespace lfpso {

/// Binary exploration grid over the arena. A cell is explored once any
/// robot footprint has covered its center; the explored count never
/// decreases.
class ExplorationGrid {
public:
    ExplorationGrid() = default;

    ExplorationGrid(double width, double height, double cell_size) {
        if (!SimParams::divides(cell_size, width))
            throw ConfigError("cell_size: must divide arena width exactly");
        if (!SimParams::divides(cell_size, height))
            throw ConfigError("cell_size: must divide arena height exactly");
        cols_ = static_cast<int>(std::round(width / cell_size));
        rows_ = static_cast<int>(std::round(height / cell_size));
        cell_size_ = cell_size;
        explored_.assign(static_cast<std::size_t>(cols_) * rows_, 0);
    }

    int cols() const noexcept { return cols_; }
    int rows() const noexcept { return rows_; }
    int total_cells() const noexcept { return cols_ * rows_; }
    int explored_count() const noexcept { return explored_count_; }
    double cell_size() const noexcept { return cell_size_; }

    bool explored(int col, int row) const noexcept {
        return explored_[index(col, row)] != 0;
    }

    Vec2 cell_center(int col, int row) const noexcept {
        return {(col + 0.5) * cell_size_, (row + 0.5) * cell_size_};
    }

    /// Marks every cell whose center lies within the axis-aligned square of
    /// side `robot_size` centered at `center` (boundary inclusive, cells
    /// outside the grid clipped). Returns the number of cells that switched
    /// from unexplored to explored.
    int stamp_footprint(Vec2 center, double robot_size) noexcept {
        const double half = robot_size / 2.0;
        int c0 = static_cast<int>(std::ceil((center.x - half) / cell_size_ - 0.5 - kIndexTol));
        int c1 = static_cast<int>(std::floor((center.x + half) / cell_size_ - 0.5 + kIndexTol));
        int r0 = static_cast<int>(std::ceil((center.y - half) / cell_size_ - 0.5 - kIndexTol));
        int r1 = static_cast<int>(std::floor((center.y + half) / cell_size_ - 0.5 + kIndexTol));
        c0 = std::max(c0, 0);
        r0 = std::max(r0, 0);
        c1 = std::min(c1, cols_ - 1);
        r1 = std::min(r1, rows_ - 1);
        int newly = 0;
        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                auto& cell = explored_[index(c, r)];
                if (!cell) {
                    cell = 1;
                    ++newly;
                }
            }
        }
        explored_count_ += newly;
        return newly;
    }

    double coverage_fraction() const noexcept {
        return total_cells() == 0 ? 0.0
                                  : static_cast<double>(explored_count_) / total_cells();
    }

private:
    static constexpr double kIndexTol = 1e-9;

    std::size_t index(int col, int row) const noexcept {
        return static_cast<std::size_t>(row) * cols_ + col;
    }

    int cols_ = 0;
    int rows_ = 0;
    int explored_count_ = 0;
    double cell_size_ = 0.0;
    std::vector<std::uint8_t> explored_;
};

inline ExplorationGrid make_grid(double width, double height, double cell_size) {
    return ExplorationGrid(width, height, cell_size);
}

inline int stamp_footprint(ExplorationGrid& grid, Vec2 center, double robot_size) noexcept {
    return grid.stamp_footprint(center, robot_size);
}

inline double coverage_fraction(const ExplorationGrid& grid) noexcept {
    return grid.coverage_fraction();
}

} // namespace lfpso
