#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qgw/errors.hpp"

namespace qgw {

/// Uniform sampling grid: times t_start + i*dt for i in [0, steps).
class TimeGrid {
  public:
    TimeGrid() : TimeGrid(0.0, 1.0, 2) {}

    TimeGrid(double t_start, double dt, std::size_t steps)
        : t_start_(t_start), dt_(dt), steps_(steps) {
        if (!(dt > 0.0)) {
            throw ValidationError("time grid: dt must be > 0");
        }
        if (steps < 2) {
            throw ValidationError("time grid: need at least 2 samples");
        }
    }

    /// Grid over [0, duration] with spacing dt (duration rounded to a whole
    /// number of steps).
    static TimeGrid from_duration(double duration, double dt) {
        if (!(dt > 0.0) || !(duration > 0.0) || !(dt < duration)) {
            throw ValidationError("time grid: need 0 < dt < T");
        }
        const auto steps = static_cast<std::size_t>(std::llround(duration / dt)) + 1;
        return TimeGrid(0.0, dt, steps);
    }

    double t_start() const { return t_start_; }
    double dt() const { return dt_; }
    std::size_t steps() const { return steps_; }
    double time(std::size_t i) const { return t_start_ + dt_ * static_cast<double>(i); }
    double duration() const { return dt_ * static_cast<double>(steps_ - 1); }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

  private:
    double t_start_;
    double dt_;
    std::size_t steps_;
};

/// Probability samples over a TimeGrid. Values are clamped to [0,1] on
/// ingestion; anything outside [−1e−9, 1+1e−9] is rejected as a bug upstream.
class ProbabilitySeries {
  public:
    ProbabilitySeries(TimeGrid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.steps()) {
            throw DimensionMismatchError("probability series: " +
                                         std::to_string(values_.size()) +
                                         " values on a grid of " +
                                         std::to_string(grid_.steps()) + " steps");
        }
        for (double& v : values_) {
            if (v < -1e-9 || v > 1.0 + 1e-9) {
                throw ValidationError("probability series: value " +
                                      std::to_string(v) + " outside [0,1]");
            }
            v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        }
    }

    const TimeGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    double time(std::size_t i) const { return grid_.time(i); }

  private:
    TimeGrid grid_;
    std::vector<double> values_;
};

}  // namespace qgw
