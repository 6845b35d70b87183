#include "qgw/metrics.hpp"

#include <cmath>
#include <limits>

#include "qgw/errors.hpp"

namespace qgw {

LogMeanRate log_mean_rate_info(const ProbabilitySeries& series) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw EmptySeriesError("log mean rate: need at least 2 samples");
    }
    LogMeanRate out;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p = series.value(i);
        if (p < kLogFloor) {
            p = kLogFloor;
            ++out.floored_samples;
        }
        const double weight = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        sum += weight * std::log(p);
    }
    // Trapezoid: dt * sum, divided by T = dt * (n-1).
    out.lambda = sum / static_cast<double>(n - 1);
    return out;
}

double log_mean_rate(const ProbabilitySeries& series) {
    return log_mean_rate_info(series).lambda;
}

double half_passage_time(const ProbabilitySeries& series) {
    const double lambda = log_mean_rate(series);
    if (lambda == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log(2.0) / std::abs(lambda);
}

std::optional<double> first_peak_time(const ProbabilitySeries& series,
                                      double min_height) {
    if (!(min_height > 0.0) || min_height > 1.0) {
        throw ValidationError("first peak: min_height must be in (0,1]");
    }
    if (series.size() < 2) {
        throw EmptySeriesError("first peak: need at least 2 samples");
    }
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
        const double v = series.value(i);
        if (v >= min_height && v > series.value(i - 1) && v > series.value(i + 1)) {
            return series.time(i);
        }
    }
    return std::nullopt;
}

}  // namespace qgw
