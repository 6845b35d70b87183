#pragma once

#include <cstddef>
#include <optional>

#include "qgw/series.hpp"

namespace qgw {

/// Floor applied inside the logarithm so accidental zeros of P(t) do not
/// produce -inf.
inline constexpr double kLogFloor = 1e-15;

struct LogMeanRate {
    double lambda = 0.0;
    std::size_t floored_samples = 0;  // samples that hit kLogFloor
};

/// λ = (1/T) ∫ ln(max(P(t), floor)) dt, trapezoidal. Non-positive for any
/// probability series; 0 only for the constant-1 series.
LogMeanRate log_mean_rate_info(const ProbabilitySeries& series);
double log_mean_rate(const ProbabilitySeries& series);

/// τ = ln2 / |λ|, the time by which an ensemble of identically prepared
/// systems would show at least one particle past the subset in half its
/// members. Returns +inf when λ = 0 (no decay). |λ| rather than λ so τ is a
/// positive time.
double half_passage_time(const ProbabilitySeries& series);

/// Time of the first sample strictly greater than both neighbors with value
/// >= min_height (plateaus do not count; endpoints have only one neighbor and
/// never qualify). Empty when no such peak exists. min_height must be in (0,1].
std::optional<double> first_peak_time(const ProbabilitySeries& series,
                                      double min_height);

}  // namespace qgw
