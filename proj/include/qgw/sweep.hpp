#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgw/graph.hpp"
#include "qgw/metrics.hpp"
#include "qgw/pair.hpp"

namespace qgw {

/// One half-passage-time experiment repeated over values of a named coupling
/// parameter, for each requested particle statistics.
struct SweepSpec {
    GraphSpec base;
    std::string parameter;
    std::vector<double> values;
    std::vector<Statistics> statistics;
    SiteSubset subset;
    TimeGrid grid;
    SiteId initial_a = 0;
    SiteId initial_b = 1;
};

struct SweepRow {
    double value = 0.0;
    Statistics statistics = Statistics::Fermion;
    double lambda = 0.0;
    double tau = 0.0;
    std::size_t floored_samples = 0;
};

/// For each (value, statistics): rebuild the Hamiltonian with the single
/// override {parameter: value}, decompose, run p_perp_series from
/// initial_pair(initial_a, initial_b), and reduce to λ and τ. Rows come back
/// ordered by (value ascending, fermion before boson) and are bit-identical
/// regardless of max_threads (0 = one worker per hardware thread).
std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t max_threads = 0);

}  // namespace qgw
