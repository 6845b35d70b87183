#include "qgw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "qgw/errors.hpp"
#include "qgw/spectral.hpp"

namespace qgw {

namespace {

[[noreturn]] void rethrow_with_context(const std::exception_ptr& ep,
                                       const std::string& context) {
    try {
        std::rethrow_exception(ep);
    } catch (const UnknownParameterError& e) {
        throw UnknownParameterError(context + ": " + e.what());
    } catch (const PauliViolationError& e) {
        throw PauliViolationError(context + ": " + e.what());
    } catch (const DimensionMismatchError& e) {
        throw DimensionMismatchError(context + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    } catch (const ConvergenceFailureError& e) {
        throw ConvergenceFailureError(context + ": " + e.what());
    } catch (const Error& e) {
        throw Error(context + ": " + e.what());
    }
}

SweepRow run_point(const SweepSpec& spec, double value, Statistics stats) {
    const Hamiltonian h = build_hamiltonian(spec.base, {{spec.parameter, value}});
    const SpectralDecomposition dec = decompose(h);
    const PairState pair0 =
        initial_pair(h.size(), spec.initial_a, spec.initial_b, stats);
    const ProbabilitySeries series = p_perp_series(dec, pair0, spec.subset, spec.grid);
    const LogMeanRate rate = log_mean_rate_info(series);

    SweepRow row;
    row.value = value;
    row.statistics = stats;
    row.lambda = rate.lambda;
    row.tau = rate.lambda == 0.0 ? std::numeric_limits<double>::infinity()
                                 : std::log(2.0) / std::abs(rate.lambda);
    row.floored_samples = rate.floored_samples;
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t max_threads) {
    if (spec.values.empty()) {
        throw ValidationError("sweep: no parameter values given");
    }
    for (double v : spec.values) {
        if (!std::isfinite(v)) {
            throw ValidationError("sweep: non-finite parameter value");
        }
    }

    std::vector<double> values = spec.values;
    std::sort(values.begin(), values.end());

    std::vector<Statistics> stats = spec.statistics;
    if (stats.empty()) {
        return {};
    }

    const std::size_t n_items = values.size() * stats.size();
    std::vector<SweepRow> rows(n_items);
    std::vector<std::pair<double, std::exception_ptr>> failures(
        n_items, {0.0, nullptr});

    std::size_t n_workers = max_threads;
    if (n_workers == 0) {
        n_workers = std::max(1u, std::thread::hardware_concurrency());
    }
    n_workers = std::min(n_workers, n_items);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t item = next.fetch_add(1);
            if (item >= n_items) {
                return;
            }
            const double value = values[item / stats.size()];
            const Statistics st = stats[item % stats.size()];
            try {
                rows[item] = run_point(spec, value, st);
            } catch (...) {
                failures[item] = {value, std::current_exception()};
            }
        }
    };

    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t k = 0; k < n_workers; ++k) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    for (const auto& [value, ep] : failures) {
        if (ep) {
            rethrow_with_context(ep, "sweep " + spec.parameter + "=" +
                                         std::to_string(value));
        }
    }
    return rows;
}

}  // namespace qgw
