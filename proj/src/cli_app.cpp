#include "qgw/cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "qgw/errors.hpp"
#include "qgw/evolution.hpp"
#include "qgw/graph.hpp"
#include "qgw/metrics.hpp"
#include "qgw/pair.hpp"
#include "qgw/spectral.hpp"
#include "qgw/sweep.hpp"

namespace qgw::cli {

namespace {

std::string fmt(double v) {
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ValidationError(what + ": \"" + text + "\" is not a number");
    }
    return v;
}

struct GraphOptions {
    std::string file;
    std::string builtin;
    std::vector<std::string> sets;
};

struct GridOptions {
    double duration = 2000.0;
    double dt = 0.1;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opt) {
    auto* file = cmd->add_option("--graph", opt.file, "Graph spec JSON file");
    auto* builtin =
        cmd->add_option("--builtin", opt.builtin, "Builtin topology: braess4|braess10")
            ->check(CLI::IsMember({"braess4", "braess10"}));
    file->excludes(builtin);
    builtin->excludes(file);
    cmd->add_option("--set", opt.sets,
                    "Override a named parameter, e.g. --set c=0.05 (repeatable)");
}

void add_grid_options(CLI::App* cmd, GridOptions& opt) {
    cmd->add_option("--T", opt.duration, "Evolution window length")
        ->capture_default_str();
    cmd->add_option("--dt", opt.dt, "Sample spacing")->capture_default_str();
}

std::map<std::string, double> parse_sets(const std::vector<std::string>& sets) {
    std::map<std::string, double> out;
    for (const std::string& entry : sets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ValidationError("--set expects name=value, got \"" + entry + "\"");
        }
        out[entry.substr(0, eq)] =
            parse_number(entry.substr(eq + 1), "--set " + entry.substr(0, eq));
    }
    return out;
}

double take(std::map<std::string, double>& sets, const std::string& name,
            double fallback) {
    const auto it = sets.find(name);
    if (it == sets.end()) {
        return fallback;
    }
    const double v = it->second;
    sets.erase(it);
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read graph file \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad()) {
        throw IoError("failed reading graph file \"" + path + "\"");
    }
    return buf.str();
}

GraphSpec load_graph(const GraphOptions& opt) {
    std::map<std::string, double> sets = parse_sets(opt.sets);

    if (!opt.builtin.empty()) {
        GraphSpec spec;
        if (opt.builtin == "braess4") {
            const double b = take(sets, "b", 0.01);
            const double s = take(sets, "s", 0.01);
            const double c = take(sets, "c", 0.1);
            const double v0 = take(sets, "V0", 0.0);
            spec = builtin_braess4(b, s, c, v0);
        } else {
            const double l = take(sets, "l", 0.1);
            const double h = take(sets, "h", 0.2);
            const double s = take(sets, "s", 0.25);
            const double c = take(sets, "c", 0.3);
            const double v1 = take(sets, "V1", 0.5);
            const double v2 = take(sets, "V2", 0.5);
            const double eu = take(sets, "Eu", 0.5);
            const double ed = take(sets, "Ed", 0.5);
            const double vu = take(sets, "Vu", 0.5);
            const double vd = take(sets, "Vd", 0.5);
            spec = builtin_braess10(l, h, s, c, v1, v2, eu, ed, vu, vd);
        }
        if (!sets.empty()) {
            throw UnknownParameterError("builtin " + opt.builtin +
                                        " has no parameter \"" +
                                        sets.begin()->first + "\"");
        }
        return spec;
    }

    if (!opt.file.empty()) {
        GraphSpec spec = parse_graph_spec(read_file(opt.file));
        for (const auto& [name, value] : sets) {
            if (!spec.parameters.count(name)) {
                throw UnknownParameterError("--set names unknown parameter \"" + name +
                                            "\"");
            }
            spec.parameters[name] = value;
        }
        return spec;
    }

    throw ValidationError("no graph source: pass --graph <file> or --builtin <name>");
}

SiteSubset parse_subset(const std::string& text, std::size_t n_sites) {
    if (text == "all") {
        return SiteSubset::all(n_sites);
    }
    std::vector<SiteId> members;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) {
            throw ValidationError("--subset: empty element in \"" + text + "\"");
        }
        const auto dash = token.find('-');
        std::size_t first = 0;
        std::size_t last = 0;
        try {
            if (dash == std::string::npos) {
                first = last = std::stoull(token);
            } else {
                first = std::stoull(token.substr(0, dash));
                last = std::stoull(token.substr(dash + 1));
            }
        } catch (const std::exception&) {
            throw ValidationError("--subset: bad element \"" + token + "\"");
        }
        if (first > last) {
            throw ValidationError("--subset: descending range \"" + token + "\"");
        }
        for (std::size_t i = first; i <= last; ++i) {
            members.push_back(i);
        }
    }
    SiteSubset subset{std::move(members)};
    if (!subset.empty() && subset.max_member() >= n_sites) {
        throw ValidationError("--subset: site " + std::to_string(subset.max_member()) +
                              " out of range (" + std::to_string(n_sites) + " sites)");
    }
    return subset;
}

std::vector<Statistics> parse_stats(const std::string& text) {
    if (text == "fermion") {
        return {Statistics::Fermion};
    }
    if (text == "boson") {
        return {Statistics::Boson};
    }
    if (text == "both") {
        return {Statistics::Fermion, Statistics::Boson};
    }
    throw ValidationError("--stats must be fermion, boson, or both");
}

struct SweepRange {
    std::string parameter = "c";
    std::vector<double> values;
};

SweepRange parse_sweep_range(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError("--sweep expects name=start:step:end, got \"" + text +
                              "\"");
    }
    SweepRange range;
    range.parameter = text.substr(0, eq);
    const std::string body = text.substr(eq + 1);
    const auto c1 = body.find(':');
    const auto c2 = body.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ValidationError("--sweep expects name=start:step:end, got \"" + text +
                              "\"");
    }
    const double start = parse_number(body.substr(0, c1), "--sweep start");
    const double step = parse_number(body.substr(c1 + 1, c2 - c1 - 1), "--sweep step");
    const double end = parse_number(body.substr(c2 + 1), "--sweep end");
    if (!(step > 0.0)) {
        throw ValidationError("--sweep: step must be > 0");
    }
    if (end < start) {
        throw ValidationError("--sweep: end must be >= start");
    }
    auto count = static_cast<long long>(std::llround((end - start) / step));
    const double slack =
        1e-9 * std::max({1.0, std::abs(start), std::abs(end), std::abs(step)});
    while (count > 0 && start + static_cast<double>(count) * step > end + slack) {
        --count;
    }
    for (long long k = 0; k <= count; ++k) {
        range.values.push_back(start + static_cast<double>(k) * step);
    }
    return range;
}

std::size_t sweep_threads() {
    const char* env = std::getenv("QGW_THREADS");
    if (env == nullptr || *env == '\0') {
        return 0;  // auto
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw ValidationError("QGW_THREADS must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open output file \"" + path + "\"");
    }
    f << content;
    f.flush();
    if (!f) {
        throw IoError("failed writing output file \"" + path + "\"");
    }
}

int cmd_validate(const GraphOptions& graph_opt, std::ostream& out) {
    const GraphSpec spec = load_graph(graph_opt);
    const Hamiltonian h = build_hamiltonian(spec);
    const SpectralDecomposition dec = decompose(h);

    out << spec.sites.size() << " sites, " << spec.edges.size() << " edges, "
        << spec.parameters.size() << " parameters\n";
    out << "hamiltonian dimension: " << h.size() << "\n";
    if (h.size() >= 2) {
        out << "spectral gap: " << fmt(dec.eigenvalues[1] - dec.eigenvalues[0])
            << "\n";
    } else {
        out << "spectral gap: n/a (single site)\n";
    }
    return 0;
}

int cmd_single(const GraphOptions& graph_opt, const GridOptions& grid_opt,
               SiteId from, SiteId to, const std::string& out_path,
               std::ostream& out) {
    const GraphSpec spec = load_graph(graph_opt);
    const Hamiltonian h = build_hamiltonian(spec);
    if (from >= h.size() || to >= h.size()) {
        throw ValidationError("--from/--to: site " +
                              std::to_string(from >= h.size() ? from : to) +
                              " out of range (" + std::to_string(h.size()) +
                              " sites)");
    }
    const TimeGrid grid = TimeGrid::from_duration(grid_opt.duration, grid_opt.dt);
    const ProbabilitySeries series =
        probability_series(decompose(h), from, to, grid);

    std::string csv = "t,P\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        csv += fmt(series.time(i));
        csv += ',';
        csv += fmt(series.value(i));
        csv += '\n';
    }
    write_output(out_path, csv, out);
    return 0;
}

int cmd_pair(const GraphOptions& graph_opt, const GridOptions& grid_opt,
             const std::string& stats_text, const std::string& subset_text,
             SiteId init_a, SiteId init_b, const std::string& out_path,
             std::ostream& out) {
    const GraphSpec spec = load_graph(graph_opt);
    const Hamiltonian h = build_hamiltonian(spec);
    const std::vector<Statistics> stats = parse_stats(stats_text);
    const SiteSubset subset = parse_subset(subset_text, h.size());
    const TimeGrid grid = TimeGrid::from_duration(grid_opt.duration, grid_opt.dt);
    const SpectralDecomposition dec = decompose(h);

    std::vector<ProbabilitySeries> columns;
    columns.reserve(stats.size());
    for (Statistics st : stats) {
        const PairState pair0 = initial_pair(h.size(), init_a, init_b, st);
        columns.push_back(p_perp_series(dec, pair0, subset, grid));
    }

    std::string csv = "t";
    for (Statistics st : stats) {
        csv += ",P_perp_";
        csv += to_string(st);
    }
    csv += '\n';
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        csv += fmt(grid.time(i));
        for (const ProbabilitySeries& col : columns) {
            csv += ',';
            csv += fmt(col.value(i));
        }
        csv += '\n';
    }
    write_output(out_path, csv, out);
    return 0;
}

int cmd_sweep(const GraphOptions& graph_opt, const GridOptions& grid_opt,
              const std::string& stats_text, const std::string& subset_text,
              const std::string& sweep_text, bool baseline, SiteId init_a,
              SiteId init_b, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    const GraphSpec spec = load_graph(graph_opt);
    SweepRange range = parse_sweep_range(sweep_text);
    if (baseline) {
        range.values.insert(range.values.begin(), 0.0);
    }

    SweepSpec sweep_spec;
    sweep_spec.base = spec;
    sweep_spec.parameter = range.parameter;
    sweep_spec.values = std::move(range.values);
    sweep_spec.statistics = parse_stats(stats_text);
    sweep_spec.subset = parse_subset(subset_text, spec.site_count());
    sweep_spec.grid = TimeGrid::from_duration(grid_opt.duration, grid_opt.dt);
    sweep_spec.initial_a = init_a;
    sweep_spec.initial_b = init_b;

    const bool referenced =
        std::any_of(spec.edges.begin(), spec.edges.end(), [&](const Edge& e) {
            const auto* name = std::get_if<std::string>(&e.coupling);
            return name != nullptr && *name == sweep_spec.parameter;
        });
    if (!referenced) {
        err << "note: no edge references parameter \"" << sweep_spec.parameter
            << "\"; every row will coincide\n";
    }

    const std::vector<SweepRow> rows = sweep(sweep_spec, sweep_threads());

    std::string csv = "param,statistics,lambda,tau,T,dt\n";
    std::size_t floored = 0;
    for (const SweepRow& row : rows) {
        csv += fmt(row.value);
        csv += ',';
        csv += to_string(row.statistics);
        csv += ',';
        csv += fmt(row.lambda);
        csv += ',';
        csv += fmt(row.tau);
        csv += ',';
        csv += fmt(sweep_spec.grid.duration());
        csv += ',';
        csv += fmt(sweep_spec.grid.dt());
        csv += '\n';
        floored += row.floored_samples;
    }
    write_output(out_path, csv, out);
    if (floored > 0) {
        err << "note: " << floored << " samples hit the 1e-15 log floor\n";
    }
    return 0;
}

int cmd_dims(const GraphOptions& graph_opt, const std::string& subset_text,
             std::ostream& out) {
    const GraphSpec spec = load_graph(graph_opt);
    const std::size_t n = spec.site_count();
    if (!subset_text.empty()) {
        const SiteSubset subset = parse_subset(subset_text, n);
        if (subset.empty()) {
            throw ValidationError("--subset: empty subset");
        }
        out << "subset (" << subset.size() << " sites): boson: "
            << pair_dimension(subset.size(), Statistics::Boson) << ", fermion: "
            << pair_dimension(subset.size(), Statistics::Fermion) << "\n";
    }
    out << "full (" << n << " sites): boson: " << pair_dimension(n, Statistics::Boson)
        << ", fermion: " << pair_dimension(n, Statistics::Fermion) << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continuous-time quantum walks of one or two particles on "
                 "quantum-dot graphs"};
    app.require_subcommand(1);

    GraphOptions graph_opt;
    GridOptions grid_opt;
    std::string out_path;
    std::string stats_text = "both";
    std::string subset_text = "0-7";
    std::string dims_subset_text;
    std::string sweep_text = "c=0.01:0.01:0.30";
    bool baseline = false;
    SiteId from = 0;
    SiteId to = 2;
    SiteId init_a = 0;
    SiteId init_b = 1;

    CLI::App* validate = app.add_subcommand(
        "validate", "Check a graph spec and print a summary");
    add_graph_options(validate, graph_opt);

    CLI::App* single = app.add_subcommand(
        "single", "One-particle transition probability series (CSV)");
    add_graph_options(single, graph_opt);
    add_grid_options(single, grid_opt);
    single->add_option("--from", from, "Start site")->capture_default_str();
    single->add_option("--to", to, "Target site")->capture_default_str();
    single->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* pair = app.add_subcommand(
        "pair", "Two-particle confinement probability series (CSV)");
    add_graph_options(pair, graph_opt);
    add_grid_options(pair, grid_opt);
    pair->add_option("--stats", stats_text, "fermion|boson|both")
        ->capture_default_str();
    pair->add_option("--subset", subset_text,
                     "Confinement sites, e.g. 0-7 or 0,1,4 or all")
        ->capture_default_str();
    pair->add_option("--init-a", init_a, "First occupied site")->capture_default_str();
    pair->add_option("--init-b", init_b, "Second occupied site")
        ->capture_default_str();
    pair->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Half-passage time over a coupling parameter range (CSV)");
    add_graph_options(sweep_cmd, graph_opt);
    add_grid_options(sweep_cmd, grid_opt);
    sweep_cmd->add_option("--sweep", sweep_text, "name=start:step:end")
        ->capture_default_str();
    sweep_cmd->add_flag("--baseline", baseline,
                        "Prepend a row with the swept parameter set to 0");
    sweep_cmd->add_option("--stats", stats_text, "fermion|boson|both")
        ->capture_default_str();
    sweep_cmd->add_option("--subset", subset_text, "Confinement sites")
        ->capture_default_str();
    sweep_cmd->add_option("--init-a", init_a, "First occupied site")
        ->capture_default_str();
    sweep_cmd->add_option("--init-b", init_b, "Second occupied site")
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* dims = app.add_subcommand(
        "dims", "Two-particle space dimensions for a graph");
    add_graph_options(dims, graph_opt);
    dims->add_option("--subset", dims_subset_text,
                     "Also report the dimensions on this site subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto& parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(graph_opt, out);
        }
        if (single->parsed()) {
            return cmd_single(graph_opt, grid_opt, from, to, out_path, out);
        }
        if (pair->parsed()) {
            return cmd_pair(graph_opt, grid_opt, stats_text, subset_text, init_a,
                            init_b, out_path, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(graph_opt, grid_opt, stats_text, subset_text, sweep_text,
                             baseline, init_a, init_b, out_path, out, err);
        }
        return cmd_dims(graph_opt, dims_subset_text, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qgw");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qgw::cli
