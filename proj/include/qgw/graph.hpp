#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qgw {

using SiteId = std::size_t;

struct Site {
    SiteId id = 0;
    double potential = 0.0;

    friend bool operator==(const Site&, const Site&) = default;
};

/// Edge coupling: either a literal value or the name of an entry in
/// GraphSpec::parameters.
using Coupling = std::variant<double, std::string>;

struct Edge {
    SiteId a = 0;
    SiteId b = 0;
    Coupling coupling = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Declarative description of a quantum-dot graph: sites with on-site
/// potentials, undirected tunnel-coupling edges, and named coupling
/// parameters. Energies are dimensionless (hbar = 1).
///
/// Instances coming out of parse_graph_spec or the builtin_* builders are
/// validated: site ids are exactly 0..N-1 with no duplicates, there are no
/// self-loops or duplicate undirected edges, and every parameter name
/// referenced by an edge exists in `parameters`.
struct GraphSpec {
    std::vector<Site> sites;
    std::vector<Edge> edges;
    std::map<std::string, double> parameters;

    std::size_t site_count() const { return sites.size(); }

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Checks all GraphSpec invariants; throws ValidationError naming the
/// offending site or edge.
void validate_graph_spec(const GraphSpec& spec);

/// Parses and validates a JSON graph document (schema in the README).
/// Throws SyntaxError for malformed JSON, ValidationError for anything that
/// parses but violates the schema or the graph invariants.
GraphSpec parse_graph_spec(const std::string& text);

/// Inverse of parse_graph_spec: parse_graph_spec(serialize_graph_spec(g)) == g.
std::string serialize_graph_spec(const GraphSpec& spec);

/// Dense real symmetric Hamiltonian. The diagonal holds on-site potentials,
/// off-diagonal entries hold the resolved edge couplings, everything else is
/// zero. Assembled symmetrically, so entries(i,j) == entries(j,i) exactly.
class Hamiltonian {
  public:
    Hamiltonian() = default;
    explicit Hamiltonian(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    void set_diagonal(std::size_t i, double value) { entries_[i * n_ + i] = value; }

    /// Sets (i,j) and (j,i) together.
    void set_coupling(std::size_t i, std::size_t j, double value) {
        entries_[i * n_ + j] = value;
        entries_[j * n_ + i] = value;
    }

    /// Row-major storage, length size()*size().
    const std::vector<double>& entries() const { return entries_; }

  private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

/// Assembles the Hamiltonian of a validated GraphSpec. Overrides take
/// precedence over spec.parameters but must name parameters that exist there;
/// unknown names raise UnknownParameterError.
Hamiltonian build_hamiltonian(const GraphSpec& spec,
                              const std::map<std::string, double>& overrides = {});

/// Four dots on a parallelogram with couplings b (short sides), s (long
/// sides) and the chord c between dots 1 and 3 that closes the Braess
/// shortcut. All potentials V0. A zero c omits the chord, leaving the plain
/// 4-cycle.
GraphSpec builtin_braess4(double b, double s, double c, double V0);

/// Ten-dot two-branch network. Initial double dot {0,1} (potential V1),
/// upper branch {2,3} (Eu) + single dot {4} (Vu), lower branch {5,6} (Ed) +
/// single dot {7} (Vd), final double dot {8,9} (V2). Intra-pair coupling s,
/// upper path h on (1,2),(3,4),(4,8), lower path l on (1,5),(6,7),(7,8), and
/// the cross edge c between the single dots (4,7). A zero c omits the cross
/// edge, leaving the two-path graph.
GraphSpec builtin_braess10(double l, double h, double s, double c,
                           double V1, double V2, double Eu, double Ed,
                           double Vu, double Vd);

}  // namespace qgw
