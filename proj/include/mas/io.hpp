#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mas/graph.hpp"
#include "mas/harness.hpp"

namespace mas {

inline constexpr int kSchemaVersion = 1;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed "u v" / "u v w" edge list; weighted when any line carries a
// weight (unweighted lines then default to weight 1).
struct ParsedGraph {
    BoolMatrix matrix;
    std::optional<WeightedMatrix> weights;
};

ParsedGraph parse_edge_list(const std::string& text, bool one_based = false);

// Canonical form: explicit "n <count>" header, sorted deduplicated edges.
std::string serialize_edge_list(const BoolMatrix& m, bool one_based = false);
std::string serialize_edge_list(const WeightedMatrix& m, bool one_based = false);

// Structured record of one solve, serialized as JSON (canonical) or CSV.
struct ResultDocument {
    int schema_version = kSchemaVersion;
    std::string problem;
    int n = 0;
    long input_edges = 0;
    std::optional<int> r_star;
    std::optional<double> budget;  // weighted bisection result
    std::optional<bool> feasible;
    std::vector<int> per_vertex_cuts;
    std::optional<double> gamma;
    std::optional<double> rho;
    long eig_count = 0;
    double wall_time_ms = 0.0;
    std::vector<std::pair<int, int>> output_edges;
    std::vector<int> ordering;
};

std::string to_json(const ResultDocument& doc);
ResultDocument result_from_json(const std::string& text);
std::string to_csv(const ResultDocument& doc);

// Re-validates a loaded document against its input graph: the output
// edge list must be an acyclic subgraph and gamma must recompute from
// edge counts. Throws parse_error on violation.
void validate_result(const ResultDocument& doc, const BoolMatrix& input);

std::string to_json(const ExperimentReport& report);
std::string to_csv(const ExperimentReport& report);

}  // namespace mas
