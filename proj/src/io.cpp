#include "mas/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mas {

using nlohmann::json;

ParsedGraph parse_edge_list(const std::string& text, bool one_based) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    bool any_weight = false;
    std::map<std::pair<int, int>, double> edges;  // (to, from) -> weight
    int max_index = -1;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string head;
        fields >> head;
        if (head == "n") {
            long count = -1;
            if (!(fields >> count) || count < 0)
                throw parse_error("line " + std::to_string(line_no) + ": malformed vertex count");
            declared_n = (int)count;
            continue;
        }

        long u, v;
        double w = 1.0;
        std::istringstream edge_fields(line);
        if (!(edge_fields >> u >> v))
            throw parse_error("line " + std::to_string(line_no) + ": expected 'u v' or 'u v w'");
        bool has_weight = bool(edge_fields >> w);
        std::string trailing;
        if (edge_fields >> trailing)
            throw parse_error("line " + std::to_string(line_no) + ": trailing tokens");
        if (has_weight && !(w > 0.0))
            throw parse_error("line " + std::to_string(line_no) + ": weight must be positive");
        if (one_based) {
            --u;
            --v;
        }
        if (u < 0 || v < 0 || u > 100'000'000 || v > 100'000'000)
            throw parse_error("line " + std::to_string(line_no) + ": vertex index out of range");
        any_weight |= has_weight;

        auto key = std::pair{(int)v, (int)u};  // row = target, col = source
        auto [it, inserted] = edges.insert({key, w});
        if (!inserted) {
            if (has_weight && it->second != w)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": duplicate edge with conflicting weight");
        }
        max_index = std::max({max_index, (int)u, (int)v});
    }

    const int n = std::max(declared_n, max_index + 1);
    if (declared_n >= 0 && max_index >= declared_n)
        throw parse_error("vertex index " + std::to_string(max_index) +
                          " exceeds the declared count");

    ParsedGraph out;
    out.matrix.n = n;
    out.matrix.rows.resize(n);
    for (auto& [key, w] : edges) out.matrix.rows[key.first].push_back(key.second);
    if (any_weight) {
        WeightedMatrix wm;
        wm.n = n;
        wm.rows.resize(n);
        for (auto& [key, w] : edges) wm.rows[key.first].push_back({key.second, w});
        out.weights = std::move(wm);
    }
    return out;
}

std::string serialize_edge_list(const BoolMatrix& m, bool one_based) {
    std::vector<std::pair<int, int>> edges;  // (from, to)
    for (int i = 0; i < m.n; ++i)
        for (int j : m.rows[i]) edges.push_back({j, i});
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "n " << m.n << "\n";
    const int base = one_based ? 1 : 0;
    for (auto [u, v] : edges) out << (u + base) << " " << (v + base) << "\n";
    return out.str();
}

std::string serialize_edge_list(const WeightedMatrix& m, bool one_based) {
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i < m.n; ++i)
        for (auto& [j, w] : m.rows[i]) edges.push_back({j, i, w});
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "n " << m.n << "\n";
    const int base = one_based ? 1 : 0;
    for (auto& [u, v, w] : edges) out << (u + base) << " " << (v + base) << " " << w << "\n";
    return out.str();
}

std::string to_json(const ResultDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["problem"] = doc.problem;
    j["n"] = doc.n;
    j["input_edges"] = doc.input_edges;
    if (doc.r_star) j["r_star"] = *doc.r_star;
    if (doc.budget) j["budget"] = *doc.budget;
    if (doc.feasible) j["feasible"] = *doc.feasible;
    if (!doc.per_vertex_cuts.empty()) j["per_vertex_cuts"] = doc.per_vertex_cuts;
    if (doc.gamma) j["gamma"] = *doc.gamma;
    if (doc.rho) j["rho"] = *doc.rho;
    j["eig_count"] = doc.eig_count;
    j["wall_time_ms"] = doc.wall_time_ms;
    auto& edges = j["output_edges"] = json::array();
    for (auto [u, v] : doc.output_edges) edges.push_back({u, v});
    if (!doc.ordering.empty()) j["ordering"] = doc.ordering;
    return j.dump(2) + "\n";
}

ResultDocument result_from_json(const std::string& text) {
    json j = json::parse(text);
    ResultDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    doc.problem = j.at("problem").get<std::string>();
    doc.n = j.at("n").get<int>();
    doc.input_edges = j.at("input_edges").get<long>();
    if (j.contains("r_star")) doc.r_star = j["r_star"].get<int>();
    if (j.contains("budget")) doc.budget = j["budget"].get<double>();
    if (j.contains("feasible")) doc.feasible = j["feasible"].get<bool>();
    if (j.contains("per_vertex_cuts")) doc.per_vertex_cuts = j["per_vertex_cuts"].get<std::vector<int>>();
    if (j.contains("gamma")) doc.gamma = j["gamma"].get<double>();
    if (j.contains("rho")) doc.rho = j["rho"].get<double>();
    doc.eig_count = j.at("eig_count").get<long>();
    doc.wall_time_ms = j.at("wall_time_ms").get<double>();
    for (const auto& e : j.at("output_edges"))
        doc.output_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (j.contains("ordering")) doc.ordering = j["ordering"].get<std::vector<int>>();
    return doc;
}

std::string to_csv(const ResultDocument& doc) {
    std::ostringstream out;
    out << "schema_version,problem,n,input_edges,r_star,budget,feasible,gamma,rho,"
           "eig_count,wall_time_ms,output_edges\n";
    auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
    out << doc.schema_version << "," << doc.problem << "," << doc.n << "," << doc.input_edges
        << "," << opt_int(doc.r_star) << ",";
    if (doc.budget) out << *doc.budget;
    out << ",";
    if (doc.feasible) out << (*doc.feasible ? "true" : "false");
    out << ",";
    if (doc.gamma) out << *doc.gamma;
    out << ",";
    if (doc.rho) out << *doc.rho;
    out << "," << doc.eig_count << "," << doc.wall_time_ms << ",\"";
    for (size_t i = 0; i < doc.output_edges.size(); ++i) {
        if (i) out << ";";
        out << doc.output_edges[i].first << "->" << doc.output_edges[i].second;
    }
    out << "\"\n";
    return out.str();
}

void validate_result(const ResultDocument& doc, const BoolMatrix& input) {
    BoolMatrix out = BoolMatrix::from_edges(doc.n, doc.output_edges);
    if (doc.n != input.n) throw parse_error("result document n does not match the input graph");
    if (!is_acyclic(out) && doc.problem != "minrho" && !(doc.feasible && !*doc.feasible))
        throw parse_error("result document output graph is not acyclic");
    for (int i = 0; i < out.n; ++i)
        if (!std::includes(input.rows[i].begin(), input.rows[i].end(), out.rows[i].begin(),
                           out.rows[i].end()))
            throw parse_error("result document output is not a subgraph of the input");
    if (doc.gamma) {
        double recomputed =
            edge_count(input) == 0 ? 1.0 : (double)edge_count(out) / (double)edge_count(input);
        if (std::abs(recomputed - *doc.gamma) > 1e-9)
            throw parse_error("gamma does not recompute from edge counts");
    }
    if (!doc.per_vertex_cuts.empty()) {
        for (int i = 0; i < out.n; ++i) {
            int cuts = (int)(input.rows[i].size() - out.rows[i].size());
            if (cuts != doc.per_vertex_cuts[i])
                throw parse_error("per-vertex cut counts do not match the output graph");
        }
    }
}

namespace {

json spec_to_json(const GenSpec& spec) {
    json j;
    j["family"] = spec.family == GraphFamily::uniform_density ? "uniform" : "smallworld";
    j["n"] = spec.n;
    if (spec.family == GraphFamily::uniform_density)
        j["p_edge"] = spec.p_edge;
    else {
        j["k"] = spec.k;
        j["p"] = spec.p;
    }
    j["seed"] = spec.seed;
    return j;
}

}  // namespace

std::string to_json(const ExperimentReport& report) {
    json j;
    j["schema_version"] = kSchemaVersion;
    auto& rows = j["rows"] = json::array();
    for (const auto& row : report.rows) {
        json r = spec_to_json(row.spec);
        r["trial"] = row.trial;
        r["ok"] = row.ok;
        if (!row.ok) r["error"] = row.error;
        r["r_star"] = row.r_star;
        r["gamma"] = row.gamma;
        r["eig_count"] = row.eig_count;
        r["wall_time_ms"] = row.wall_time_ms;
        rows.push_back(std::move(r));
    }
    auto& cells = j["cells"] = json::array();
    for (const auto& cell : report.cells) {
        json c = spec_to_json(cell.spec);
        c["trials"] = cell.trials;
        c["mean_r_star"] = cell.mean_r_star;
        c["mean_gamma"] = cell.mean_gamma;
        c["mean_eig_count"] = cell.mean_eig_count;
        c["mean_wall_time_ms"] = cell.mean_wall_time_ms;
        cells.push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    auto spec_cols = [&](const GenSpec& spec) {
        if (spec.family == GraphFamily::uniform_density)
            out << "uniform," << spec.n << "," << spec.p_edge << ",,,";
        else
            out << "smallworld," << spec.n << ",," << spec.k << "," << spec.p << ",";
        out << spec.seed << ",";
    };
    out << "schema_version,kind,family,n,p_edge,k,p,seed,trial,ok,error,r_star,gamma,"
           "eig_count,wall_time_ms\n";
    for (const auto& row : report.rows) {
        out << kSchemaVersion << ",row,";
        spec_cols(row.spec);
        out << row.trial << "," << (row.ok ? "true" : "false") << "," << row.error << ","
            << row.r_star << "," << row.gamma << "," << row.eig_count << "," << row.wall_time_ms
            << "\n";
    }
    out << "schema_version,kind,family,n,p_edge,k,p,seed,trials,mean_r_star,mean_gamma,"
           "mean_eig_count,mean_wall_time_ms\n";
    for (const auto& cell : report.cells) {
        out << kSchemaVersion << ",cell,";
        spec_cols(cell.spec);
        out << cell.trials << "," << cell.mean_r_star << "," << cell.mean_gamma << ","
            << cell.mean_eig_count << "," << cell.mean_wall_time_ms << "\n";
    }
    return out.str();
}

}  // namespace mas
