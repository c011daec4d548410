#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mas/io.hpp"
#include "mas/oracle.hpp"

namespace {

using namespace mas;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path);
    out << text;
}

std::vector<std::pair<int, int>> edges_of(const BoolMatrix& m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m.n; ++i)
        for (int j : m.rows[i]) edges.push_back({j, i});
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<IndexSet> load_untouchable(const std::string& path, bool one_based, int n) {
    auto parsed = parse_edge_list(read_text(path), one_based);
    if (parsed.matrix.n > n) throw parse_error("untouchable edge index exceeds graph size");
    std::vector<IndexSet> sets(n);
    for (int i = 0; i < parsed.matrix.n; ++i) sets[i] = parsed.matrix.rows[i];
    return sets;
}

std::vector<double> load_budgets(const std::string& path, bool one_based, int n) {
    std::vector<double> budgets(n, 0.0);
    std::istringstream in(read_text(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long v;
        double r;
        if (!(fields >> v >> r) || r < 0)
            throw parse_error("budgets file line " + std::to_string(line_no) +
                              ": expected 'vertex budget'");
        if (one_based) --v;
        if (v < 0 || v >= n)
            throw parse_error("budgets file line " + std::to_string(line_no) +
                              ": vertex out of range");
        budgets[v] = r;
    }
    return budgets;
}

std::string render(const ResultDocument& doc, const std::string& format) {
    return format == "csv" ? to_csv(doc) : to_json(doc);
}

struct CommonOpts {
    std::string input = "-";
    std::string output;
    std::string format = "json";
    bool one_based = false;
    bool debug_asserts = false;
    std::string untouchable_path;
    std::string budgets_path;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input) cmd->add_option("--input", opts.input, "edge-list file, '-' for stdin");
    cmd->add_option("--output", opts.output, "output path, stdout when omitted");
    cmd->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--one-based", opts.one_based, "treat vertex indices as 1-based");
    cmd->add_flag("--debug-asserts", opts.debug_asserts, "verify solver invariants at runtime");
}

int run_maxmas(const CommonOpts& opts, bool with_approx) {
    auto parsed = parse_edge_list(read_text(opts.input), opts.one_based);
    SolveConfig cfg;
    cfg.debug_asserts = opts.debug_asserts;

    ResultDocument doc;
    doc.n = parsed.matrix.n;
    doc.input_edges = edge_count(parsed.matrix);

    BoolMatrix g0;
    BudgetSpec constraint;
    if (!opts.untouchable_path.empty()) {
        auto untouchable = load_untouchable(opts.untouchable_path, opts.one_based, parsed.matrix.n);
        auto sol = solve_problem3(parsed.matrix, untouchable, cfg);
        doc.problem = "maxmas-untouchable";
        doc.feasible = sol.feasible;
        if (!sol.feasible) {
            write_text(opts.output, render(doc, opts.format));
            std::cerr << "infeasible: the protected subgraph contains a cycle\n";
            return kExitInfeasible;
        }
        doc.r_star = sol.r_star;
        doc.per_vertex_cuts = sol.per_vertex_cuts;
        doc.eig_count = sol.eig_count;
        doc.wall_time_ms = sol.wall_time_ms;
        g0 = std::move(sol.g0);
        constraint = BudgetSpec::uniform(parsed.matrix.n, sol.r_star);
        constraint.untouchable = std::move(untouchable);
    } else if (parsed.weights) {
        auto sol = solve_problem2(*parsed.weights, cfg);
        doc.problem = "maxmas-weighted";
        doc.budget = sol.budget;
        doc.eig_count = sol.eig_count;
        doc.wall_time_ms = sol.wall_time_ms;
        g0 = std::move(sol.g0);
        constraint = BudgetSpec::uniform(parsed.matrix.n, sol.budget);
        constraint.weights = parsed.weights;
    } else {
        auto sol = solve_max_mas(parsed.matrix, cfg);
        doc.problem = "maxmas";
        doc.r_star = sol.r_star;
        doc.per_vertex_cuts = sol.per_vertex_cuts;
        doc.eig_count = sol.eig_count;
        doc.wall_time_ms = sol.wall_time_ms;
        g0 = std::move(sol.g0);
        constraint = BudgetSpec::uniform(parsed.matrix.n, sol.r_star);
    }

    if (with_approx) {
        auto approx = approx_mas_constrained(parsed.matrix, g0, constraint);
        doc.problem = "approx-mas";
        doc.gamma = approx.gamma;
        doc.ordering = approx.ordering;
        doc.output_edges = edges_of(approx.g_bar);
        doc.per_vertex_cuts.clear();
        for (int i = 0; i < parsed.matrix.n; ++i)
            doc.per_vertex_cuts.push_back(
                (int)(parsed.matrix.rows[i].size() - approx.g_bar.rows[i].size()));
    } else {
        // Publish the budget-compliant restoration rather than the raw
        // witness: it keeps the same r_star but retains every input edge
        // consistent with the witness ordering.
        auto restored = approx_mas_constrained(parsed.matrix, g0, constraint);
        doc.output_edges = edges_of(restored.g_bar);
        doc.per_vertex_cuts.clear();
        for (int i = 0; i < parsed.matrix.n; ++i)
            doc.per_vertex_cuts.push_back(
                (int)(parsed.matrix.rows[i].size() - restored.g_bar.rows[i].size()));
    }
    write_text(opts.output, render(doc, opts.format));
    return kExitOk;
}

int run_minrho(const CommonOpts& opts, std::optional<double> uniform_budget) {
    auto parsed = parse_edge_list(read_text(opts.input), opts.one_based);
    SolveConfig cfg;
    cfg.debug_asserts = opts.debug_asserts;

    BudgetSpec spec;
    if (!opts.budgets_path.empty())
        spec.budgets = load_budgets(opts.budgets_path, opts.one_based, parsed.matrix.n);
    else if (uniform_budget)
        spec = BudgetSpec::uniform(parsed.matrix.n, *uniform_budget);
    else
        throw parse_error("minrho requires --budget or --budgets");
    if (parsed.weights) spec.weights = parsed.weights;
    if (!opts.untouchable_path.empty())
        spec.untouchable = load_untouchable(opts.untouchable_path, opts.one_based, parsed.matrix.n);

    auto res = min_rho_over_ball(parsed.matrix, spec, cfg);

    ResultDocument doc;
    doc.problem = "minrho";
    doc.n = parsed.matrix.n;
    doc.input_edges = edge_count(parsed.matrix);
    doc.rho = res.rho;
    doc.feasible = res.rho == 0.0;
    doc.eig_count = res.eig_count;
    doc.output_edges = edges_of(res.x_hat);
    for (int i = 0; i < parsed.matrix.n; ++i)
        doc.per_vertex_cuts.push_back(
            (int)(parsed.matrix.rows[i].size() - res.x_hat.rows[i].size()));
    write_text(opts.output, render(doc, opts.format));
    return kExitOk;
}

int run_oracle(const CommonOpts& opts, const std::string& kind, int budget) {
    auto parsed = parse_edge_list(read_text(opts.input), opts.one_based);
    const auto& a = parsed.matrix;
    ResultDocument doc;
    doc.n = a.n;
    doc.input_edges = edge_count(a);
    if (kind == "mas") {
        auto res = exact_mas(a);
        doc.problem = "oracle-mas";
        doc.gamma = doc.input_edges == 0 ? 1.0 : res.value / (double)doc.input_edges;
        doc.ordering = *res.order;
        doc.rho = res.value;  // kept edge count
    } else if (kind == "maxmas") {
        auto res = exact_max_mas(a);
        doc.problem = "oracle-maxmas";
        doc.r_star = (int)res.value;
        doc.ordering = *res.order;
    } else {
        auto res = exact_min_rho(a, std::vector<int>(a.n, budget));
        doc.problem = "oracle-minrho";
        doc.rho = res.value;
        if (res.witness) doc.output_edges = edges_of(*res.witness);
    }
    write_text(opts.output, render(doc, opts.format));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-MAS solver: spectral-radius minimization over per-vertex cut budgets"};
    app.require_subcommand(1);

    CommonOpts opts;
    double budget = 0;
    std::string oracle_kind;
    GenSpec gen_spec;
    std::string family = "uniform";
    std::vector<int> bench_n{50};
    std::vector<double> bench_p_edge{0.3};
    std::vector<int> bench_k{10};
    double bench_p = 0.1;
    int trials = 20;

    auto* maxmas = app.add_subcommand("maxmas", "minimal uniform per-vertex cut budget");
    add_common(maxmas, opts);
    maxmas->add_option("--untouchable", opts.untouchable_path, "protected edge-list file");

    auto* minrho = app.add_subcommand("minrho", "minimize rho over the budget ball");
    add_common(minrho, opts);
    auto* budget_opt = minrho->add_option("--budget", budget, "uniform per-vertex budget");
    minrho->add_option("--budgets", opts.budgets_path, "per-vertex budgets file: 'vertex budget'");
    minrho->add_option("--untouchable", opts.untouchable_path, "protected edge-list file");

    auto* approx = app.add_subcommand("approx-mas", "approximate MAS via max-MAS + reordering");
    add_common(approx, opts);
    approx->add_option("--untouchable", opts.untouchable_path, "protected edge-list file");

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth for small graphs");
    oracle->require_subcommand(1);
    for (const char* kind : {"mas", "maxmas", "minrho"}) {
        auto* sub = oracle->add_subcommand(kind);
        add_common(sub, opts);
        if (std::string(kind) == "minrho") sub->add_option("--budget", budget)->required();
        sub->callback([&, kind] { oracle_kind = kind; });
    }

    auto* gen = app.add_subcommand("gen", "generate a random graph edge list");
    gen->require_subcommand(1);
    auto* gen_uni = gen->add_subcommand("uniform");
    auto* gen_sw = gen->add_subcommand("smallworld");
    for (auto* sub : {gen_uni, gen_sw}) {
        add_common(sub, opts, /*with_input=*/false);
        sub->add_option("--n", gen_spec.n)->required();
        sub->add_option("--seed", gen_spec.seed);
    }
    gen_uni->add_option("--p-edge", gen_spec.p_edge)->required();
    gen_uni->add_flag("--self-loops", gen_spec.allow_self_loops);
    gen_sw->add_option("--k", gen_spec.k)->required();
    gen_sw->add_option("--p", gen_spec.p)->required();

    auto* bench = app.add_subcommand("bench", "seeded experiment tables");
    add_common(bench, opts, /*with_input=*/false);
    bench->add_option("--family", family)->check(CLI::IsMember({"uniform", "smallworld"}));
    bench->add_option("--n", bench_n, "vertex counts (repeatable)");
    bench->add_option("--p-edge", bench_p_edge, "uniform densities (repeatable)");
    bench->add_option("--k", bench_k, "small-world degrees (repeatable)");
    bench->add_option("--p", bench_p, "small-world rewiring probability");
    bench->add_option("--trials", trials, "instances per cell");
    bench->add_option("--seed", opts.seed);

    auto* validate = app.add_subcommand("validate", "re-validate a result document");
    add_common(validate, opts);
    std::string result_path;
    validate->add_option("--result", result_path, "result document (json)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (maxmas->parsed()) return run_maxmas(opts, /*with_approx=*/false);
        if (approx->parsed()) return run_maxmas(opts, /*with_approx=*/true);
        if (minrho->parsed())
            return run_minrho(opts, budget_opt->count() ? std::optional(budget) : std::nullopt);
        if (oracle->parsed()) return run_oracle(opts, oracle_kind, (int)budget);
        if (gen->parsed()) {
            gen_spec.family = gen_uni->parsed() ? GraphFamily::uniform_density
                                                : GraphFamily::small_world;
            write_text(opts.output, serialize_edge_list(generate(gen_spec), opts.one_based));
            return kExitOk;
        }
        if (bench->parsed()) {
            std::vector<GenSpec> specs;
            for (int n : bench_n) {
                if (family == "uniform") {
                    for (double p : bench_p_edge)
                        specs.push_back({GraphFamily::uniform_density, n, p, 0, 0.0, opts.seed});
                } else {
                    for (int k : bench_k)
                        specs.push_back({GraphFamily::small_world, n, 0.0, k, bench_p, opts.seed});
                }
            }
            SolveConfig cfg;
            cfg.debug_asserts = opts.debug_asserts;
            auto report = run_table(specs, trials, cfg);
            write_text(opts.output, opts.format == "csv" ? to_csv(report) : to_json(report));
            return kExitOk;
        }
        if (validate->parsed()) {
            auto parsed = parse_edge_list(read_text(opts.input), opts.one_based);
            auto doc = result_from_json(read_text(result_path));
            validate_result(doc, parsed.matrix);
            std::cout << "ok\n";
            return kExitOk;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
