#include "mas/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mas {

BoolMatrix BoolMatrix::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    BoolMatrix m;
    m.n = n;
    m.rows.resize(n);
    for (auto [from, to] : edges) {
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw std::out_of_range("edge index out of range: " + std::to_string(from) + " -> " +
                                    std::to_string(to));
        m.rows[to].push_back(from);
    }
    for (auto& row : m.rows) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return m;
}

bool BoolMatrix::has_entry(int row, int col) const {
    const auto& r = rows[row];
    return std::binary_search(r.begin(), r.end(), col);
}

void BoolMatrix::validate() const {
    if ((int)rows.size() != n) throw std::invalid_argument("row count does not match n");
    for (int i = 0; i < n; ++i) {
        int prev = -1;
        for (int j : rows[i]) {
            if (j < 0 || j >= n) throw std::invalid_argument("column index out of range");
            if (j <= prev) throw std::invalid_argument("row indices not strictly increasing");
            prev = j;
        }
    }
}

BoolMatrix WeightedMatrix::pattern() const {
    BoolMatrix m;
    m.n = n;
    m.rows.resize(n);
    for (int i = 0; i < n; ++i) {
        m.rows[i].reserve(rows[i].size());
        for (auto& [j, w] : rows[i]) m.rows[i].push_back(j);
    }
    return m;
}

double WeightedMatrix::weight(int row, int col) const {
    const auto& r = rows[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? it->second : 0.0;
}

void WeightedMatrix::validate() const {
    if ((int)rows.size() != n) throw std::invalid_argument("row count does not match n");
    for (int i = 0; i < n; ++i) {
        int prev = -1;
        for (auto& [j, w] : rows[i]) {
            if (j < 0 || j >= n) throw std::invalid_argument("column index out of range");
            if (j <= prev) throw std::invalid_argument("row indices not strictly increasing");
            if (!(w > 0.0)) throw std::invalid_argument("weights must be strictly positive");
            prev = j;
        }
    }
}

namespace {

// Iterative Tarjan over the out-adjacency of m. Components are emitted
// only after everything reachable from them, so the emission order is
// exactly the Frobenius block order under the in-row convention: every
// condensation edge points from a later component to an earlier one.
std::vector<IndexSet> tarjan_sccs(const BoolMatrix& m) {
    const int n = m.n;
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < n; ++i)
        for (int j : m.rows[i]) out[j].push_back(i);

    std::vector<int> index(n, -1), lowlink(n, 0), stack_pos(n, -1);
    std::vector<int> stack;
    std::vector<IndexSet> sccs;
    int counter = 0;

    struct Frame {
        int v;
        size_t next_child;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = lowlink[v] = counter++;
                stack_pos[v] = (int)stack.size();
                stack.push_back(v);
            }
            bool descended = false;
            while (child < out[v].size()) {
                int w = out[v][child++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (stack_pos[w] != -1) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                IndexSet scc(stack.begin() + stack_pos[v], stack.end());
                for (int u : scc) stack_pos[u] = -1;
                stack.resize(stack.size() - scc.size());
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[finished]);
        }
    }
    return sccs;
}

}  // namespace

std::vector<IndexSet> strongly_connected_components(const BoolMatrix& m) {
    return tarjan_sccs(m);
}

bool is_acyclic(const BoolMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        if (m.has_entry(i, i)) return false;
    for (const auto& scc : tarjan_sccs(m))
        if (scc.size() > 1) return false;
    return true;
}

FrobeniusForm frobenius_factorize(const BoolMatrix& m) {
    FrobeniusForm f;
    f.blocks = tarjan_sccs(m);
    f.block_of.resize(m.n);
    f.pos_of.resize(m.n);
    f.order.reserve(m.n);
    for (int b = 0; b < (int)f.blocks.size(); ++b) {
        for (int v : f.blocks[b]) {
            f.block_of[v] = b;
            f.pos_of[v] = (int)f.order.size();
            f.order.push_back(v);
        }
    }
    return f;
}

BoolMatrix restrict_to(const BoolMatrix& m, const IndexSet& s) {
    std::vector<int> local(m.n, -1);
    for (int k = 0; k < (int)s.size(); ++k) {
        int v = s[k];
        if (v < 0 || v >= m.n) throw std::out_of_range("restriction index out of range");
        local[v] = k;
    }
    BoolMatrix r;
    r.n = (int)s.size();
    r.rows.resize(r.n);
    for (int k = 0; k < r.n; ++k)
        for (int j : m.rows[s[k]])
            if (local[j] != -1) r.rows[k].push_back(local[j]);
    return r;
}

WeightedMatrix restrict_to(const WeightedMatrix& m, const IndexSet& s) {
    std::vector<int> local(m.n, -1);
    for (int k = 0; k < (int)s.size(); ++k) {
        int v = s[k];
        if (v < 0 || v >= m.n) throw std::out_of_range("restriction index out of range");
        local[v] = k;
    }
    WeightedMatrix r;
    r.n = (int)s.size();
    r.rows.resize(r.n);
    for (int k = 0; k < r.n; ++k)
        for (auto& [j, w] : m.rows[s[k]])
            if (local[j] != -1) r.rows[k].push_back({local[j], w});
    return r;
}

long edge_count(const BoolMatrix& m) {
    long total = 0;
    for (const auto& row : m.rows) total += (long)row.size();
    return total;
}

}  // namespace mas
