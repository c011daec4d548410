#pragma once

#include <utility>
#include <vector>

namespace mas {

// Sorted, deduplicated vertex indices.
using IndexSet = std::vector<int>;

// Sparse Boolean adjacency matrix. Row i holds the in-neighbours of
// vertex i: rows[i] contains j  <=>  edge j -> i  <=>  entry (i, j) is 1.
struct BoolMatrix {
    int n = 0;
    std::vector<IndexSet> rows;

    static BoolMatrix from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_entry(int row, int col) const;
    void validate() const;

    bool operator==(const BoolMatrix&) const = default;
};

// Nonnegative sparse matrix with the same index discipline; entry
// weights are strictly positive.
struct WeightedMatrix {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> rows;  // (source, weight), sorted by source

    BoolMatrix pattern() const;
    double weight(int row, int col) const;  // 0 when absent
    void validate() const;
};

// Permutation bringing a matrix to block upper triangular form with
// irreducible diagonal blocks. order[p] is the original index placed at
// permuted position p; blocks are listed in permuted order and given in
// original indices.
struct FrobeniusForm {
    std::vector<int> order;
    std::vector<IndexSet> blocks;
    std::vector<int> block_of;  // per original vertex
    std::vector<int> pos_of;    // per original vertex
};

bool is_acyclic(const BoolMatrix& m);

// Partition into SCCs, ordered so that every condensation edge points
// from a later component to an earlier one (the Frobenius block order).
std::vector<IndexSet> strongly_connected_components(const BoolMatrix& m);

FrobeniusForm frobenius_factorize(const BoolMatrix& m);

// Principal submatrix on S, reindexed by position in S.
BoolMatrix restrict_to(const BoolMatrix& m, const IndexSet& s);
WeightedMatrix restrict_to(const WeightedMatrix& m, const IndexSet& s);

long edge_count(const BoolMatrix& m);

}  // namespace mas
