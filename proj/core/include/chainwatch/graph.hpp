#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <tuple>
#include <vector>

#include "chainwatch/tensor.hpp"

namespace chainwatch {

// Compressed-sparse-row matrix with a fixed pattern; columns within a row
// are stored in ascending order and never duplicated.
class SparseMatrix {
public:
    SparseMatrix() = default;

    // Edges (i, j, w); duplicates are rejected.
    static SparseMatrix from_edges(std::size_t n,
                                   std::vector<std::tuple<std::size_t, std::size_t, double>> edges);

    std::size_t n() const { return n_; }
    std::size_t nnz() const { return col_idx_.size(); }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::size_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double get(std::size_t i, std::size_t j) const;  // 0 when absent
    bool is_symmetric() const;                       // exact entry-wise test

    // this * dense, rows of the result accumulated in stored column order.
    Tensor multiply(const Tensor& dense) const;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

// Symmetric adjacency, no self-loops, unit weights (from kNN construction).
struct SparseAdjacency {
    SparseMatrix matrix;

    std::size_t n() const { return matrix.n(); }
    std::size_t edge_count() const { return matrix.nnz() / 2; }  // undirected
};

// D^{-1/2} (A + I) D^{-1/2} with D the degree matrix of (A + I).
struct NormalizedGraph {
    SparseMatrix matrix;

    std::size_t n() const { return matrix.n(); }
};

// Sample Pearson correlation; 0 by convention when either input is constant.
double pearson(std::span<const double> x, std::span<const double> y);

// For each node, rank candidates by |pearson(row_i, row_j)| descending (ties
// by smaller index), keep the top k with |corr| >= tau, then symmetrize by
// union. Unit edge weights, no self-edges.
SparseAdjacency knn_corr_graph(const Tensor& features, std::size_t k, double tau);

NormalizedGraph normalize_adjacency(const SparseAdjacency& a);

// Partition chronologically ordered rows into contiguous blocks of at most
// block_size, run knn_corr_graph per block, and assemble the block-diagonal
// normalized graph. Identical to the unchunked result when n <= block_size.
NormalizedGraph chunked_graph(const Tensor& features, std::size_t block_size, std::size_t k,
                              double tau);

// Text dump: one-line header "n m" then "i j weight" per stored entry.
void write_edge_list(const SparseMatrix& m, std::ostream& out);

}  // namespace chainwatch
