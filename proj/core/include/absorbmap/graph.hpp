#ifndef ABSORBMAP_GRAPH_HPP
#define ABSORBMAP_GRAPH_HPP

#include "absorbmap/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace absorbmap {

/// Directed weighted graph in column convention: adjacency(i, j) is the
/// weight of the edge from node j to node i, so column j holds the
/// out-edges of node j and the column sum is its out-degree.
class WeightedDigraph {
  public:
    explicit WeightedDigraph(Matrix adjacency, bool allow_self_loops = false);

    Index size() const { return adjacency_.rows(); }
    const Matrix& adjacency() const { return adjacency_; }

    /// Out-degree vector (column sums of the adjacency matrix).
    Vector out_degrees() const { return adjacency_.colwise().sum(); }

    /// diag{omega_1, ..., omega_n}
    Matrix degree_matrix() const;

    /// Unnormalized graph Laplacian W - A.
    Matrix laplacian() const;

  private:
    Matrix adjacency_;
};

/// Per-node absorption rates delta (> 0) and a diagonal scaling h (>= 0).
struct AbsorptionConfig {
    Vector delta;
    Vector h;

    AbsorptionConfig(Vector delta_, Vector h_);
    /// Uniform scaling h = h_scalar on every node.
    AbsorptionConfig(Vector delta_, double h_scalar);
    /// h = 0: the scaled rate vector reduces to delta itself.
    static AbsorptionConfig no_scaling(Vector delta_);
};

/// Absorption-scaled graph: the base graph with each column j of the
/// adjacency divided by its scaled rate (d_s)_j.
struct AbsorptionScaledGraph {
    WeightedDigraph base;
    Vector rates;            // d_s, strictly positive
    Matrix scaled_adjacency; // A * diag(d_s)^-1
};

Vector out_degrees(const WeightedDigraph& g);

/// (d_s)_i = h_i * omega_i + delta_i; strictly positive for a valid config.
Vector scaled_rate_vector(const WeightedDigraph& g, const AbsorptionConfig& cfg);

/// (W - A)(HW + D_delta)^{-1}, the Laplacian of the absorption-scaled graph.
Matrix scaled_laplacian(const WeightedDigraph& g, const AbsorptionConfig& cfg);

AbsorptionScaledGraph make_absorption_scaled(const WeightedDigraph& g, const Vector& rates);

bool is_strongly_connected(const WeightedDigraph& g);

/// Reads `src dst weight` lines (0-indexed, whitespace-separated, `#`
/// comments). Node count is max index + 1 unless n_hint is larger.
WeightedDigraph load_edge_list(const std::string& path, Index n_hint = 0);

/// Reads `node delta [h]` lines; h defaults to 0 when the column is absent.
AbsorptionConfig load_node_attributes(const std::string& path, Index n);

void save_edge_list(const std::string& path, const WeightedDigraph& g);

} // namespace absorbmap

#endif
