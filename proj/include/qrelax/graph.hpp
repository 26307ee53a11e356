#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qrelax {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Undirected weighted graph stored as an edge list plus an adjacency index.
// Edges are normalized to u < v at construction; self-loops, duplicate pairs,
// out-of-range endpoints and non-finite weights are rejected.
class Graph {
 public:
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double total_weight() const { return total_weight_; }

  std::vector<int> degrees() const;
  int max_degree() const;

  // Neighbor list per vertex as (other endpoint, weight) pairs.
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    return adjacency_;
  }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  double total_weight_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

// One value in {-1, +1} per vertex.
using Assignment = std::vector<int>;

// Proper-coloring result: color index per vertex.
struct Coloring {
  std::vector<int> color_of;
  int num_colors = 0;
};

// Cut weight of the assignment: sum over edges of (w/2) * (1 - m_u * m_v).
// Exact for integer weights.
double cut_value(const Graph& g, const Assignment& m);

// Excess of a cut over the random-assignment baseline, in units of the total
// weight W: epsilon = cut/W - 1/2. Requires W > 0.
double maxcut_gain(const Graph& g, double cut);

struct BruteForceResult {
  Assignment assignment;
  double cut = 0.0;
};

// Exhaustive MaxCut with incremental cut updates. Ties break toward the
// lexicographically smallest bitstring (vertex 0 first, +1 before -1), which
// falls out of scanning assignments in lexicographic order and keeping the
// first strict maximum. Default cap 26 vertices.
BruteForceResult brute_force_maxcut(const Graph& g, int max_vertices = 26);

// Random degree-regular simple graph via the pairing model: shuffle vertex
// stubs, pair them up, and restart with a fresh shuffle whenever the pairing
// produces a self-loop or duplicate edge. Deterministic for a fixed seed.
Graph random_regular(int num_vertices, int degree, std::uint64_t seed);

// Greedy largest-degree-first proper coloring; ties between equal degrees go
// to the lower vertex index. Uses at most max_degree + 1 colors.
Coloring ldf_coloring(const Graph& g);

// Text edge-list format: optional "# vertices N" first line, then one edge
// per line as "u v w". The writer sorts by (u, v) and renders integer weights
// without a decimal point so that integer graphs round-trip byte-identically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
std::string format_weight(double w);

}  // namespace qrelax
