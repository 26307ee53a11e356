#include "qrelax/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qrelax/errors.hpp"
#include "qrelax/rng.hpp"

namespace qrelax {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), total_weight_(0.0) {
  if (num_vertices_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  std::set<std::pair<int, int>> seen;
  adjacency_.assign(num_vertices_, {});
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
    }
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument("duplicate edge");
    }
    if (!std::isfinite(e.w) || e.w <= 0.0) {
      throw std::invalid_argument("edge weights must be positive and finite");
    }
    total_weight_ += e.w;
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int Graph::max_degree() const {
  const std::vector<int> deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

double cut_value(const Graph& g, const Assignment& m) {
  if (static_cast<int>(m.size()) != g.num_vertices()) {
    throw std::invalid_argument("assignment length does not match vertex count");
  }
  for (int v : m) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("assignment values must be +1 or -1");
    }
  }
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    cut += 0.5 * e.w * (1.0 - m[e.u] * m[e.v]);
  }
  return cut;
}

double maxcut_gain(const Graph& g, double cut) {
  if (g.total_weight() <= 0.0) {
    throw std::invalid_argument("gain is undefined for zero total weight");
  }
  return cut / g.total_weight() - 0.5;
}

BruteForceResult brute_force_maxcut(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices) {
    throw SizeLimitError("exhaustive search capped at " + std::to_string(max_vertices) +
                         " vertices, got " + std::to_string(n));
  }
  // Counter bit (n-1-v) holds vertex v, so counting upward scans assignments
  // in lexicographic order (vertex 0 most significant, +1 before -1). Each
  // increment flips a short suffix of bits; the cut is updated per flip.
  std::vector<int> m(n, 1);
  double cut = 0.0;
  double best_cut = 0.0;
  std::uint64_t best_counter = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t counter = 1; counter < end; ++counter) {
    std::uint64_t flipped = counter ^ (counter - 1);
    while (flipped != 0) {
      const int bit = std::countr_zero(flipped);
      flipped &= flipped - 1;
      const int v = n - 1 - bit;
      double delta = 0.0;
      for (const auto& [u, w] : g.adjacency()[v]) {
        delta += w * m[u];
      }
      cut += delta * m[v];
      m[v] = -m[v];
    }
    if (cut > best_cut) {
      best_cut = cut;
      best_counter = counter;
    }
  }
  BruteForceResult result;
  result.cut = best_cut;
  result.assignment.resize(n);
  for (int v = 0; v < n; ++v) {
    result.assignment[v] = ((best_counter >> (n - 1 - v)) & 1u) ? -1 : 1;
  }
  return result;
}

Graph random_regular(int num_vertices, int degree, std::uint64_t seed) {
  if (num_vertices < 1 || degree < 1 || degree >= num_vertices) {
    throw std::invalid_argument("regular graph needs 1 <= degree < vertices");
  }
  if (num_vertices * degree % 2 != 0) {
    throw std::invalid_argument("vertices * degree must be even");
  }
  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(num_vertices) * degree);
  for (std::size_t i = 0; i < stubs.size(); ++i) {
    stubs[i] = static_cast<int>(i) / degree;
  }
  constexpr int kMaxAttempts = 1000000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      const std::size_t j = rng.below(i + 1);
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) {
        std::swap(u, v);
      }
      if (!seen.insert({u, v}).second) {
        ok = false;
        break;
      }
      edges.push_back({u, v, 1.0});
    }
    if (ok) {
      return Graph(num_vertices, std::move(edges));
    }
  }
  throw ConvergenceError("pairing model failed to produce a simple graph");
}

Coloring ldf_coloring(const Graph& g) {
  const int n = g.num_vertices();
  const std::vector<int> deg = g.degrees();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) {
    order[v] = v;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&deg](int a, int b) { return deg[a] > deg[b]; });
  Coloring coloring;
  coloring.color_of.assign(n, -1);
  for (int v : order) {
    std::vector<bool> used(static_cast<std::size_t>(g.max_degree()) + 1, false);
    for (const auto& [u, w] : g.adjacency()[v]) {
      (void)w;
      const int c = coloring.color_of[u];
      if (c >= 0 && c < static_cast<int>(used.size())) {
        used[c] = true;
      }
    }
    int c = 0;
    while (used[c]) {
      ++c;
    }
    coloring.color_of[v] = c;
    coloring.num_colors = std::max(coloring.num_colors, c + 1);
  }
  return coloring;
}

namespace {

int parse_int_token(const std::string& token, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(token, &pos);
    if (pos != token.size()) {
      throw std::invalid_argument(token);
    }
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad " + what + " '" +
                                token + "'");
  }
}

double parse_weight_token(const std::string& token, int line_no) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(token, &pos);
    if (pos != token.size()) {
      throw std::invalid_argument(token);
    }
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad weight '" + token +
                                "'");
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_vertices = -1;
  int max_endpoint = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {
      continue;  // blank line
    }
    if (first == "#") {
      std::string key;
      if (ls >> key && key == "vertices") {
        std::string count;
        if (!(ls >> count)) {
          throw std::invalid_argument("line " + std::to_string(line_no) +
                                      ": expected '# vertices N'");
        }
        declared_vertices = parse_int_token(count, line_no, "vertex count");
      }
      continue;  // other comments ignored
    }
    std::string second, third, extra;
    if (!(ls >> second)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'u v [w]'");
    }
    Edge e;
    e.u = parse_int_token(first, line_no, "endpoint");
    e.v = parse_int_token(second, line_no, "endpoint");
    if (ls >> third) {
      e.w = parse_weight_token(third, line_no);
    }
    if (ls >> extra) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing token '" +
                                  extra + "'");
    }
    max_endpoint = std::max({max_endpoint, e.u, e.v});
    edges.push_back(e);
  }
  const int n = declared_vertices >= 0 ? declared_vertices : max_endpoint + 1;
  if (n < 1) {
    throw std::invalid_argument("edge list declares no vertices");
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(std::string("invalid edge list: ") + ex.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  try {
    return read_edge_list(in);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

std::string format_weight(double w) {
  if (w == std::floor(w) && std::abs(w) < 1e15) {
    return std::to_string(static_cast<long long>(w));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# vertices " << g.num_vertices() << "\n";
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (const Edge& e : sorted) {
    out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << "\n";
  }
}

}  // namespace qrelax
