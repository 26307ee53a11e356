#include "qrelax/problems.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "qrelax/errors.hpp"

namespace qrelax {

namespace {

// 3-regular, 16 vertices, 24 unit edges.
constexpr std::pair<int, int> kG16Edges[] = {
    {0, 4},  {0, 12}, {0, 15}, {1, 2},   {1, 13}, {1, 14}, {2, 12}, {2, 13},
    {3, 5},  {3, 7},  {3, 11}, {4, 9},   {4, 14}, {5, 8},  {5, 10}, {6, 10},
    {6, 11}, {6, 12}, {7, 11}, {7, 15},  {8, 9},  {8, 10}, {9, 14}, {13, 15}};

// 3-regular, 40 vertices, 60 unit edges.
constexpr std::pair<int, int> kG40Edges[] = {
    {0, 15},  {0, 18},  {0, 34},  {1, 9},   {1, 15},  {1, 35},  {2, 3},   {2, 5},
    {2, 25},  {3, 17},  {3, 38},  {4, 35},  {4, 37},  {4, 39},  {5, 21},  {5, 26},
    {6, 22},  {6, 23},  {6, 26},  {7, 12},  {7, 29},  {7, 35},  {8, 11},  {8, 28},
    {8, 33},  {9, 20},  {9, 24},  {10, 21}, {10, 27}, {10, 39}, {11, 21}, {11, 31},
    {12, 23}, {12, 39}, {13, 25}, {13, 29}, {13, 30}, {14, 28}, {14, 31}, {14, 32},
    {15, 18}, {16, 17}, {16, 19}, {16, 33}, {17, 23}, {18, 24}, {19, 24}, {19, 25},
    {20, 27}, {20, 32}, {22, 27}, {22, 37}, {26, 36}, {28, 34}, {29, 36}, {30, 34},
    {30, 38}, {31, 37}, {32, 33}, {36, 38}};

// 3-regular, 10 vertices: outer 5-cycle, spokes, inner 5-star.
constexpr std::pair<int, int> kPetersenEdges[] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}};

// 40-layer weighted instance: the full adjacent-layer chain...
constexpr StackConstraint kG40WLocal[] = {
    {0, 1, 16},  {1, 2, 12},  {2, 3, 12},  {3, 4, 4},   {4, 5, 4},   {5, 6, 23},
    {6, 7, 7},   {7, 8, 7},   {8, 9, 2},   {9, 10, 2},  {10, 11, 10}, {11, 12, 10},
    {12, 13, 13}, {13, 14, 24}, {14, 15, 6}, {15, 16, 6}, {16, 17, 22}, {17, 18, 15},
    {18, 19, 1}, {19, 20, 1}, {20, 21, 19}, {21, 22, 19}, {22, 23, 9}, {23, 24, 9},
    {24, 25, 18}, {25, 26, 18}, {26, 27, 25}, {27, 28, 5}, {28, 29, 5}, {29, 30, 17},
    {30, 31, 17}, {31, 32, 21}, {32, 33, 21}, {33, 34, 11}, {34, 35, 11}, {35, 36, 3},
    {36, 37, 3}, {37, 38, 8}, {38, 39, 8}};

// ...plus the longer-range pairs from the stack geometry.
constexpr StackConstraint kG40WNonLocal[] = {
    {18, 20, 14}, {8, 10, 18}, {35, 37, 11}, {3, 5, 19},  {27, 29, 25}, {14, 16, 18},
    {6, 8, 13},   {37, 39, 22}, {22, 24, 17}, {10, 12, 3}, {33, 35, 3},  {1, 3, 4},
    {10, 13, 15}, {33, 37, 16}, {17, 20, 7},  {0, 3, 14},  {29, 31, 10}, {24, 26, 7},
    {20, 22, 7},  {6, 10, 9},   {31, 33, 6},  {16, 20, 8}, {3, 6, 6},    {13, 16, 4},
    {24, 27, 5},  {20, 24, 4},  {29, 33, 3},  {10, 16, 2}, {3, 10, 1}};

Graph unit_graph(int n, const std::pair<int, int>* edges, std::size_t count) {
  std::vector<Edge> list;
  list.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    list.push_back({edges[i].first, edges[i].second, 1.0});
  }
  return Graph(n, std::move(list));
}

}  // namespace

Graph ply_to_graph(const PlySpec& spec) {
  if (spec.num_plies < 1) {
    throw std::invalid_argument("spec needs at least one layer");
  }
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  edges.reserve(spec.local.size() + spec.non_local.size());
  const auto add = [&](const StackConstraint& c, bool local) {
    if (c.a < 0 || c.b >= spec.num_plies) {
      throw std::invalid_argument("constraint layer index out of range");
    }
    if (local ? (c.b != c.a + 1) : (c.b <= c.a + 1)) {
      throw std::invalid_argument(local
                                      ? "local constraints must join consecutive layers"
                                      : "non-local constraints must skip at least one layer");
    }
    if (c.weight < 1) {
      throw std::invalid_argument("constraint weights must be positive integers");
    }
    if (!seen.insert({c.a, c.b}).second) {
      throw std::invalid_argument("duplicate constraint");
    }
    edges.push_back({c.a, c.b, static_cast<double>(c.weight)});
  };
  for (const StackConstraint& c : spec.local) {
    add(c, true);
  }
  for (const StackConstraint& c : spec.non_local) {
    add(c, false);
  }
  return Graph(spec.num_plies, std::move(edges));
}

PlySpec g40w_ply_spec() {
  PlySpec spec;
  spec.num_plies = 40;
  spec.local.assign(std::begin(kG40WLocal), std::end(kG40WLocal));
  spec.non_local.assign(std::begin(kG40WNonLocal), std::end(kG40WNonLocal));
  return spec;
}

Graph fixture(const std::string& name) {
  if (name == "G16") {
    return unit_graph(16, kG16Edges, std::size(kG16Edges));
  }
  if (name == "G40") {
    return unit_graph(40, kG40Edges, std::size(kG40Edges));
  }
  if (name == "G40W") {
    return ply_to_graph(g40w_ply_spec());
  }
  if (name == "PETERSEN") {
    return unit_graph(10, kPetersenEdges, std::size(kPetersenEdges));
  }
  throw NotFoundError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"G16", "G40", "G40W", "PETERSEN"}; }

double fixture_reference_optimum(const std::string& name) {
  // G16 and PETERSEN were frozen from exhaustive search; G40 and G40W are
  // published reference values for instances beyond the exhaustive cap.
  if (name == "G16") {
    return 20.0;
  }
  if (name == "G40") {
    return 53.0;
  }
  if (name == "G40W") {
    return 641.0;
  }
  if (name == "PETERSEN") {
    return 12.0;
  }
  throw NotFoundError("unknown fixture: " + name);
}

Assignment alternating_assignment(int n) {
  if (n < 1) {
    throw std::invalid_argument("assignment needs at least one vertex");
  }
  Assignment m(n);
  for (int v = 0; v < n; ++v) {
    m[v] = (v % 2 == 0) ? 1 : -1;
  }
  return m;
}

}  // namespace qrelax
