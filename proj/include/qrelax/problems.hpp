#pragma once

#include <string>
#include <vector>

#include "qrelax/graph.hpp"

namespace qrelax {

// A weighted constraint between two layers of a layered stack: satisfied
// when the binary design variables of the two layers differ. Weights are
// positive integers (interface lengths).
struct StackConstraint {
  int a = 0;
  int b = 0;
  int weight = 1;
};

// Layered-stack problem: a chain of adjacent-layer constraints (a, a+1)
// plus optional longer-range pairs (b > a+1) from the stack geometry.
struct PlySpec {
  int num_plies = 0;
  std::vector<StackConstraint> local;      // consecutive pairs only
  std::vector<StackConstraint> non_local;  // strictly non-consecutive pairs
};

// One weighted edge per constraint, vertex i = layer i. Throws
// std::invalid_argument on duplicate pairs, out-of-range indices,
// non-positive weights, or pairs in the wrong list.
Graph ply_to_graph(const PlySpec& spec);

// The 40-layer instance whose graph equals fixture("G40W"): a full chain of
// 39 local constraints plus 29 non-local pairs.
PlySpec g40w_ply_spec();

// Built-in instances, transcribed edge lists: G16 and G40 (3-regular, unit
// weights), G40W (weighted, 68 edges), PETERSEN. Unknown names throw
// NotFoundError.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Best-known cut value per fixture, used as the ratio denominator. G16 and
// PETERSEN are frozen exhaustive-search results; G40 (53) and G40W (641)
// are published reference values for instances beyond the search cap.
double fixture_reference_optimum(const std::string& name);

// (+1, -1, +1, ...) over n vertices.
Assignment alternating_assignment(int n);

}  // namespace qrelax
