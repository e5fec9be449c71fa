#pragma once

#include <vector>

#include "toric/cycles.hpp"
#include "toric/walk.hpp"

namespace toric {

enum class WitnessShape { EvenCycle, SharedVertex, CyclesWithPath };

/// One of the three circuit shapes: an even cycle, two odd cycles meeting
/// in exactly one vertex, or two vertex-disjoint odd cycles joined by a
/// path that touches each cycle only at its endpoint.
struct CircuitWitness {
  WitnessShape shape;
  Walk cycle1;
  Walk cycle2;                  // unused for EvenCycle
  int shared_vertex = -1;       // SharedVertex
  int path_start = -1;          // CyclesWithPath: path endpoint on cycle1
  std::vector<int> path_edges;  // CyclesWithPath: ordered cycle1 -> cycle2
  int degree = 0;
};

/// Throws std::invalid_argument when the witness violates its shape
/// invariants (parity, intersections, path disjointness).
void validate_witness(const Graph& g, const CircuitWitness& w);

/// Degree of the circuit: half the cycle length, (c1+c2)/2, or
/// (c1+c2)/2 + p respectively.
int witness_degree(const CircuitWitness& w);

/// Closed even walk realizing the witness; path edges are traversed once
/// in each direction and end up squared on one side.
Walk witness_to_walk(const Graph& g, const CircuitWitness& w);

/// Every circuit of the graph's toric ideal, one witness per binomial.
std::vector<CircuitWitness> enumerate_circuit_witnesses(const Graph& g,
                                                        std::int64_t cap = kDefaultCycleCap);

/// Canonical binomial set of the circuits.
BinomialSet circuit_binomials(const Graph& g, std::int64_t cap = kDefaultCycleCap);

/// Maximal circuit degree, 0 when the ideal has no circuit; the quantity
/// the Graver degree bound is expressed in.
int max_circuit_degree(const Graph& g, std::int64_t cap = kDefaultCycleCap);

}  // namespace toric
