#pragma once

#include <vector>

#include "autopc/graph.hpp"

namespace autopc {

/// d-separation of i and j given w in a DAG, decided by a two-phase
/// reachability walk (ancestor marking, then a tagged BFS) rather than path
/// enumeration.
///
/// Throws std::invalid_argument when the graph is not a DAG, i == j, an index
/// is out of range, or w contains an endpoint.
bool d_separated(const MixedGraph& dag, int i, int j, const std::vector<int>& w);

/// CPDAG of the Markov equivalence class of a DAG: keep the skeleton, direct
/// exactly the edges of unshielded colliders, then close under the Meek rules.
MixedGraph dag_to_cpdag(const MixedGraph& dag);

/// Orient unshielded colliders in an undirected skeleton: for every triple
/// i - k - j with i, j non-adjacent and k not in sepsets{i,j}, direct
/// i -> k <- j.
///
/// Triples are processed in ascending lexicographic order of (i, j, k) with
/// i < j the non-adjacent pair and k the shared neighbor; a later triple
/// overwrites earlier orientations unless the overwrite would close a fully
/// directed cycle, in which case the existing state is kept. The output is a
/// pure function of (skeleton, sepsets).
///
/// Throws std::logic_error when a non-adjacent pair with a shared neighbor
/// has no sepset entry.
MixedGraph orient_colliders(const MixedGraph& skeleton, const SepsetMap& sepsets);

/// Fixpoint of the three orientation-propagation rules:
///   R1: a -> b, b - c, a and c non-adjacent        =>  b -> c
///   R2: a -> b -> c, a - c                         =>  a -> c
///   R3: a - b, a - c, a - d, c -> b, d -> b,
///       c and d non-adjacent                       =>  a -> b
/// Only undirected edges are ever directed; adjacencies never change. An
/// orientation that would close a fully directed cycle is skipped, keeping
/// the PDAG invariant on imperfect inputs.
MixedGraph apply_meek_rules(const MixedGraph& pdag);

/// Parent set of v in a PDAG: vertices with a directed edge into v plus
/// vertices sharing an undirected edge with v. Ascending.
std::vector<int> parents_in_pdag(const MixedGraph& pdag, int v);

/// Topological order over the directed edges (undirected edges ignored),
/// smallest vertex first among ties. Throws std::invalid_argument on a
/// directed cycle.
std::vector<int> topological_order(const MixedGraph& g);

/// Consistent DAG extension of a PDAG: repeatedly pick a sink candidate whose
/// undirected neighbors are adjacent to all of its other neighbors and orient
/// its undirected edges inward. When no such vertex exists the remaining
/// undirected edges are oriented along a topological order of the directed
/// part, which preserves acyclicity but may add colliders.
MixedGraph extend_to_dag(const MixedGraph& pdag);

}  // namespace autopc
