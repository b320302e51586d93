#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfsep/embedding.h"

namespace surfsep {

// ── primal spanning tree ────────────────────────────────────────────────────

struct BfsTree {
  int root = 0;
  std::vector<int> parent;       // -1 at the root
  std::vector<int> parent_edge;  // edge to parent, -1 at the root
  std::vector<int> depth;
  std::vector<char> in_tree;     // per edge

  int max_depth() const;
  /// Edges of the root-to-v path.
  std::vector<int> path_edges(int v) const;
};

/// Breadth-first spanning tree. At each vertex the neighbors are explored in
/// rotation order starting from the smallest dart, so the tree is
/// deterministic. Throws std::invalid_argument when disconnected.
BfsTree bfs_tree(const EmbeddedMultigraph& g, int root);

// ── tree-cotree partition ───────────────────────────────────────────────────

/// The g leftover edges X = E minus the tree minus a spanning cotree of the
/// dual. The cotree is grown by BFS over faces from face 0, scanning
/// non-tree edges in increasing id order. T union X has exactly one face.
std::vector<int> cotree_extra(const EmbeddedMultigraph& g, const BfsTree& tree);

// ── dual tree ───────────────────────────────────────────────────────────────

/// Spanning tree of the dual: nodes are faces, one edge per graph edge
/// outside E(T) and X. For a triangulation every node has degree <= 3.
struct DualTree {
  int num_faces = 0;
  std::vector<std::pair<int, int>> edges;  // face pairs
  std::vector<int> graph_edge;             // the graph edge realizing each pair
  std::vector<std::vector<int>> adj;       // node -> incident dual edge indices

  int degree(int face) const { return static_cast<int>(adj[face].size()); }
  int max_degree() const;
};

/// Throws std::logic_error if the leftover edges do not form a spanning tree
/// of the dual (signals a non-2-cell input or an inconsistent X).
DualTree dual_tree(const EmbeddedMultigraph& g, const BfsTree& tree,
                   const std::vector<int>& extra);

// ── tree decomposition over the dual tree ───────────────────────────────────

struct TreeDecomposition {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  long long bag_bound = 0;             // b = (3+2g)r+1 for the surface pipeline
};

/// Bags over the dual tree: B_f collects the BFS paths from the root to the
/// three corners of face f and to both endpoints of every edge in X.
/// Requires a loopless triangulation; |B_f| <= (3+2g)r+1 with r the
/// eccentricity of the BFS root.
TreeDecomposition bags(const EmbeddedMultigraph& g, const BfsTree& tree,
                       const std::vector<int>& extra, const DualTree& dual);

// ── validation ──────────────────────────────────────────────────────────────

struct TdValidation {
  bool ok = true;
  std::string first_violation;  // empty when ok

  bool vertices_covered = true;   // every vertex is in some bag
  bool edges_covered = true;      // both ends of every edge share a bag
  bool subtrees_connected = true; // per-vertex bag nodes induce a subtree
  bool tree_is_tree = true;
  bool degree_ok = true;          // max degree <= 3
  bool bag_bound_ok = true;       // |B_f| <= bag_bound
};

TdValidation validate_td(const EmbeddedMultigraph& g, const TreeDecomposition& td);

}  // namespace surfsep
