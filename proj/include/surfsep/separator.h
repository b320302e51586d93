#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfsep/embedding.h"
#include "surfsep/tree_cotree.h"

namespace surfsep {

// ── recursive cut on a tree decomposition ───────────────────────────────────

struct CutResult {
  /// The ell removed tree edges, as indices into td.tree_edges.
  std::vector<int> cut_edges;

  struct Component {
    std::vector<int> nodes;     // tree nodes of the component
    std::vector<int> vertices;  // G[Q]: vertices confined to these bags
  };
  std::vector<Component> components;  // ell+1 of them

  /// Guarantee per component: threshold_den * |G[Q]| >= threshold_num,
  /// i.e. |G[Q]| >= (n - ell*b) / (2*ell + 1) held exactly in integers.
  long long threshold_num = 0;
  long long threshold_den = 1;
};

/// Removes ell tree edges so that every component keeps at least
/// (n - ell*b)/(2*ell+1) vertices confined to its bags. n_vertices is the
/// size of the underlying vertex universe; every vertex must occur in some
/// bag. Needs n >= (3*ell+1)*b, bag size <= b >= 2, tree max degree <= 3.
/// Throws std::invalid_argument on precondition violations and
/// std::logic_error if an impossible orientation case arises (invalid
/// decomposition).
CutResult td_separator(int n_vertices, const TreeDecomposition& td, int ell);

// ── separator certificates ──────────────────────────────────────────────────

struct SeparatorCertificate {
  long long n = 0;    // vertices of the ambient graph
  long long g = 0;    // Euler genus
  long long r = 0;    // eccentricity of the BFS root
  long long ell = 0;

  std::vector<int> separator_edges;  // E(S), sorted
  std::vector<int> X;                // tree-cotree leftover edges
  std::vector<int> L;                // graph edges of the removed dual edges

  struct Face {
    std::vector<int> walk;  // facial walk of S as ambient vertex ids
    long long interior_count = 0;           // vertices strictly inside
    long long interior_count_original = 0;  // same, excluding auxiliary vertices
  };
  std::vector<Face> faces;  // ell+1 entries, trace order

  /// Interior guarantee (n - ell*(3+2g)*r - ell) / (2*ell+1) as an exact
  /// rational; every face satisfies threshold_den * count >= threshold_num.
  long long threshold_num = 0;
  long long threshold_den = 1;
};

std::string certificate_to_json(const SeparatorCertificate& cert);
SeparatorCertificate certificate_from_json(const std::string& text);

// ── surface separator pipeline ──────────────────────────────────────────────

struct PipelineResult {
  SeparatorCertificate cert;
  GraphMetrics metric;
  BfsTree tree;
  std::vector<int> extra;  // X
  DualTree dual;
  TreeDecomposition td;
  CutResult cut;
  SubEmbedding sub;  // induced embedding of S
};

/// Full pipeline on a connected loopless triangulation: BFS tree from a
/// center (or the given root), tree-cotree partition, dual-tree
/// decomposition, recursive cut, then S as the union of the closed walks
/// Y_vw = T_v + T_w + vw over vw in X union L, with pendant paths pruned.
/// S has at most (2r+1)(g+ell) edges, exactly ell+1 faces, and is 2-cell at
/// the ambient genus; each face keeps at least
/// (n - ell(3+2g)r - ell)/(2ell+1) vertices strictly inside. aux_vertices
/// marks triangulation helpers excluded from the secondary interior counts.
PipelineResult run_pipeline(const EmbeddedMultigraph& g, int ell,
                            const std::vector<int>& aux_vertices = {},
                            int root = -1);

SeparatorCertificate surface_separator(const EmbeddedMultigraph& g, int ell,
                                       const std::vector<int>& aux_vertices = {});

// ── certificate verification ────────────────────────────────────────────────

struct CertificateValidation {
  struct Clause {
    std::string name;
    bool pass = true;
    std::string detail;
  };
  std::vector<Clause> clauses;
  bool ok = true;

  const Clause* find(const std::string& name) const;
};

/// Re-checks a certificate against the graph from scratch: parameter match,
/// separator size bound, face count, 2-cellness via the Euler identity, and
/// the interior counts recomputed geometrically (a vertex is interior to a
/// face iff it avoids S and every face of g incident to it merges into that
/// region).
CertificateValidation verify_certificate(const EmbeddedMultigraph& g,
                                         const SeparatorCertificate& cert,
                                         const std::vector<int>& aux_vertices = {});

// ── simplified configuration ────────────────────────────────────────────────

struct SimplifiedConfiguration {
  EmbeddedMultigraph h;
  /// h vertex -> vertex of the input embedding it descends from (a branch
  /// vertex once min degree 3 is reached).
  std::vector<int> branch_map;
  int contractions = 0;
};

enum class ContractionOrder { smallest_edge_first, largest_edge_first };

/// Repeatedly contracts a non-loop edge with an endpoint of degree 2 until
/// the minimum degree reaches 3. Face count is preserved (walks may become
/// loops but never vanish). Requires a connected embedding with min degree
/// >= 2 and max degree >= 3; throws std::invalid_argument otherwise (e.g.
/// for a bare cycle).
SimplifiedConfiguration simplified_configuration(
    const EmbeddedMultigraph& s,
    ContractionOrder order = ContractionOrder::smallest_edge_first);

// ── deep vertices ───────────────────────────────────────────────────────────

/// Vertices strictly interior to the chosen certificate face whose BFS
/// distance from every boundary vertex of that face is at least floor(k/2).
/// Sorted ascending.
std::vector<int> deep_vertices(const EmbeddedMultigraph& g,
                               const SeparatorCertificate& cert,
                               int face_index, int k);

}  // namespace surfsep
