#pragma once

#include <optional>
#include <string>

#include "surfsep/bounds.h"
#include "surfsep/embedding.h"

namespace surfsep {

// ── extremal lower-bound construction ───────────────────────────────────────

/// Attaches a rooted tree to every vertex of an embedded complete graph K_p:
/// the root gets delta-p+1 children, inner vertices delta-1, leaves at depth
/// (k-1)/2. Each tree is planted in the face corner before its root's
/// smallest dart, so the genus is unchanged. The result has max degree
/// delta and diameter exactly k. Requires a simple complete graph, odd
/// k >= 3 and delta >= p >= 3.
EmbeddedMultigraph attach_trees(const EmbeddedMultigraph& kp, long long delta, int k);

struct ConstructionReport {
  bool ok = true;
  long long order = 0;
  BigInt expected_order;
  int max_degree = 0;
  int diameter = 0;
  int genus = 0;

  bool order_ok = true;
  bool degree_ok = true;
  bool diameter_ok = true;
  bool genus_ok = true;
};

/// Independent recheck of a finished construction: order formula, max degree
/// delta, diameter k, Euler genus g.
ConstructionReport verify_construction(const EmbeddedMultigraph& g, long long delta,
                                       int k, int genus);

struct ConstructionSpec {
  long long genus = 0;  // 0, 1 or 2 unless a clique embedding is supplied
  long long delta = 3;
  int k = 3;
  /// Optional externally supplied complete-graph embedding; the built-in
  /// K4/K6/K7 for the genus is used when absent.
  std::optional<EmbeddedMultigraph> kp;
};

struct Construction {
  EmbeddedMultigraph emb;
  ConstructionReport report;
  int p = 0;
};

/// Builds and verifies the extremal graph; throws std::logic_error if its
/// own verification fails.
Construction construct_lower_bound(const ConstructionSpec& spec);

}  // namespace surfsep
