#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace surfsep {

// ── darts ───────────────────────────────────────────────────────────────────

/// Directed half of an edge. Edge e yields darts 2e (leaving u) and 2e+1
/// (leaving v); twin() flips between them.
class Dart {
 public:
  constexpr Dart() = default;
  constexpr explicit Dart(int value) : value_(value) {}
  static constexpr Dart at_end(int edge, int end) { return Dart(2 * edge + end); }

  constexpr int value() const { return value_; }
  constexpr int edge() const { return value_ >> 1; }
  constexpr int end() const { return value_ & 1; }
  constexpr Dart twin() const { return Dart(value_ ^ 1); }
  constexpr bool valid() const { return value_ >= 0; }

  friend constexpr auto operator<=>(Dart, Dart) = default;

 private:
  int value_ = -1;
};

struct EdgeRec {
  int u = -1;
  int v = -1;
  int sign = +1;  // -1: traversal reverses local orientation (cross-cap)

  bool is_loop() const { return u == v; }
  int endpoint(int end) const { return end == 0 ? u : v; }
};

// ── embedded multigraph ─────────────────────────────────────────────────────

/// Multigraph with a signed rotation system: rotation[v] lists the darts
/// leaving v in cyclic order. Loops contribute both darts to the rotation.
struct EmbeddedMultigraph {
  int num_vertices = 0;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<Dart>> rotation;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int dart_origin(Dart d) const { return edges[d.edge()].endpoint(d.end()); }
  int dart_target(Dart d) const { return edges[d.edge()].endpoint(1 - d.end()); }

  int add_vertex();
  /// Appends the edge; darts are not spliced into any rotation.
  int add_edge(int u, int v, int sign = +1);

  bool is_loopless() const;
  bool is_connected() const;

  /// Throws std::invalid_argument unless every dart occurs exactly once,
  /// at the rotation of its origin vertex.
  void check_valid() const;
};

// ── facial walks ────────────────────────────────────────────────────────────

struct FaceStep {
  Dart dart;
  int orient = +1;  // handedness while traversing dart

  friend constexpr auto operator<=>(FaceStep, FaceStep) = default;
};

struct FacialWalk {
  std::vector<FaceStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// Origin vertex of each step, in walk order.
  std::vector<int> vertices(const EmbeddedMultigraph& g) const;
};

/// Traces all facial walks of the rotation system. Deterministic: faces are
/// emitted in order of their smallest (dart, orient) state and each walk
/// starts at that state. Every edge is traversed exactly twice in total.
std::vector<FacialWalk> trace_faces(const EmbeddedMultigraph& g);

/// Face-tracing state index: dart d traversed with handedness s.
constexpr int face_state(Dart d, int orient) {
  return 2 * d.value() + (orient < 0 ? 1 : 0);
}

/// trace_faces plus lookup tables used by face/region computations.
struct FaceTables {
  std::vector<FacialWalk> walks;
  /// face index per (dart, orient) state; size 4m, covers both traversal
  /// directions of every walk.
  std::vector<int> face_of_state;
  /// the two faces bordering each edge (with multiplicity, unordered)
  std::vector<std::array<int, 2>> faces_of_edge;
};

FaceTables build_face_tables(const EmbeddedMultigraph& g);

// ── surface invariants ──────────────────────────────────────────────────────

/// Euler genus g with n - m + f = 2 - g. Requires a connected graph.
/// A single vertex with no edges counts one face.
int euler_genus(const EmbeddedMultigraph& g);

/// True iff the embedding's own Euler genus equals the ambient genus, i.e.
/// every face is a disk on that surface.
bool is_two_cell(const EmbeddedMultigraph& g, int ambient_genus);

// ── metrics ─────────────────────────────────────────────────────────────────

struct GraphMetrics {
  int diameter = 0;
  int radius = 0;
  int center = 0;  // smallest vertex id attaining the radius
  int max_degree = 0;
  int min_degree = 0;
};

/// BFS from every vertex; throws std::invalid_argument when disconnected.
GraphMetrics metrics(const EmbeddedMultigraph& g);

// ── subembeddings and contraction ───────────────────────────────────────────

struct SubEmbedding {
  EmbeddedMultigraph emb;
  std::vector<int> orig_vertex;  // new id -> old id
  std::vector<int> orig_edge;
  std::vector<int> new_vertex;  // old id -> new id, -1 if dropped
  std::vector<int> new_edge;
};

/// Restriction to an edge subset: rotations keep their cyclic order and
/// signs; vertices left without darts are dropped. Ids are compacted in
/// increasing original order.
SubEmbedding induced_subembedding(const EmbeddedMultigraph& g,
                                  const std::vector<int>& keep_edges);

struct Contraction {
  EmbeddedMultigraph emb;
  std::vector<int> vertex_map;  // old id -> new id (both ends map together)
  std::vector<int> edge_map;    // old id -> new id, contracted edge -> -1
};

/// Contracts a non-loop edge, splicing the two rotations at the merged
/// vertex (kept at min(u,v)). Faces are preserved; parallel edges become
/// loops. Throws std::invalid_argument on a loop.
Contraction contract_edge(const EmbeddedMultigraph& g, int edge_id);

}  // namespace surfsep
