#include "surfsep/generators.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace surfsep {

namespace {

// ── built-in complete-graph embeddings ──────────────────────────────────────

EmbeddedMultigraph complete_embedding(int n,
                                      const std::vector<std::vector<int>>& neighbor_order,
                                      const std::set<std::pair<int, int>>& negative) {
  EmbeddedMultigraph g;
  g.num_vertices = n;
  g.rotation.resize(n);
  std::map<std::pair<int, int>, int> edge_id;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      edge_id[{u, v}] = g.num_edges();
      g.add_edge(u, v, negative.count({u, v}) ? -1 : +1);
    }
  for (int v = 0; v < n; ++v)
    for (int w : neighbor_order[v]) {
      std::pair<int, int> key{std::min(v, w), std::max(v, w)};
      g.rotation[v].push_back(Dart::at_end(edge_id[key], v == key.first ? 0 : 1));
    }
  g.check_valid();
  return g;
}

EmbeddedMultigraph sphere_base() {
  // planar tetrahedron: 4 triangular faces
  return complete_embedding(4, {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}}, {});
}

EmbeddedMultigraph projective_base() {
  // K6 from the antipodal quotient of the icosahedron: the six edges that
  // cross the identification carry sign -1; 10 triangular faces, genus 1
  return complete_embedding(6,
                            {{1, 4, 2, 3, 5},
                             {3, 4, 0, 5, 2},
                             {1, 3, 0, 4, 5},
                             {4, 5, 0, 2, 1},
                             {5, 2, 0, 1, 3},
                             {0, 1, 2, 4, 3}},
                            {{0, 5}, {1, 2}, {1, 3}, {1, 5}, {3, 4}, {3, 5}});
}

EmbeddedMultigraph torus_base() {
  // K7 with rotation i+1, i+3, i+2, i+6, i+4, i+5 (mod 7) at vertex i:
  // 14 triangular faces, genus 2
  std::vector<std::vector<int>> order(7);
  for (int i = 0; i < 7; ++i)
    for (int j : {1, 3, 2, 6, 4, 5}) order[i].push_back((i + j) % 7);
  return complete_embedding(7, order, {});
}

// ── face surgery ────────────────────────────────────────────────────────────

/// The rotation gap a walk step occupies at its corner: insertion at this
/// index puts a new dart into the face, immediately before the step's dart
/// for orient +1 and immediately after it for orient -1.
struct GapInsert {
  int vertex;
  int index;
  Dart dart;
};

int gap_index(const EmbeddedMultigraph& g, FaceStep step) {
  int v = g.dart_origin(step.dart);
  const std::vector<Dart>& rot = g.rotation[v];
  int pos = -1;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == step.dart) pos = static_cast<int>(i);
  return step.orient > 0 ? pos : pos + 1;
}

void apply_inserts(EmbeddedMultigraph& g, std::vector<GapInsert> inserts) {
  std::sort(inserts.begin(), inserts.end(), [](const GapInsert& a, const GapInsert& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.index > b.index;
  });
  for (const GapInsert& ins : inserts) {
    std::vector<Dart>& rot = g.rotation[ins.vertex];
    rot.insert(rot.begin() + ins.index, ins.dart);
  }
}

/// Star insertion: a new vertex inside the face, joined to the corner of
/// every walk step. Replaces a length-L face by L triangles. New edge signs
/// follow the step orientations so all surrounding faces stay intact.
int star_insert(EmbeddedMultigraph& g, const FacialWalk& walk) {
  int w = g.add_vertex();
  std::vector<GapInsert> inserts;
  std::vector<Dart> at_w;
  for (const FaceStep& step : walk.steps) {
    int corner = g.dart_origin(step.dart);
    int e = g.add_edge(corner, w, step.orient);
    inserts.push_back({corner, gap_index(g, step), Dart::at_end(e, 0)});
    at_w.push_back(Dart::at_end(e, 1));
  }
  std::reverse(at_w.begin(), at_w.end());
  g.rotation[w] = std::move(at_w);
  apply_inserts(g, std::move(inserts));
  return w;
}

/// Ear cut at walk position i: connects the corners of steps i-1 and i+1,
/// splitting the triangle (w_{i-1}, w_i, w_{i+1}) off the face. Those two
/// corners must be distinct vertices.
void ear_cut(EmbeddedMultigraph& g, const FacialWalk& walk, int i) {
  int len = walk.length();
  const FaceStep& before = walk.steps[(i + len - 1) % len];
  const FaceStep& after = walk.steps[(i + 1) % len];
  int u = g.dart_origin(before.dart);
  int v = g.dart_origin(after.dart);
  int e = g.add_edge(u, v, before.orient * after.orient);
  apply_inserts(g, {{u, gap_index(g, before), Dart::at_end(e, 0)},
                    {v, gap_index(g, after), Dart::at_end(e, 1)}});
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling: uniform_int_distribution is implementation-defined
  std::uint64_t reject_below = (-n) % n;
  std::uint64_t x = rng();
  while (x < reject_below) x = rng();
  return x % n;
}

}  // namespace

EmbeddedMultigraph base_surface(const std::string& name) {
  if (name == "sphere") return sphere_base();
  if (name == "projective") return projective_base();
  if (name == "torus") return torus_base();
  throw std::invalid_argument("unknown base surface '" + name + "'");
}

EmbeddedMultigraph grow_random(const EmbeddedMultigraph& base, int target_n,
                               std::uint64_t seed) {
  base.check_valid();
  std::mt19937_64 rng(seed);
  EmbeddedMultigraph g = base;
  while (g.num_vertices < target_n) {
    std::vector<FacialWalk> walks = trace_faces(g);
    const FacialWalk& face = walks[bounded(rng, walks.size())];
    if (face.length() != 3)
      throw std::invalid_argument("grow_random requires a triangulation");
    star_insert(g, face);
  }
  return g;
}

TriangulationResult triangulate(const EmbeddedMultigraph& g, TriangulateStrategy strategy) {
  g.check_valid();
  if (!g.is_connected())
    throw std::invalid_argument("triangulate requires a connected embedding");
  if (!g.is_loopless())
    throw std::invalid_argument("triangulate requires a loopless embedding");

  TriangulationResult result;
  result.emb = g;
  for (;;) {
    std::vector<FacialWalk> walks = trace_faces(result.emb);
    const FacialWalk* face = nullptr;
    for (const FacialWalk& w : walks)
      if (w.length() != 3) {
        face = &w;
        break;
      }
    if (!face) break;

    if (strategy == TriangulateStrategy::ear && face->length() >= 4) {
      std::vector<int> corners = face->vertices(result.emb);
      int len = face->length();
      int ear = -1;
      for (int i = 0; i < len && ear < 0; ++i)
        if (corners[(i + len - 1) % len] != corners[(i + 1) % len]) ear = i;
      if (ear >= 0) {
        ear_cut(result.emb, *face, ear);
        continue;
      }
    }
    // bigons, and walks alternating between two vertices, have no loop-free
    // ear: fall back to a star vertex
    result.aux_vertices.push_back(star_insert(result.emb, *face));
  }
  return result;
}

}  // namespace surfsep
