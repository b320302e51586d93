#pragma once

#include <vector>

#include "surfsep/embedding.h"

namespace fixtures {

struct EdgeSpec {
  int u, v, sign;
};

inline surfsep::EmbeddedMultigraph make(int n, const std::vector<EdgeSpec>& edges,
                                        const std::vector<std::vector<int>>& rotation) {
  surfsep::EmbeddedMultigraph g;
  g.num_vertices = n;
  for (const EdgeSpec& e : edges) g.edges.push_back({e.u, e.v, e.sign});
  g.rotation.resize(n);
  for (int v = 0; v < n; ++v)
    for (int d : rotation[v]) g.rotation[v].push_back(surfsep::Dart(d));
  g.check_valid();
  return g;
}

/// one vertex, one positive loop: sphere, two faces of length 1
inline surfsep::EmbeddedMultigraph positive_loop() {
  return make(1, {{0, 0, +1}}, {{0, 1}});
}

/// one vertex, one crossed loop: projective plane, one face of length 2
inline surfsep::EmbeddedMultigraph negative_loop() {
  return make(1, {{0, 0, -1}}, {{0, 1}});
}

/// a single edge: sphere, one face of length 2
inline surfsep::EmbeddedMultigraph pendant_edge() {
  return make(2, {{0, 1, +1}}, {{0}, {1}});
}

/// planar theta: 2 vertices, 3 parallel edges, 3 faces of length 2
inline surfsep::EmbeddedMultigraph theta_planar() {
  return make(2, {{0, 1, +1}, {0, 1, +1}, {0, 1, +1}}, {{0, 2, 4}, {5, 3, 1}});
}

/// same graph, rotations twisted into one face of length 6 (genus 2)
inline surfsep::EmbeddedMultigraph theta_twisted() {
  return make(2, {{0, 1, +1}, {0, 1, +1}, {0, 1, +1}}, {{0, 2, 4}, {1, 3, 5}});
}

/// 2 vertices, 2 parallel edges, one crossed: projective plane, a single
/// facial walk 0-1-0-1 (no chord can be added without a loop)
inline surfsep::EmbeddedMultigraph crossed_bigon() {
  return make(2, {{0, 1, +1}, {0, 1, -1}}, {{0, 2}, {1, 3}});
}

/// planar theta with every strand subdivided once: vertices 2 3 4 have
/// degree 2, the three quadrilateral faces survive contraction
inline surfsep::EmbeddedMultigraph subdivided_theta() {
  return make(5,
              {{0, 2, +1}, {2, 1, +1}, {0, 3, +1}, {3, 1, +1}, {0, 4, +1}, {4, 1, +1}},
              {{0, 4, 8}, {11, 7, 3}, {1, 2}, {5, 6}, {9, 10}});
}

/// 4-cycle embedded in the sphere: two square faces
inline surfsep::EmbeddedMultigraph square() {
  return make(4, {{0, 1, +1}, {1, 2, +1}, {2, 3, +1}, {3, 0, +1}},
              {{0, 7}, {1, 2}, {3, 4}, {5, 6}});
}

/// path 0-1-2-3
inline surfsep::EmbeddedMultigraph path4() {
  return make(4, {{0, 1, +1}, {1, 2, +1}, {2, 3, +1}}, {{0}, {1, 2}, {3, 4}, {5}});
}

}  // namespace fixtures
