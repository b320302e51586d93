#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfsep/embedding.h"

namespace surfsep {

// ── base surfaces ───────────────────────────────────────────────────────────

/// Built-in triangulations, one per supported surface:
///   "sphere"     tetrahedron, genus 0, 4 faces
///   "projective" K6 (icosahedron antipodal quotient), genus 1, 10 faces
///   "torus"      K7, genus 2, 14 faces
/// Throws std::invalid_argument for any other name.
EmbeddedMultigraph base_surface(const std::string& name);

// ── random growth ───────────────────────────────────────────────────────────

/// Grows a triangulation to target_n vertices by repeatedly inserting a new
/// vertex into a uniformly random face and joining it to the face's three
/// corners. Preserves the genus and keeps every face triangular. Same seed,
/// same result, bit for bit. target_n below the base size returns the base
/// unchanged.
EmbeddedMultigraph grow_random(const EmbeddedMultigraph& base, int target_n,
                               std::uint64_t seed);

// ── triangulation ───────────────────────────────────────────────────────────

enum class TriangulateStrategy {
  ear,   // cut ears (edges only); star-insert when no loop-free ear exists
  star,  // star-insert a new vertex into every non-triangular face
};

struct TriangulationResult {
  EmbeddedMultigraph emb;
  std::vector<int> aux_vertices;  // vertices added by star insertions
};

/// Adds edges (and, when unavoidable, auxiliary vertices) inside faces until
/// every facial walk has length 3. Genus-preserving; input and output are
/// loopless. Requires a connected loopless embedding.
TriangulationResult triangulate(const EmbeddedMultigraph& g,
                                TriangulateStrategy strategy = TriangulateStrategy::ear);

}  // namespace surfsep
