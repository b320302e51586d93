#include "surfsep/embedding.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace surfsep {

namespace {

/// rotation position of every dart: pos[d] = index within rotation[origin].
std::vector<int> rotation_positions(const EmbeddedMultigraph& g) {
  std::vector<int> pos(g.num_darts(), -1);
  for (int v = 0; v < g.num_vertices; ++v)
    for (std::size_t i = 0; i < g.rotation[v].size(); ++i)
      pos[g.rotation[v][i].value()] = static_cast<int>(i);
  return pos;
}

}  // namespace

// ── EmbeddedMultigraph ──────────────────────────────────────────────────────

int EmbeddedMultigraph::add_vertex() {
  rotation.emplace_back();
  return num_vertices++;
}

int EmbeddedMultigraph::add_edge(int u, int v, int sign) {
  edges.push_back({u, v, sign});
  return num_edges() - 1;
}

bool EmbeddedMultigraph::is_loopless() const {
  return std::none_of(edges.begin(), edges.end(),
                      [](const EdgeRec& e) { return e.is_loop(); });
}

bool EmbeddedMultigraph::is_connected() const {
  if (num_vertices == 0) return true;
  std::vector<char> seen(num_vertices, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (Dart d : rotation[v]) {
      int w = dart_target(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  return reached == num_vertices;
}

void EmbeddedMultigraph::check_valid() const {
  if (static_cast<int>(rotation.size()) != num_vertices)
    throw std::invalid_argument("rotation table size differs from vertex count");
  std::vector<int> seen(num_darts(), 0);
  for (int v = 0; v < num_vertices; ++v) {
    for (Dart d : rotation[v]) {
      if (d.value() < 0 || d.value() >= num_darts())
        throw std::invalid_argument("rotation refers to an unknown dart");
      if (dart_origin(d) != v)
        throw std::invalid_argument("dart listed at a vertex that is not its origin");
      if (seen[d.value()]++)
        throw std::invalid_argument("dart occurs twice in the rotation system");
    }
  }
  for (int d = 0; d < num_darts(); ++d)
    if (!seen[d]) throw std::invalid_argument("dart missing from the rotation system");
  for (const EdgeRec& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.sign != 1 && e.sign != -1)
      throw std::invalid_argument("edge sign must be +1 or -1");
  }
}

// ── face tracing ────────────────────────────────────────────────────────────
//
// States are (dart, orient) pairs. One traversal step from (d, s):
//   s' = s * sign(d);  next = rotation successor of twin(d) if s' = +1,
//   predecessor if s' = -1.
// Orbits of this map come in mirror pairs describing the same face from its
// two sides; the mirror of (d, s) is (twin(d), -s * sign(d)). One walk per
// pair is emitted, anchored at the pair's smallest state.

namespace {

struct Tracer {
  const EmbeddedMultigraph& g;
  std::vector<int> pos;

  explicit Tracer(const EmbeddedMultigraph& g) : g(g), pos(rotation_positions(g)) {}

  FaceStep step(FaceStep cur) const {
    int orient = cur.orient * g.edges[cur.dart.edge()].sign;
    Dart t = cur.dart.twin();
    const std::vector<Dart>& rot = g.rotation[g.dart_origin(t)];
    int n = static_cast<int>(rot.size());
    int i = pos[t.value()] + (orient > 0 ? 1 : n - 1);
    return {rot[i % n], orient};
  }

  static FaceStep mirror(FaceStep cur, const EmbeddedMultigraph& g) {
    return {cur.dart.twin(), -cur.orient * g.edges[cur.dart.edge()].sign};
  }
};

}  // namespace

std::vector<FacialWalk> trace_faces(const EmbeddedMultigraph& g) {
  return build_face_tables(g).walks;
}

FaceTables build_face_tables(const EmbeddedMultigraph& g) {
  g.check_valid();
  Tracer tracer(g);
  FaceTables tables;
  tables.face_of_state.assign(2 * g.num_darts(), -1);

  auto trace = [&](FaceStep start, int face) {
    FacialWalk walk;
    FaceStep cur = start;
    do {
      tables.face_of_state[face_state(cur.dart, cur.orient)] = face;
      walk.steps.push_back(cur);
      cur = tracer.step(cur);
    } while (cur != start);
    return walk;
  };

  for (int d = 0; d < g.num_darts(); ++d) {
    for (int orient : {+1, -1}) {
      FaceStep start{Dart(d), orient};
      if (tables.face_of_state[face_state(start.dart, start.orient)] >= 0) continue;
      int face = static_cast<int>(tables.walks.size());
      tables.walks.push_back(trace(start, face));
      FacialWalk other = trace(Tracer::mirror(start, g), face);
      if (other.length() != tables.walks.back().length())
        throw std::logic_error("mirror walk length mismatch");
    }
  }

  tables.faces_of_edge.assign(g.num_edges(), {-1, -1});
  std::vector<int> filled(g.num_edges(), 0);
  for (std::size_t f = 0; f < tables.walks.size(); ++f)
    for (const FaceStep& s : tables.walks[f].steps)
      tables.faces_of_edge[s.dart.edge()][filled[s.dart.edge()]++] = static_cast<int>(f);
  if (std::any_of(filled.begin(), filled.end(), [](int c) { return c != 2; }))
    throw std::logic_error("an edge is not traversed exactly twice");
  return tables;
}

std::vector<int> FacialWalk::vertices(const EmbeddedMultigraph& g) const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const FaceStep& s : steps) out.push_back(g.dart_origin(s.dart));
  return out;
}

// ── surface invariants ──────────────────────────────────────────────────────

int euler_genus(const EmbeddedMultigraph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("euler genus requires a connected embedding");
  int faces = g.num_edges() == 0 ? 1 : static_cast<int>(trace_faces(g).size());
  return 2 - (g.num_vertices - g.num_edges() + faces);
}

bool is_two_cell(const EmbeddedMultigraph& g, int ambient_genus) {
  return euler_genus(g) == ambient_genus;
}

// ── metrics ─────────────────────────────────────────────────────────────────

GraphMetrics metrics(const EmbeddedMultigraph& g) {
  if (g.num_vertices == 0) throw std::invalid_argument("metrics of an empty graph");
  g.check_valid();

  GraphMetrics m;
  m.max_degree = 0;
  m.min_degree = g.degree(0);
  for (int v = 0; v < g.num_vertices; ++v) {
    m.max_degree = std::max(m.max_degree, g.degree(v));
    m.min_degree = std::min(m.min_degree, g.degree(v));
  }

  m.diameter = 0;
  m.radius = -1;
  m.center = 0;
  std::vector<int> dist(g.num_vertices);
  for (int s = 0; s < g.num_vertices; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> bfs;
    bfs.push(s);
    dist[s] = 0;
    int ecc = 0, reached = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (Dart d : g.rotation[v]) {
        int w = g.dart_target(d);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          ecc = std::max(ecc, dist[w]);
          ++reached;
          bfs.push(w);
        }
      }
    }
    if (reached != g.num_vertices)
      throw std::invalid_argument("metrics requires a connected graph");
    m.diameter = std::max(m.diameter, ecc);
    if (m.radius < 0 || ecc < m.radius) {
      m.radius = ecc;
      m.center = s;
    }
  }
  return m;
}

// ── induced subembedding ────────────────────────────────────────────────────

SubEmbedding induced_subembedding(const EmbeddedMultigraph& g,
                                  const std::vector<int>& keep_edges) {
  std::vector<char> keep(g.num_edges(), 0);
  for (int e : keep_edges) {
    if (e < 0 || e >= g.num_edges())
      throw std::invalid_argument("induced subembedding: edge id out of range");
    keep[e] = 1;
  }

  SubEmbedding sub;
  sub.new_vertex.assign(g.num_vertices, -1);
  sub.new_edge.assign(g.num_edges(), -1);

  for (int v = 0; v < g.num_vertices; ++v) {
    bool used = std::any_of(g.rotation[v].begin(), g.rotation[v].end(),
                            [&](Dart d) { return keep[d.edge()]; });
    if (used) {
      sub.new_vertex[v] = static_cast<int>(sub.orig_vertex.size());
      sub.orig_vertex.push_back(v);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!keep[e]) continue;
    sub.new_edge[e] = static_cast<int>(sub.orig_edge.size());
    sub.orig_edge.push_back(e);
  }

  sub.emb.num_vertices = static_cast<int>(sub.orig_vertex.size());
  sub.emb.rotation.resize(sub.emb.num_vertices);
  for (int e : sub.orig_edge) {
    const EdgeRec& rec = g.edges[e];
    sub.emb.edges.push_back({sub.new_vertex[rec.u], sub.new_vertex[rec.v], rec.sign});
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    if (sub.new_vertex[v] < 0) continue;
    std::vector<Dart>& rot = sub.emb.rotation[sub.new_vertex[v]];
    for (Dart d : g.rotation[v])
      if (keep[d.edge()]) rot.push_back(Dart::at_end(sub.new_edge[d.edge()], d.end()));
  }
  return sub;
}

// ── edge contraction ────────────────────────────────────────────────────────

namespace {

/// Reverses the rotation at v and flips the sign of every edge incidence
/// there (loops twice, hence unchanged). Equivalent embedding.
void flip_vertex(EmbeddedMultigraph& g, int v) {
  std::reverse(g.rotation[v].begin(), g.rotation[v].end());
  for (Dart d : g.rotation[v]) g.edges[d.edge()].sign *= -1;
}

}  // namespace

Contraction contract_edge(const EmbeddedMultigraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.num_edges())
    throw std::invalid_argument("contract_edge: edge id out of range");
  if (g.edges[edge_id].is_loop())
    throw std::invalid_argument("contract_edge: cannot contract a loop");

  EmbeddedMultigraph work = g;
  if (work.edges[edge_id].sign < 0) flip_vertex(work, work.edges[edge_id].v);

  int keep = std::min(work.edges[edge_id].u, work.edges[edge_id].v);
  int gone = std::max(work.edges[edge_id].u, work.edges[edge_id].v);

  // splice: rotation at `keep` with the contracted dart replaced by the
  // rotation at `gone` taken from just after its own contracted dart
  auto rotated_tail = [&](int v) {
    const std::vector<Dart>& rot = work.rotation[v];
    std::size_t at = 0;
    while (rot[at].edge() != edge_id) ++at;
    std::vector<Dart> tail;
    for (std::size_t i = 1; i < rot.size(); ++i) tail.push_back(rot[(at + i) % rot.size()]);
    return tail;
  };
  std::vector<Dart> merged = rotated_tail(keep);
  std::vector<Dart> other = rotated_tail(gone);
  merged.insert(merged.end(), other.begin(), other.end());

  Contraction out;
  out.vertex_map.assign(g.num_vertices, -1);
  for (int v = 0; v < g.num_vertices; ++v)
    out.vertex_map[v] = v == gone ? keep : v > gone ? v - 1 : v;

  out.edge_map.assign(g.num_edges(), -1);
  out.emb.num_vertices = g.num_vertices - 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == edge_id) continue;
    out.edge_map[e] = out.emb.num_edges();
    const EdgeRec& rec = work.edges[e];
    out.emb.edges.push_back({out.vertex_map[rec.u], out.vertex_map[rec.v], rec.sign});
  }

  auto remap = [&](const std::vector<Dart>& rot) {
    std::vector<Dart> res;
    res.reserve(rot.size());
    for (Dart d : rot) res.push_back(Dart::at_end(out.edge_map[d.edge()], d.end()));
    return res;
  };
  out.emb.rotation.resize(out.emb.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (v == gone) continue;
    out.emb.rotation[out.vertex_map[v]] =
        remap(v == keep ? merged : work.rotation[v]);
  }
  out.emb.check_valid();
  return out;
}

}  // namespace surfsep
