#include "surfsep/constructions.h"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "surfsep/generators.h"

namespace surfsep {

namespace {

void require_complete_simple(const EmbeddedMultigraph& kp) {
  kp.check_valid();
  int p = kp.num_vertices;
  if (p < 3) throw std::invalid_argument("attach_trees: clique must have p >= 3");
  if (2 * kp.num_edges() != p * (p - 1))
    throw std::invalid_argument("attach_trees: not a complete graph");
  std::vector<std::vector<char>> seen(p, std::vector<char>(p, 0));
  for (const EdgeRec& e : kp.edges) {
    if (e.is_loop() || seen[e.u][e.v])
      throw std::invalid_argument("attach_trees: not a simple complete graph");
    seen[e.u][e.v] = seen[e.v][e.u] = 1;
  }
}

}  // namespace

// ── the extremal graph ──────────────────────────────────────────────────────

EmbeddedMultigraph attach_trees(const EmbeddedMultigraph& kp, long long delta, int k) {
  require_complete_simple(kp);
  int p = kp.num_vertices;
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("attach_trees: k must be odd >= 3");
  if (delta < p) throw std::invalid_argument("attach_trees: delta must be >= p");

  int height = (k - 1) / 2;
  EmbeddedMultigraph g = kp;
  for (int root = 0; root < p; ++root) {
    // the whole tree is drawn inside the face at the corner before the
    // root's smallest dart, so the surface is unchanged
    std::size_t pos = std::min_element(g.rotation[root].begin(),
                                       g.rotation[root].end()) -
                      g.rotation[root].begin();

    std::queue<std::pair<int, int>> frontier;  // (vertex, depth)
    long long root_children = delta - p + 1;
    std::vector<Dart> block;
    for (long long i = 0; i < root_children; ++i) {
      int child = g.add_vertex();
      int e = g.add_edge(root, child);
      block.push_back(Dart::at_end(e, 0));
      g.rotation[child].push_back(Dart::at_end(e, 1));
      frontier.push({child, 1});
    }
    g.rotation[root].insert(g.rotation[root].begin() + pos, block.begin(), block.end());

    while (!frontier.empty()) {
      auto [v, depth] = frontier.front();
      frontier.pop();
      if (depth == height) continue;
      for (long long i = 0; i < delta - 1; ++i) {
        int child = g.add_vertex();
        int e = g.add_edge(v, child);
        g.rotation[v].push_back(Dart::at_end(e, 0));
        g.rotation[child].push_back(Dart::at_end(e, 1));
        frontier.push({child, depth + 1});
      }
    }
  }
  g.check_valid();
  return g;
}

// ── verification ────────────────────────────────────────────────────────────

ConstructionReport verify_construction(const EmbeddedMultigraph& g, long long delta,
                                       int k, int genus) {
  g.check_valid();
  ConstructionReport rep;
  rep.order = g.num_vertices;

  // the clique is the graph left after repeatedly shedding leaves
  std::vector<int> degree(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) degree[v] = g.degree(v);
  std::queue<int> leaves;
  for (int v = 0; v < g.num_vertices; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<char> shed(g.num_vertices, 0);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (shed[v] || degree[v] != 1) continue;
    shed[v] = 1;
    degree[v] = 0;
    for (Dart d : g.rotation[v]) {
      int w = g.dart_target(d);
      if (!shed[w] && --degree[w] == 1) leaves.push(w);
    }
  }
  long long p = std::count(shed.begin(), shed.end(), 0);

  GraphMetrics m = metrics(g);
  rep.max_degree = m.max_degree;
  rep.diameter = m.diameter;
  rep.genus = euler_genus(g);

  rep.degree_ok = rep.max_degree == delta;
  rep.diameter_ok = rep.diameter == k;
  rep.genus_ok = rep.genus <= genus;
  if (p >= 3 && p <= delta && k >= 3 && k % 2 == 1 && delta >= 3) {
    rep.expected_order = lower_bound_order(delta, k, p);
    rep.order_ok = rep.expected_order == rep.order;
  } else {
    rep.order_ok = false;
  }
  rep.ok = rep.order_ok && rep.degree_ok && rep.diameter_ok && rep.genus_ok;
  return rep;
}

// ── assembly ────────────────────────────────────────────────────────────────

Construction construct_lower_bound(const ConstructionSpec& spec) {
  EmbeddedMultigraph kp;
  if (spec.kp) {
    kp = *spec.kp;
  } else {
    std::optional<int> p = builtin_clique_order(spec.genus);
    if (!p)
      throw std::invalid_argument(
          "construct_lower_bound: no built-in clique for genus " +
          std::to_string(spec.genus) + "; supply one");
    switch (spec.genus) {
      case 0: kp = base_surface("sphere"); break;
      case 1: kp = base_surface("projective"); break;
      default: kp = base_surface("torus"); break;
    }
  }

  int kp_genus = euler_genus(kp);
  Construction built;
  built.p = kp.num_vertices;
  built.emb = attach_trees(kp, spec.delta, spec.k);
  built.report = verify_construction(built.emb, spec.delta, spec.k, kp_genus);
  if (built.report.genus != kp_genus)
    throw std::logic_error("construct_lower_bound: genus changed while attaching trees");
  if (!built.report.ok)
    throw std::logic_error("construct_lower_bound: verification failed");
  return built;
}

}  // namespace surfsep
