#include "surfsep/tree_cotree.h"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace surfsep {

// ── primal spanning tree ────────────────────────────────────────────────────

int BfsTree::max_depth() const {
  return *std::max_element(depth.begin(), depth.end());
}

std::vector<int> BfsTree::path_edges(int v) const {
  std::vector<int> path;
  for (int a = v; parent[a] >= 0; a = parent[a]) path.push_back(parent_edge[a]);
  std::reverse(path.begin(), path.end());
  return path;
}

BfsTree bfs_tree(const EmbeddedMultigraph& g, int root) {
  g.check_valid();
  if (root < 0 || root >= g.num_vertices)
    throw std::invalid_argument("bfs_tree: root out of range");

  BfsTree t;
  t.root = root;
  t.parent.assign(g.num_vertices, -1);
  t.parent_edge.assign(g.num_vertices, -1);
  t.depth.assign(g.num_vertices, -1);
  t.in_tree.assign(g.num_edges(), 0);

  std::queue<int> bfs;
  t.depth[root] = 0;
  bfs.push(root);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    const std::vector<Dart>& rot = g.rotation[v];
    if (rot.empty()) continue;
    // start from the smallest dart so the tree ignores the cyclic anchor
    std::size_t start = std::min_element(rot.begin(), rot.end()) - rot.begin();
    for (std::size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[(start + i) % rot.size()];
      int w = g.dart_target(d);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_edge[w] = d.edge();
      t.in_tree[d.edge()] = 1;
      bfs.push(w);
    }
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (t.depth[v] < 0) throw std::invalid_argument("bfs_tree: graph is disconnected");
  return t;
}

// ── tree-cotree partition ───────────────────────────────────────────────────

std::vector<int> cotree_extra(const EmbeddedMultigraph& g, const BfsTree& tree) {
  FaceTables tables = build_face_tables(g);
  int num_faces = static_cast<int>(tables.walks.size());

  // ascending ids per face, so the BFS below is deterministic
  std::vector<std::vector<int>> incident(num_faces);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!tree.in_tree[e]) {
      auto [f1, f2] = tables.faces_of_edge[e];
      incident[f1].push_back(e);
      if (f2 != f1) incident[f2].push_back(e);
    }

  std::vector<char> in_cotree(g.num_edges(), 0);
  std::vector<char> seen(num_faces, 0);
  std::queue<int> bfs;
  if (num_faces > 0) {
    seen[0] = 1;
    bfs.push(0);
  }
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int e : incident[f]) {
      auto [f1, f2] = tables.faces_of_edge[e];
      int other = f1 == f ? f2 : f1;
      if (seen[other]) continue;
      seen[other] = 1;
      in_cotree[e] = 1;
      bfs.push(other);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
    throw std::logic_error("cotree_extra: dual graph on non-tree edges is disconnected");

  std::vector<int> extra;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!tree.in_tree[e] && !in_cotree[e]) extra.push_back(e);
  return extra;
}

// ── dual tree ───────────────────────────────────────────────────────────────

int DualTree::max_degree() const {
  int best = 0;
  for (int f = 0; f < num_faces; ++f) best = std::max(best, degree(f));
  return best;
}

DualTree dual_tree(const EmbeddedMultigraph& g, const BfsTree& tree,
                   const std::vector<int>& extra) {
  FaceTables tables = build_face_tables(g);

  DualTree dual;
  dual.num_faces = static_cast<int>(tables.walks.size());
  dual.adj.assign(dual.num_faces, {});

  std::vector<char> skip(g.num_edges(), 0);
  for (int e : extra) skip[e] = 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.in_tree[e] || skip[e]) continue;
    auto [f1, f2] = tables.faces_of_edge[e];
    int id = static_cast<int>(dual.edges.size());
    dual.edges.push_back({f1, f2});
    dual.graph_edge.push_back(e);
    dual.adj[f1].push_back(id);
    if (f2 != f1) dual.adj[f2].push_back(id);
  }

  if (static_cast<int>(dual.edges.size()) != dual.num_faces - 1)
    throw std::logic_error("dual_tree: leftover edge count does not fit a spanning tree");
  std::vector<char> seen(dual.num_faces, 0);
  std::queue<int> bfs;
  seen[0] = 1;
  bfs.push(0);
  int reached = 1;
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int id : dual.adj[f]) {
      auto [f1, f2] = dual.edges[id];
      int other = f1 == f ? f2 : f1;
      if (seen[other]) continue;
      seen[other] = 1;
      ++reached;
      bfs.push(other);
    }
  }
  if (reached != dual.num_faces)
    throw std::logic_error("dual_tree: dual edges do not span the faces");
  return dual;
}

// ── tree decomposition over the dual tree ───────────────────────────────────

TreeDecomposition bags(const EmbeddedMultigraph& g, const BfsTree& tree,
                       const std::vector<int>& extra, const DualTree& dual) {
  if (!g.is_loopless()) throw std::invalid_argument("bags: input has loops");
  FaceTables tables = build_face_tables(g);
  for (const FacialWalk& w : tables.walks)
    if (w.length() != 3)
      throw std::invalid_argument("bags: input is not a triangulation");

  auto path_vertices = [&](int v, std::vector<int>& out) {
    for (int a = v; a >= 0; a = tree.parent[a]) out.push_back(a);
  };

  std::vector<int> shared;  // root paths to both endpoints of every leftover edge
  for (int e : extra) {
    path_vertices(g.edges[e].u, shared);
    path_vertices(g.edges[e].v, shared);
  }

  TreeDecomposition td;
  td.num_nodes = dual.num_faces;
  td.tree_edges = dual.edges;
  td.bags.resize(td.num_nodes);
  for (int f = 0; f < td.num_nodes; ++f) {
    std::vector<int>& bag = td.bags[f];
    bag = shared;
    for (int corner : tables.walks[f].vertices(g)) path_vertices(corner, bag);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }

  long long r = tree.max_depth();
  td.bag_bound = (3 + 2 * static_cast<long long>(extra.size())) * r + 1;
  return td;
}

// ── validation ──────────────────────────────────────────────────────────────

TdValidation validate_td(const EmbeddedMultigraph& g, const TreeDecomposition& td) {
  TdValidation v;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (v.ok) v.first_violation = what;
    v.ok = false;
  };

  // tree shape
  std::vector<std::vector<int>> adj(td.num_nodes);
  bool shape_ok = td.num_nodes >= 1 &&
                  static_cast<int>(td.tree_edges.size()) == td.num_nodes - 1;
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || x >= td.num_nodes || y < 0 || y >= td.num_nodes) {
      shape_ok = false;
      break;
    }
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  if (shape_ok) {
    std::vector<char> seen(td.num_nodes, 0);
    std::queue<int> bfs;
    seen[0] = 1;
    bfs.push(0);
    int reached = 1;
    while (!bfs.empty()) {
      int z = bfs.front();
      bfs.pop();
      for (int w : adj[z])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          bfs.push(w);
        }
    }
    shape_ok = reached == td.num_nodes;
  }
  if (!shape_ok) fail(v.tree_is_tree, "decomposition tree is not a tree");

  for (int z = 0; z < td.num_nodes && v.degree_ok; ++z)
    if (adj[z].size() > 3) fail(v.degree_ok, "tree degree exceeds 3");

  // where each vertex occurs
  std::vector<std::vector<int>> nodes_of(g.num_vertices);
  bool ids_ok = static_cast<int>(td.bags.size()) == td.num_nodes;
  for (int z = 0; ids_ok && z < td.num_nodes; ++z)
    for (int w : td.bags[z]) {
      if (w < 0 || w >= g.num_vertices) {
        ids_ok = false;
        break;
      }
      nodes_of[w].push_back(z);
    }
  if (!ids_ok) {
    fail(v.vertices_covered, "bag vertex out of range");
    return v;
  }

  for (int w = 0; w < g.num_vertices && v.vertices_covered; ++w)
    if (nodes_of[w].empty()) fail(v.vertices_covered, "a vertex occurs in no bag");

  for (int e = 0; e < g.num_edges() && v.edges_covered; ++e) {
    int a = g.edges[e].u, b = g.edges[e].v;
    bool found = false;
    for (int z : nodes_of[a])
      if (std::binary_search(td.bags[z].begin(), td.bags[z].end(), b)) {
        found = true;
        break;
      }
    if (!found) fail(v.edges_covered, "an edge has no bag with both endpoints");
  }

  if (shape_ok)
    for (int w = 0; w < g.num_vertices && v.subtrees_connected; ++w) {
      if (nodes_of[w].empty()) continue;
      std::vector<char> in_set(td.num_nodes, 0), seen(td.num_nodes, 0);
      for (int z : nodes_of[w]) in_set[z] = 1;
      std::queue<int> bfs;
      seen[nodes_of[w].front()] = 1;
      bfs.push(nodes_of[w].front());
      std::size_t reached = 1;
      while (!bfs.empty()) {
        int z = bfs.front();
        bfs.pop();
        for (int y : adj[z])
          if (in_set[y] && !seen[y]) {
            seen[y] = 1;
            ++reached;
            bfs.push(y);
          }
      }
      std::vector<int> distinct = nodes_of[w];
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      if (reached != distinct.size())
        fail(v.subtrees_connected, "a vertex occupies a disconnected node set");
    }

  for (int z = 0; z < td.num_nodes && v.bag_bound_ok; ++z)
    if (static_cast<long long>(td.bags[z].size()) > td.bag_bound)
      fail(v.bag_bound_ok, "a bag exceeds the bound");
  return v;
}

}  // namespace surfsep
