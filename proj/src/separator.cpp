#include "surfsep/separator.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace surfsep {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct TdAdjacency {
  // node -> (neighbor, tree edge index)
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit TdAdjacency(const TreeDecomposition& td) : adj(td.num_nodes) {
    for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
      auto [x, y] = td.tree_edges[i];
      adj[x].push_back({y, static_cast<int>(i)});
      adj[y].push_back({x, static_cast<int>(i)});
    }
  }
};

}  // namespace

// ── recursive cut (exact integer arithmetic throughout) ─────────────────────

namespace {

struct CutSolver {
  const TreeDecomposition& td;
  const TdAdjacency& adj;
  int n_universe;  // vertex ids live in [0, n_universe)
  long long b;

  /// One induction level: chooses an unoriented edge at a sink-forest leaf,
  /// removes it, and recurses on the far side with the shared bag content
  /// stripped. alive/bags describe the current subtree and its shrunk bags.
  std::vector<int> solve(const std::vector<char>& alive,
                         const std::vector<std::vector<int>>& bags, int ell) const {
    if (ell == 0) return {};

    std::vector<int> nodes;
    for (int z = 0; z < td.num_nodes; ++z)
      if (alive[z]) nodes.push_back(z);

    long long n_cur = 0;
    std::vector<char> in_universe(n_universe, 0);
    for (int z : nodes)
      for (int v : bags[z])
        if (!in_universe[v]) {
          in_universe[v] = 1;
          ++n_cur;
        }

    // rooted orientation of the current subtree
    int root = nodes.front();
    std::vector<int> order, parent(td.num_nodes, -1), parent_edge(td.num_nodes, -1),
        depth(td.num_nodes, -1);
    order.reserve(nodes.size());
    depth[root] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int z = order[head];
      for (auto [w, e] : adj.adj[z])
        if (alive[w] && depth[w] < 0) {
          depth[w] = depth[z] + 1;
          parent[w] = z;
          parent_edge[w] = e;
          order.push_back(w);
        }
    }
    if (order.size() != nodes.size())
      throw std::logic_error("td_separator: decomposition tree is not connected");

    // every vertex charged to the shallowest node whose bag holds it; by the
    // subtree axiom |G(child side)| is then a plain subtree sum
    std::vector<long long> charge(td.num_nodes, 0);
    {
      std::vector<int> best_depth(n_universe, std::numeric_limits<int>::max());
      std::vector<int> top(n_universe, -1);
      for (int z : nodes)
        for (int v : bags[z])
          if (depth[z] < best_depth[v]) {
            best_depth[v] = depth[z];
            top[v] = z;
          }
      for (int v = 0; v < n_universe; ++v)
        if (top[v] >= 0) ++charge[top[v]];
    }
    std::vector<long long> below = charge;
    for (std::size_t i = order.size(); i-- > 1;) below[parent[order[i]]] += below[order[i]];

    // orientation: an arrow points away from the small side
    long long cutoff = n_cur - static_cast<long long>(ell) * b;  // side is small
    long long scale = 2LL * ell + 1;                             // iff scale*side < cutoff
    std::vector<int> out_degree(td.num_nodes, 0);
    std::vector<char> unoriented(td.tree_edges.size(), 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      int z = order[i], p = parent[z];
      long long child_side = below[z];
      long long shared = static_cast<long long>(
          sorted_intersection(bags[z], bags[p]).size());
      long long parent_side = n_cur - child_side - shared;
      bool away_child = scale * child_side < cutoff;
      bool away_parent = scale * parent_side < cutoff;
      if (away_child && away_parent)
        throw std::logic_error("td_separator: an edge is oriented both ways "
                               "(invalid tree decomposition)");
      if (away_child) ++out_degree[z];
      else if (away_parent) ++out_degree[p];
      else unoriented[parent_edge[z]] = 1;
    }

    // sink forest J: sinks plus unoriented edges touching a sink
    std::vector<char> sink(td.num_nodes, 0);
    for (int z : nodes) sink[z] = out_degree[z] == 0;
    std::vector<int> j_degree(td.num_nodes, 0);
    std::vector<int> j_edge_of(td.num_nodes, -1);
    bool j_has_edge = false;
    for (std::size_t i = 1; i < order.size(); ++i) {
      int z = order[i], p = parent[z];
      if (!unoriented[parent_edge[z]]) continue;
      if (!sink[z] && !sink[p]) continue;
      if (!sink[z] || !sink[p])
        throw std::logic_error("td_separator: unoriented edge at a sink has a "
                               "non-sink endpoint");
      j_has_edge = true;
      ++j_degree[z];
      ++j_degree[p];
      j_edge_of[z] = parent_edge[z];
      j_edge_of[p] = parent_edge[z];
    }
    if (!j_has_edge)
      throw std::logic_error("td_separator: sink forest has no edge "
                             "(invalid tree decomposition)");

    // smallest-id leaf of J and its single unoriented edge
    int x = -1;
    for (int z : nodes)
      if (j_degree[z] == 1) {
        x = z;
        break;
      }
    if (x < 0) throw std::logic_error("td_separator: sink forest has no leaf");
    int cut_edge = j_edge_of[x];
    auto [ex, ey] = td.tree_edges[cut_edge];
    int y = ex == x ? ey : ex;

    // recurse on the far side with B_x ∩ B_y stripped from every bag
    std::vector<int> shared = sorted_intersection(bags[x], bags[y]);
    std::vector<char> next_alive(td.num_nodes, 0);
    std::queue<int> bfs;
    bfs.push(y);
    next_alive[y] = 1;
    while (!bfs.empty()) {
      int z = bfs.front();
      bfs.pop();
      for (auto [w, e] : adj.adj[z])
        if (alive[w] && !next_alive[w] && e != cut_edge) {
          next_alive[w] = 1;
          bfs.push(w);
        }
    }
    std::vector<std::vector<int>> next_bags(td.num_nodes);
    for (int z = 0; z < td.num_nodes; ++z)
      if (next_alive[z]) next_bags[z] = sorted_difference(bags[z], shared);

    std::vector<int> cut = solve(next_alive, next_bags, ell - 1);
    cut.push_back(cut_edge);
    return cut;
  }
};

}  // namespace

CutResult td_separator(int n_vertices, const TreeDecomposition& td, int ell) {
  if (ell < 0) throw std::invalid_argument("td_separator: ell must be >= 0");
  if (td.bag_bound < 2) throw std::invalid_argument("td_separator: bag bound b must be >= 2");
  if (td.num_nodes <= 0) throw std::invalid_argument("td_separator: empty decomposition");
  if (static_cast<long long>(n_vertices) <
      (3LL * ell + 1) * td.bag_bound)
    throw std::invalid_argument("td_separator: need n >= (3*ell+1)*b, got n = " +
                                std::to_string(n_vertices) + " < " +
                                std::to_string((3LL * ell + 1) * td.bag_bound));

  TdAdjacency adj(td);
  for (int z = 0; z < td.num_nodes; ++z) {
    if (static_cast<long long>(td.bags[z].size()) > td.bag_bound)
      throw std::invalid_argument("td_separator: bag of node " + std::to_string(z) +
                                  " exceeds the bound b");
    if (adj.adj[z].size() > 3)
      throw std::invalid_argument("td_separator: tree degree exceeds 3 at node " +
                                  std::to_string(z));
    if (!std::is_sorted(td.bags[z].begin(), td.bags[z].end()))
      throw std::invalid_argument("td_separator: bags must be sorted");
  }
  {
    std::vector<char> covered(n_vertices, 0);
    for (const std::vector<int>& bag : td.bags)
      for (int v : bag) {
        if (v < 0 || v >= n_vertices)
          throw std::invalid_argument("td_separator: bag vertex out of range");
        covered[v] = 1;
      }
    if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }))
      throw std::invalid_argument("td_separator: a vertex occurs in no bag");
  }

  CutSolver solver{td, adj, n_vertices, td.bag_bound};
  std::vector<char> alive(td.num_nodes, 1);
  std::vector<int> cut = solver.solve(alive, td.bags, ell);
  std::sort(cut.begin(), cut.end());

  CutResult result;
  result.cut_edges = cut;
  result.threshold_num = static_cast<long long>(n_vertices) - static_cast<long long>(ell) * td.bag_bound;
  result.threshold_den = 2LL * ell + 1;

  // components of T - R, smallest node first
  std::vector<char> removed(td.tree_edges.size(), 0);
  for (int e : cut) removed[e] = 1;
  std::vector<int> comp_of(td.num_nodes, -1);
  for (int z = 0; z < td.num_nodes; ++z) {
    if (comp_of[z] >= 0) continue;
    int c = static_cast<int>(result.components.size());
    result.components.emplace_back();
    std::queue<int> bfs;
    bfs.push(z);
    comp_of[z] = c;
    while (!bfs.empty()) {
      int a = bfs.front();
      bfs.pop();
      result.components[c].nodes.push_back(a);
      for (auto [w, e] : adj.adj[a])
        if (!removed[e] && comp_of[w] < 0) {
          comp_of[w] = c;
          bfs.push(w);
        }
    }
  }
  if (result.components.size() != static_cast<std::size_t>(ell) + 1)
    throw std::logic_error("td_separator: cut does not leave ell+1 components");

  // G[Q]: vertices whose every bag lies in one component
  std::vector<int> home(n_vertices, -1);  // -2: spans several components
  for (int z = 0; z < td.num_nodes; ++z)
    for (int v : td.bags[z]) {
      if (home[v] == -1) home[v] = comp_of[z];
      else if (home[v] != comp_of[z]) home[v] = -2;
    }
  for (int v = 0; v < n_vertices; ++v)
    if (home[v] >= 0) result.components[home[v]].vertices.push_back(v);

  for (const CutResult::Component& q : result.components)
    if (result.threshold_den * static_cast<long long>(q.vertices.size()) <
        result.threshold_num)
      throw std::logic_error("td_separator: a component misses the guarantee");
  return result;
}

// ── region analysis shared by pipeline, verification and deep vertices ──────

namespace {

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

struct Regions {
  SubEmbedding sub;                // induced embedding of S
  std::vector<FacialWalk> walks;   // faces of S, trace order
  std::vector<int> region_of;      // g-vertex -> face of S it sits inside,
                                   // -1 on S, -2 inconsistent
  std::vector<long long> interior;
  std::vector<long long> interior_original;
  std::vector<int> rep_of_face;    // ambient face-class representative per S face
  std::vector<int> rep_of_gface;   // per ambient face
  bool consistent = true;
};

/// Deleting the non-separator edges merges ambient faces into the faces of
/// S; the classes of that merge are matched to the traced walks of S through
/// any shared (dart, orient) flag.
Regions analyze_regions(const EmbeddedMultigraph& g, const FaceTables& tables,
                        const std::vector<int>& sep_edges,
                        const std::vector<char>& is_aux) {
  Regions out;
  std::vector<char> in_s(g.num_edges(), 0);
  for (int e : sep_edges) in_s[e] = 1;

  int num_gfaces = static_cast<int>(tables.walks.size());
  Dsu dsu(num_gfaces);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_s[e]) dsu.join(tables.faces_of_edge[e][0], tables.faces_of_edge[e][1]);
  out.rep_of_gface.resize(num_gfaces);
  for (int f = 0; f < num_gfaces; ++f) out.rep_of_gface[f] = dsu.find(f);

  out.sub = induced_subembedding(g, sep_edges);
  out.walks = trace_faces(out.sub.emb);

  // match each face of S to its ambient class
  std::vector<int> face_of_rep(num_gfaces, -1);
  out.rep_of_face.resize(out.walks.size());
  for (std::size_t f = 0; f < out.walks.size(); ++f) {
    const FaceStep& step = out.walks[f].steps.front();
    Dart ambient = Dart::at_end(out.sub.orig_edge[step.dart.edge()], step.dart.end());
    int rep = dsu.find(tables.face_of_state[face_state(ambient, step.orient)]);
    out.rep_of_face[f] = rep;
    if (face_of_rep[rep] >= 0) out.consistent = false;
    face_of_rep[rep] = static_cast<int>(f);
  }

  out.region_of.assign(g.num_vertices, -1);
  out.interior.assign(out.walks.size(), 0);
  out.interior_original.assign(out.walks.size(), 0);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (out.sub.new_vertex[v] >= 0) continue;  // on the separator
    int face = -1;
    bool uniform = true;
    for (Dart d : g.rotation[v]) {
      int rep = dsu.find(tables.face_of_state[face_state(d, +1)]);
      int f = face_of_rep[rep];
      if (f < 0) uniform = false;
      else if (face < 0) face = f;
      else if (face != f) uniform = false;
    }
    if (!uniform || face < 0 || g.degree(v) == 0) {
      out.region_of[v] = -2;
      out.consistent = false;
      continue;
    }
    out.region_of[v] = face;
    ++out.interior[face];
    if (!(v < static_cast<int>(is_aux.size()) && is_aux[v])) ++out.interior_original[face];
  }
  return out;
}

std::vector<char> aux_flags(const EmbeddedMultigraph& g, const std::vector<int>& aux) {
  std::vector<char> flags(g.num_vertices, 0);
  for (int v : aux) {
    if (v < 0 || v >= g.num_vertices)
      throw std::invalid_argument("auxiliary vertex id out of range");
    flags[v] = 1;
  }
  return flags;
}

}  // namespace

// ── surface separator pipeline ──────────────────────────────────────────────

PipelineResult run_pipeline(const EmbeddedMultigraph& g, int ell,
                            const std::vector<int>& aux_vertices, int root) {
  if (ell < 1) throw std::invalid_argument("surface separator: ell must be >= 1");
  g.check_valid();
  if (!g.is_loopless())
    throw std::invalid_argument("surface separator: input has loops");

  PipelineResult res;
  res.metric = metrics(g);  // also rejects disconnected inputs

  FaceTables tables = build_face_tables(g);
  for (const FacialWalk& w : tables.walks)
    if (w.length() != 3)
      throw std::invalid_argument("surface separator: input is not a triangulation "
                                  "(triangulate first)");

  long long n = g.num_vertices;
  long long genus = 2 - (n - g.num_edges() + static_cast<long long>(tables.walks.size()));

  res.tree = bfs_tree(g, root < 0 ? res.metric.center : root);
  long long r = res.tree.max_depth();
  res.extra = cotree_extra(g, res.tree);
  if (static_cast<long long>(res.extra.size()) != genus)
    throw std::logic_error("surface separator: leftover edge count differs from genus");
  res.dual = dual_tree(g, res.tree, res.extra);
  res.td = bags(g, res.tree, res.extra, res.dual);

  long long b = res.td.bag_bound;
  if (n < (3LL * ell + 1) * b)
    throw std::invalid_argument(
        "surface separator: need n >= (3*ell+1)*((3+2g)*r+1) = " +
        std::to_string((3LL * ell + 1) * b) + ", got n = " + std::to_string(n));

  res.cut = td_separator(g.num_vertices, res.td, ell);

  std::vector<int> cut_l;
  for (int e : res.cut.cut_edges) cut_l.push_back(res.dual.graph_edge[e]);
  std::sort(cut_l.begin(), cut_l.end());

  // S: the closed walks Y_vw over vw in X and L, pendant paths pruned
  std::vector<char> in_s(g.num_edges(), 0);
  auto add_walk_edges = [&](int e) {
    in_s[e] = 1;
    for (int path_edge : res.tree.path_edges(g.edges[e].u)) in_s[path_edge] = 1;
    for (int path_edge : res.tree.path_edges(g.edges[e].v)) in_s[path_edge] = 1;
  };
  for (int e : res.extra) add_walk_edges(e);
  for (int e : cut_l) add_walk_edges(e);

  {
    std::vector<int> s_degree(g.num_vertices, 0);
    for (int e = 0; e < g.num_edges(); ++e)
      if (in_s[e]) {
        ++s_degree[g.edges[e].u];
        ++s_degree[g.edges[e].v];
      }
    std::queue<int> pendant;
    for (int v = 0; v < g.num_vertices; ++v)
      if (s_degree[v] == 1) pendant.push(v);
    while (!pendant.empty()) {
      int v = pendant.front();
      pendant.pop();
      if (s_degree[v] != 1) continue;
      for (Dart d : g.rotation[v]) {
        int e = d.edge();
        if (!in_s[e]) continue;
        in_s[e] = 0;
        --s_degree[g.edges[e].u];
        --s_degree[g.edges[e].v];
        int w = g.dart_target(d);
        if (s_degree[w] == 1) pendant.push(w);
        break;
      }
    }
  }

  std::vector<int> sep_edges;
  for (int e = 0; e < g.num_edges(); ++e)
    if (in_s[e]) sep_edges.push_back(e);

  std::vector<char> is_aux = aux_flags(g, aux_vertices);
  Regions regions = analyze_regions(g, tables, sep_edges, is_aux);
  res.sub = regions.sub;

  if (static_cast<long long>(regions.walks.size()) != ell + 1)
    throw std::logic_error("surface separator: separator does not have ell+1 faces");
  if (euler_genus(regions.sub.emb) != genus)
    throw std::logic_error("surface separator: separator embedding is not 2-cell");
  if (!regions.consistent)
    throw std::logic_error("surface separator: face regions are inconsistent");

  // faces of S correspond to components of the cut decomposition tree: the
  // ambient faces are the tree nodes, merged exactly along its kept edges
  std::vector<int> face_component(regions.walks.size(), -1);
  for (std::size_t c = 0; c < res.cut.components.size(); ++c) {
    int rep = regions.rep_of_gface[res.cut.components[c].nodes.front()];
    for (int node : res.cut.components[c].nodes)
      if (regions.rep_of_gface[node] != rep)
        throw std::logic_error("surface separator: a cut component spans two regions");
    auto face = std::find(regions.rep_of_face.begin(), regions.rep_of_face.end(), rep);
    if (face == regions.rep_of_face.end())
      throw std::logic_error("surface separator: cut component matches no face of S");
    int f = static_cast<int>(face - regions.rep_of_face.begin());
    if (face_component[f] >= 0)
      throw std::logic_error("surface separator: two components map to one face");
    face_component[f] = static_cast<int>(c);
  }

  SeparatorCertificate& cert = res.cert;
  cert.n = n;
  cert.g = genus;
  cert.r = r;
  cert.ell = ell;
  cert.separator_edges = sep_edges;
  cert.X = res.extra;
  std::sort(cert.X.begin(), cert.X.end());
  cert.L = cut_l;
  cert.threshold_num = n - ell * (3 + 2 * genus) * r - ell;
  cert.threshold_den = 2LL * ell + 1;

  for (std::size_t f = 0; f < regions.walks.size(); ++f) {
    SeparatorCertificate::Face face;
    for (int v : regions.walks[f].vertices(regions.sub.emb))
      face.walk.push_back(regions.sub.orig_vertex[v]);
    face.interior_count = regions.interior[f];
    face.interior_count_original = regions.interior_original[f];

    long long confined = static_cast<long long>(
        res.cut.components[face_component[f]].vertices.size());
    if (face.interior_count < confined)
      throw std::logic_error("surface separator: interior region misses confined vertices");
    if (cert.threshold_den * face.interior_count < cert.threshold_num)
      throw std::logic_error("surface separator: a face misses the interior guarantee");
    cert.faces.push_back(std::move(face));
  }

  long long edge_bound = (2 * r + 1) * (genus + ell);
  if (static_cast<long long>(sep_edges.size()) > edge_bound)
    throw std::logic_error("surface separator: separator exceeds the edge bound");
  return res;
}

SeparatorCertificate surface_separator(const EmbeddedMultigraph& g, int ell,
                                       const std::vector<int>& aux_vertices) {
  return run_pipeline(g, ell, aux_vertices).cert;
}

// ── certificate verification ────────────────────────────────────────────────

const CertificateValidation::Clause* CertificateValidation::find(
    const std::string& name) const {
  for (const Clause& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

CertificateValidation verify_certificate(const EmbeddedMultigraph& g,
                                         const SeparatorCertificate& cert,
                                         const std::vector<int>& aux_vertices) {
  CertificateValidation result;
  auto clause = [&](const std::string& name, bool pass, const std::string& detail) {
    result.clauses.push_back({name, pass, detail});
    result.ok = result.ok && pass;
  };

  g.check_valid();
  GraphMetrics m = metrics(g);
  long long genus = euler_genus(g);
  {
    bool pass = cert.n == g.num_vertices && cert.g == genus && cert.ell >= 1 &&
                cert.r >= m.radius && cert.r <= m.diameter;
    clause("parameters", pass,
           "n=" + std::to_string(g.num_vertices) + " g=" + std::to_string(genus) +
               " radius=" + std::to_string(m.radius));
  }

  bool edges_ok = true;
  for (int e : cert.separator_edges)
    edges_ok = edges_ok && e >= 0 && e < g.num_edges();
  if (!edges_ok) {
    clause("edge_bound", false, "separator edge id out of range");
    return result;
  }
  long long edge_bound = (2 * cert.r + 1) * (cert.g + cert.ell);
  clause("edge_bound",
         static_cast<long long>(cert.separator_edges.size()) <= edge_bound,
         "|E(S)| = " + std::to_string(cert.separator_edges.size()) +
             " <= " + std::to_string(edge_bound));

  FaceTables tables = build_face_tables(g);
  Regions regions = analyze_regions(g, tables, cert.separator_edges,
                                    aux_flags(g, aux_vertices));

  {
    bool pass = static_cast<long long>(regions.walks.size()) == cert.ell + 1 &&
                regions.walks.size() == cert.faces.size();
    for (std::size_t f = 0; pass && f < regions.walks.size(); ++f) {
      std::vector<int> walk;
      for (int v : regions.walks[f].vertices(regions.sub.emb))
        walk.push_back(regions.sub.orig_vertex[v]);
      pass = walk == cert.faces[f].walk;
    }
    clause("face_count", pass,
           "traced " + std::to_string(regions.walks.size()) + " faces, expected " +
               std::to_string(cert.ell + 1));
  }

  {
    // S must carry no pendant subtrees (min degree 2) and stay 2-cell
    bool shape = !cert.separator_edges.empty() && regions.sub.emb.is_connected();
    for (int v = 0; shape && v < regions.sub.emb.num_vertices; ++v)
      shape = regions.sub.emb.degree(v) >= 2;
    clause("two_cell", shape && euler_genus(regions.sub.emb) == genus,
           "induced separator embedding at ambient genus " + std::to_string(genus));
  }

  {
    long long expected_num =
        cert.n - cert.ell * (3 + 2 * cert.g) * cert.r - cert.ell;
    bool pass = cert.threshold_den == 2 * cert.ell + 1 &&
                cert.threshold_num == expected_num && regions.consistent &&
                regions.interior.size() == cert.faces.size();
    long long interior_total = 0;
    for (std::size_t f = 0; pass && f < cert.faces.size(); ++f) {
      const SeparatorCertificate::Face& face = cert.faces[f];
      pass = regions.interior[f] == face.interior_count &&
             face.interior_count_original <= face.interior_count &&
             face.interior_count_original >= 0 &&
             cert.threshold_den * face.interior_count >= cert.threshold_num;
      if (!aux_vertices.empty())
        pass = pass && regions.interior_original[f] == face.interior_count_original;
      interior_total += face.interior_count;
    }
    pass = pass && interior_total + regions.sub.emb.num_vertices == cert.n;
    clause("interior_counts", pass,
           "threshold " + std::to_string(cert.threshold_num) + "/" +
               std::to_string(cert.threshold_den));
  }
  return result;
}

// ── simplified configuration ────────────────────────────────────────────────

SimplifiedConfiguration simplified_configuration(const EmbeddedMultigraph& s,
                                                 ContractionOrder order) {
  s.check_valid();
  if (!s.is_connected())
    throw std::invalid_argument("simplified configuration: input disconnected");

  int min_deg = std::numeric_limits<int>::max(), max_deg = 0;
  for (int v = 0; v < s.num_vertices; ++v) {
    min_deg = std::min(min_deg, s.degree(v));
    max_deg = std::max(max_deg, s.degree(v));
  }
  if (min_deg < 2)
    throw std::invalid_argument("simplified configuration: minimum degree below 2");
  if (max_deg < 3)
    throw std::invalid_argument("simplified configuration: no branch vertex "
                                "(the input is a cycle)");

  SimplifiedConfiguration out;
  out.h = s;
  out.branch_map.resize(s.num_vertices);
  for (int v = 0; v < s.num_vertices; ++v) out.branch_map[v] = v;
  std::size_t faces_before = trace_faces(s).size();

  for (;;) {
    const EmbeddedMultigraph& h = out.h;
    int pick = -1;
    for (int i = 0; i < h.num_edges(); ++i) {
      int e = order == ContractionOrder::smallest_edge_first ? i
                                                             : h.num_edges() - 1 - i;
      const EdgeRec& rec = h.edges[e];
      if (rec.is_loop()) continue;
      if (h.degree(rec.u) == 2 || h.degree(rec.v) == 2) {
        pick = e;
        break;
      }
    }
    if (pick < 0) break;

    const EdgeRec rec = out.h.edges[pick];
    // the merged vertex answers for the branch side of the contracted edge
    int survivor_label = out.h.degree(rec.u) >= 3   ? out.branch_map[rec.u]
                          : out.h.degree(rec.v) >= 3 ? out.branch_map[rec.v]
                                                     : out.branch_map[rec.u];
    Contraction c = contract_edge(out.h, pick);
    std::vector<int> next_map(c.emb.num_vertices, -1);
    for (int v = 0; v < out.h.num_vertices; ++v) next_map[c.vertex_map[v]] = out.branch_map[v];
    next_map[c.vertex_map[rec.u]] = survivor_label;
    out.h = std::move(c.emb);
    out.branch_map = std::move(next_map);
    ++out.contractions;
  }

  for (int v = 0; v < out.h.num_vertices; ++v)
    if (out.h.degree(v) < 3)
      throw std::logic_error("simplified configuration: contraction stalled above "
                             "a degree-2 vertex");
  if (trace_faces(out.h).size() != faces_before)
    throw std::logic_error("simplified configuration: face count changed");
  return out;
}

// ── deep vertices ───────────────────────────────────────────────────────────

std::vector<int> deep_vertices(const EmbeddedMultigraph& g,
                               const SeparatorCertificate& cert, int face_index,
                               int k) {
  if (face_index < 0 || face_index >= static_cast<int>(cert.faces.size()))
    throw std::invalid_argument("deep_vertices: face index out of range");
  if (k < 0) throw std::invalid_argument("deep_vertices: k must be >= 0");

  FaceTables tables = build_face_tables(g);
  Regions regions = analyze_regions(g, tables, cert.separator_edges,
                                    std::vector<char>(g.num_vertices, 0));
  if (face_index >= static_cast<int>(regions.walks.size()))
    throw std::invalid_argument("deep_vertices: certificate does not match the graph");

  std::vector<int> dist(g.num_vertices, -1);
  std::queue<int> bfs;
  for (int v : regions.walks[face_index].vertices(regions.sub.emb)) {
    int orig = regions.sub.orig_vertex[v];
    if (dist[orig] < 0) {
      dist[orig] = 0;
      bfs.push(orig);
    }
  }
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (Dart d : g.rotation[v]) {
      int w = g.dart_target(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
    }
  }

  std::vector<int> deep;
  for (int v = 0; v < g.num_vertices; ++v)
    if (regions.region_of[v] == face_index && dist[v] >= k / 2) deep.push_back(v);
  return deep;
}

// ── certificate JSON ────────────────────────────────────────────────────────

std::string certificate_to_json(const SeparatorCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["g"] = cert.g;
  j["r"] = cert.r;
  j["ell"] = cert.ell;
  j["separator_edges"] = cert.separator_edges;
  j["X"] = cert.X;
  j["L"] = cert.L;
  j["threshold_num"] = cert.threshold_num;
  j["threshold_den"] = cert.threshold_den;
  j["faces"] = nlohmann::json::array();
  for (const SeparatorCertificate::Face& face : cert.faces)
    j["faces"].push_back({{"walk", face.walk},
                          {"interior_count", face.interior_count},
                          {"interior_count_original", face.interior_count_original}});
  return j.dump(2) + "\n";
}

SeparatorCertificate certificate_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    SeparatorCertificate cert;
    cert.n = j.at("n").get<long long>();
    cert.g = j.at("g").get<long long>();
    cert.r = j.at("r").get<long long>();
    cert.ell = j.at("ell").get<long long>();
    cert.separator_edges = j.at("separator_edges").get<std::vector<int>>();
    cert.X = j.at("X").get<std::vector<int>>();
    cert.L = j.at("L").get<std::vector<int>>();
    cert.threshold_num = j.at("threshold_num").get<long long>();
    cert.threshold_den = j.at("threshold_den").get<long long>();
    for (const nlohmann::json& f : j.at("faces")) {
      SeparatorCertificate::Face face;
      face.walk = f.at("walk").get<std::vector<int>>();
      face.interior_count = f.at("interior_count").get<long long>();
      face.interior_count_original = f.at("interior_count_original").get<long long>();
      cert.faces.push_back(std::move(face));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("certificate: ") + e.what());
  }
}

}  // namespace surfsep
