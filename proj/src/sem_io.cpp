#include "surfsep/sem_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace surfsep {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("sem1: line " + std::to_string(line_no) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

EmbeddedMultigraph read_sem1(std::istream& in) {
  // two passes over the buffered lines so n/m/e/r may appear in any order
  std::vector<std::pair<int, std::string>> body;
  bool saw_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string kind;
    if (!(line >> kind)) continue;
    if (!saw_header) {
      int version = 0;
      if (kind != "SEM" || !(line >> version) || version != 1)
        fail(line_no, "expected header 'SEM 1'");
      saw_header = true;
      continue;
    }
    body.emplace_back(line_no, strip_comment(raw));
  }
  if (!saw_header) throw std::runtime_error("sem1: missing header 'SEM 1'");

  EmbeddedMultigraph g;
  bool saw_n = false, saw_m = false;
  std::vector<char> have_edge, have_rot;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<Dart>> rotation;

  for (const auto& [no, text] : body) {
    std::istringstream line(text);
    std::string kind;
    line >> kind;
    if (kind == "n") {
      int n = -1;
      if (!(line >> n) || n < 0) fail(no, "bad vertex count");
      if (saw_n) fail(no, "duplicate n line");
      saw_n = true;
      g.num_vertices = n;
      rotation.resize(n);
      have_rot.assign(n, 0);
    } else if (kind == "m") {
      int m = -1;
      if (!(line >> m) || m < 0) fail(no, "bad edge count");
      if (saw_m) fail(no, "duplicate m line");
      saw_m = true;
      edges.resize(m);
      have_edge.assign(m, 0);
    } else if (kind != "e" && kind != "r") {
      fail(no, "unknown line kind '" + kind + "'");
    }
  }
  if (!saw_n || !saw_m) throw std::runtime_error("sem1: missing n or m line");

  for (const auto& [no, text] : body) {
    std::istringstream line(text);
    std::string kind;
    line >> kind;
    if (kind == "e") {
      int id, u, v;
      std::string sign;
      if (!(line >> id >> u >> v >> sign)) fail(no, "bad edge line");
      if (id < 0 || id >= static_cast<int>(edges.size())) fail(no, "edge id out of range");
      if (have_edge[id]) fail(no, "duplicate edge id");
      if (sign != "+" && sign != "-") fail(no, "edge sign must be + or -");
      have_edge[id] = 1;
      edges[id] = {u, v, sign == "+" ? +1 : -1};
    } else if (kind == "r") {
      int v;
      if (!(line >> v)) fail(no, "bad rotation line");
      if (v < 0 || v >= g.num_vertices) fail(no, "rotation vertex out of range");
      if (have_rot[v]) fail(no, "duplicate rotation line");
      have_rot[v] = 1;
      int dart;
      while (line >> dart) rotation[v].push_back(Dart(dart));
      if (!line.eof()) fail(no, "bad dart list");
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!have_edge[e]) throw std::runtime_error("sem1: edge " + std::to_string(e) + " missing");
  for (int v = 0; v < g.num_vertices; ++v)
    if (!have_rot[v]) throw std::runtime_error("sem1: rotation of vertex " + std::to_string(v) + " missing");

  g.edges = std::move(edges);
  g.rotation = std::move(rotation);
  g.check_valid();
  return g;
}

EmbeddedMultigraph read_sem1_string(const std::string& text) {
  std::istringstream in(text);
  return read_sem1(in);
}

EmbeddedMultigraph read_sem1_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sem1(in);
}

void write_sem1(std::ostream& out, const EmbeddedMultigraph& g) {
  g.check_valid();
  out << "SEM 1\n";
  out << "n " << g.num_vertices << "\n";
  out << "m " << g.num_edges() << "\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const EdgeRec& rec = g.edges[e];
    out << "e " << e << " " << rec.u << " " << rec.v << " "
        << (rec.sign > 0 ? '+' : '-') << "\n";
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "r " << v;
    const std::vector<Dart>& rot = g.rotation[v];
    // canonical cyclic anchor: start at the smallest dart
    std::size_t start = 0;
    for (std::size_t i = 1; i < rot.size(); ++i)
      if (rot[i] < rot[start]) start = i;
    for (std::size_t i = 0; i < rot.size(); ++i)
      out << " " << rot[(start + i) % rot.size()].value();
    out << "\n";
  }
}

std::string write_sem1_string(const EmbeddedMultigraph& g) {
  std::ostringstream out;
  write_sem1(out, g);
  return out.str();
}

void write_sem1_file(const std::string& path, const EmbeddedMultigraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_sem1(out, g);
}

}  // namespace surfsep
