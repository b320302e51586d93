#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.h"
#include "surfsep/generators.h"
#include "surfsep/sem_io.h"

using namespace surfsep;

namespace {

bool is_simple_and_complete(const EmbeddedMultigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const EdgeRec& e : g.edges) {
    if (e.u == e.v) return false;
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
  }
  return static_cast<int>(seen.size()) == g.num_vertices * (g.num_vertices - 1) / 2;
}

bool all_faces_triangular(const EmbeddedMultigraph& g) {
  for (const FacialWalk& w : trace_faces(g))
    if (w.steps.size() != 3) return false;
  return true;
}

}  // namespace

TEST_CASE("base surfaces have the frozen sizes") {
  struct Row {
    const char* name;
    int n, m, faces, genus;
  };
  for (Row row : {Row{"sphere", 4, 6, 4, 0}, Row{"projective", 6, 15, 10, 1},
                  Row{"torus", 7, 21, 14, 2}}) {
    CAPTURE(row.name);
    EmbeddedMultigraph g = base_surface(row.name);
    CHECK(g.num_vertices == row.n);
    CHECK(g.num_edges() == row.m);
    CHECK(trace_faces(g).size() == static_cast<std::size_t>(row.faces));
    CHECK(euler_genus(g) == row.genus);
    CHECK(is_two_cell(g, row.genus));
    CHECK(is_simple_and_complete(g));
    CHECK(all_faces_triangular(g));
  }
  CHECK_THROWS_AS(base_surface("klein"), std::invalid_argument);
}

TEST_CASE("projective base uses exactly the frozen crossing edges") {
  EmbeddedMultigraph g = base_surface("projective");
  std::vector<int> crossing;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edges[e].sign < 0) crossing.push_back(e);
  // (0,5) (1,2) (1,3) (1,5) (3,4) (3,5) in the u<v edge enumeration
  CHECK(crossing == std::vector<int>{4, 5, 6, 8, 12, 13});
}

TEST_CASE("grown triangulations satisfy the structural edge/face counts") {
  SUBCASE("sphere") {
    EmbeddedMultigraph g = grow_random(base_surface("sphere"), 100, 1);
    CHECK(g.num_vertices == 100);
    CHECK(g.num_edges() == 3 * 100 - 6);
    CHECK(trace_faces(g).size() == 2u * 100 - 4);
    CHECK(euler_genus(g) == 0);
  }
  SUBCASE("projective") {
    EmbeddedMultigraph g = grow_random(base_surface("projective"), 80, 2);
    CHECK(g.num_vertices == 80);
    CHECK(g.num_edges() == 3 * 80 - 3);  // V - E + F = 1
    CHECK(euler_genus(g) == 1);
  }
  SUBCASE("torus") {
    EmbeddedMultigraph g = grow_random(base_surface("torus"), 80, 3);
    CHECK(g.num_edges() == 3 * 80);  // V - E + F = 0
    CHECK(euler_genus(g) == 2);
  }
}

TEST_CASE("grown triangulations stay loopless triangulations") {
  for (const char* name : {"sphere", "projective", "torus"}) {
    CAPTURE(name);
    EmbeddedMultigraph g = grow_random(base_surface(name), 60, 7);
    CHECK(all_faces_triangular(g));
    for (const EdgeRec& e : g.edges) CHECK(e.u != e.v);
    CHECK(is_two_cell(g, euler_genus(base_surface(name))));
    CHECK(metrics(g).max_degree >= 3);
  }
}

TEST_CASE("growth is deterministic in the seed") {
  EmbeddedMultigraph a = grow_random(base_surface("torus"), 50, 42);
  EmbeddedMultigraph b = grow_random(base_surface("torus"), 50, 42);
  EmbeddedMultigraph c = grow_random(base_surface("torus"), 50, 43);
  CHECK(write_sem1_string(a) == write_sem1_string(b));
  CHECK(write_sem1_string(a) != write_sem1_string(c));
}

TEST_CASE("growth edge cases") {
  EmbeddedMultigraph base = base_surface("sphere");
  CHECK(write_sem1_string(grow_random(base, 2, 0)) == write_sem1_string(base));
  CHECK(write_sem1_string(grow_random(base, 4, 0)) == write_sem1_string(base));
  // growth requires a triangulation
  CHECK_THROWS_AS(grow_random(fixtures::theta_planar(), 10, 0), std::invalid_argument);
}

TEST_CASE("ear triangulation of a square inserts only edges") {
  TriangulationResult r = triangulate(fixtures::square(), TriangulateStrategy::ear);
  CHECK(r.aux_vertices.empty());
  CHECK(r.emb.num_vertices == 4);
  CHECK(r.emb.num_edges() == 6);
  CHECK(euler_genus(r.emb) == 0);
  CHECK(all_faces_triangular(r.emb));
}

TEST_CASE("star triangulation of a square adds one hub per big face") {
  TriangulationResult r = triangulate(fixtures::square(), TriangulateStrategy::star);
  CHECK(r.aux_vertices == std::vector<int>{4, 5});
  CHECK(r.emb.num_vertices == 6);
  CHECK(r.emb.num_edges() == 12);
  CHECK(euler_genus(r.emb) == 0);
  CHECK(all_faces_triangular(r.emb));
}

TEST_CASE("ear strategy falls back to a hub when every ear would be a loop") {
  // the crossed bigon's single length-4 walk alternates between its two
  // vertices, so every ear chord would be a loop
  TriangulationResult r = triangulate(fixtures::crossed_bigon(), TriangulateStrategy::ear);
  CHECK(r.aux_vertices.size() == 1);
  CHECK(r.emb.num_vertices == 3);
  CHECK(r.emb.num_edges() == 6);
  CHECK(trace_faces(r.emb).size() == 4);
  CHECK(euler_genus(r.emb) == 1);
  CHECK(all_faces_triangular(r.emb));
  for (const EdgeRec& e : r.emb.edges) CHECK(e.u != e.v);
}

TEST_CASE("triangulation is deterministic and idempotent") {
  EmbeddedMultigraph square = fixtures::square();
  std::string once = write_sem1_string(triangulate(square).emb);
  CHECK(once == write_sem1_string(triangulate(square).emb));
  EmbeddedMultigraph tri = base_surface("torus");
  TriangulationResult same = triangulate(tri);
  CHECK(same.aux_vertices.empty());
  CHECK(write_sem1_string(same.emb) == write_sem1_string(tri));
}

TEST_CASE("triangulate input validation") {
  CHECK_THROWS_AS(triangulate(fixtures::positive_loop()), std::invalid_argument);
  EmbeddedMultigraph two_isolated;
  two_isolated.num_vertices = 2;
  two_isolated.rotation.resize(2);
  CHECK_THROWS_AS(triangulate(two_isolated), std::invalid_argument);
}
