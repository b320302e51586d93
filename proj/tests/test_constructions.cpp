#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.h"
#include "surfsep/constructions.h"
#include "surfsep/generators.h"
#include "surfsep/sem_io.h"

using namespace surfsep;

namespace {

int leaf_count(const EmbeddedMultigraph& g) {
  int leaves = 0;
  for (const auto& rot : g.rotation)
    if (rot.size() == 1) ++leaves;
  return leaves;
}

std::map<int, int> degree_histogram(const EmbeddedMultigraph& g) {
  std::map<int, int> hist;
  for (const auto& rot : g.rotation) ++hist[static_cast<int>(rot.size())];
  return hist;
}

}  // namespace

TEST_CASE("torus construction for degree 10 diameter 5") {
  Construction c = construct_lower_bound({2, 10, 5, {}});
  CHECK(c.p == 7);
  CHECK(c.emb.num_vertices == 287);
  CHECK(leaf_count(c.emb) == 252);  // the counted neighborhoods
  CHECK(euler_genus(c.emb) == 2);
  GraphMetrics met = metrics(c.emb);
  CHECK(met.max_degree == 10);
  CHECK(met.diameter == 5);
  CHECK(c.report.ok);
  CHECK(c.report.order == 287);
  CHECK(c.report.expected_order == 287);
  // trees of height (5-1)/2 = 2: roots keep degree 10 = 6 clique + 4 children,
  // inner tree vertices have 1 + 9 children
  std::map<int, int> hist = degree_histogram(c.emb);
  CHECK(hist[10] == 7 + 7 * 4);  // clique roots and their children
  CHECK(hist[1] == 252);
}

TEST_CASE("sphere construction at the smallest admissible degree") {
  Construction c = construct_lower_bound({0, 5, 3, {}});
  CHECK(c.p == 4);
  CHECK(c.emb.num_vertices == 12);
  CHECK(euler_genus(c.emb) == 0);
  CHECK(metrics(c.emb).max_degree == 5);
  CHECK(metrics(c.emb).diameter == 3);
  CHECK(c.report.ok);
}

TEST_CASE("projective construction on K6") {
  Construction c = construct_lower_bound({1, 6, 3, {}});
  CHECK(c.p == 6);
  CHECK(c.emb.num_vertices == 12);  // 6 + 6 single children
  CHECK(euler_genus(c.emb) == 1);
  CHECK(metrics(c.emb).diameter == 3);
  CHECK(c.report.ok);
}

TEST_CASE("attached trees grow the graph without moving the genus") {
  for (long long genus : {0LL, 1LL, 2LL}) {
    CAPTURE(genus);
    EmbeddedMultigraph kp = base_surface(genus == 0   ? "sphere"
                                         : genus == 1 ? "projective"
                                                      : "torus");
    int p = kp.num_vertices;
    for (int k : {3, 5}) {
      for (long long delta : {p + 0LL, p + 3LL}) {
        CAPTURE(k);
        CAPTURE(delta);
        EmbeddedMultigraph g = attach_trees(kp, delta, k);
        CHECK(euler_genus(g) == euler_genus(kp));
        CHECK(lower_bound_order(delta, k, p) == g.num_vertices);
        GraphMetrics met = metrics(g);
        CHECK(met.max_degree == delta);
        CHECK(met.diameter == k);
      }
    }
  }
}

TEST_CASE("trees of height one make a clique with pendants") {
  // delta = p: every root gets exactly one child
  EmbeddedMultigraph g = attach_trees(base_surface("sphere"), 4, 3);
  CHECK(g.num_vertices == 8);
  CHECK(metrics(g).diameter == 3);
  std::map<int, int> hist = degree_histogram(g);
  CHECK(hist[4] == 4);
  CHECK(hist[1] == 4);
}

TEST_CASE("attach_trees input validation") {
  EmbeddedMultigraph k4 = base_surface("sphere");
  CHECK_THROWS_AS(attach_trees(k4, 10, 4), std::invalid_argument);  // even k
  CHECK_THROWS_AS(attach_trees(k4, 10, 1), std::invalid_argument);  // k < 3
  CHECK_THROWS_AS(attach_trees(k4, 3, 3), std::invalid_argument);   // delta < p
  // not a complete simple graph
  CHECK_THROWS_AS(attach_trees(fixtures::theta_planar(), 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(attach_trees(fixtures::square(), 5, 3), std::invalid_argument);
}

TEST_CASE("construction verification catches defects") {
  Construction c = construct_lower_bound({0, 5, 3, {}});
  REQUIRE(c.report.ok);

  SUBCASE("missing leaf") {
    // drop the last vertex (a leaf); everything but the order stays right
    int leaf = c.emb.num_vertices - 1;
    REQUIRE(c.emb.rotation[leaf].size() == 1);
    std::vector<int> survivors(leaf);
    std::iota(survivors.begin(), survivors.end(), 0);
    SubEmbedding sub = induced_subembedding(c.emb, survivors);
    ConstructionReport rep = verify_construction(sub.emb, 5, 3, 0);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.order_ok);
    CHECK(rep.degree_ok);
    CHECK(rep.diameter_ok);
    CHECK(rep.genus_ok);
  }
  SUBCASE("overstated degree") {
    ConstructionReport rep = verify_construction(c.emb, 6, 3, 0);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.degree_ok);
  }
  SUBCASE("overstated diameter") {
    ConstructionReport rep = verify_construction(c.emb, 5, 5, 0);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.diameter_ok);
  }
  SUBCASE("understated genus") {
    Construction torus = construct_lower_bound({2, 8, 3, {}});
    ConstructionReport rep = verify_construction(torus.emb, 8, 3, 0);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.genus_ok);
  }
}

TEST_CASE("construction spec validation") {
  CHECK_THROWS_AS(construct_lower_bound({3, 10, 5, {}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_lower_bound({0, 10, 4, {}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_lower_bound({0, 3, 5, {}}), std::invalid_argument);  // delta < 4
}

TEST_CASE("externally supplied clique embeddings are accepted") {
  ConstructionSpec spec;
  spec.genus = 2;
  spec.delta = 8;
  spec.k = 3;
  spec.kp = base_surface("torus");  // K7 at its own genus
  Construction c = construct_lower_bound(spec);
  CHECK(c.p == 7);
  CHECK(c.emb.num_vertices == lower_bound_order(8, 3, 7));
  CHECK(euler_genus(c.emb) == 2);
  CHECK(c.report.ok);
}

TEST_CASE("construction is deterministic") {
  std::string a = write_sem1_string(construct_lower_bound({2, 10, 5, {}}).emb);
  std::string b = write_sem1_string(construct_lower_bound({2, 10, 5, {}}).emb);
  CHECK(a == b);
}
