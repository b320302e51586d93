#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.h"
#include "surfsep/generators.h"
#include "surfsep/sem_io.h"

using namespace surfsep;

namespace {

bool same_embedding(const EmbeddedMultigraph& a, const EmbeddedMultigraph& b) {
  return write_sem1_string(a) == write_sem1_string(b);
}

}  // namespace

TEST_CASE("write-read-write is byte-identical") {
  for (const char* name : {"sphere", "projective", "torus"}) {
    EmbeddedMultigraph g = base_surface(name);
    std::string once = write_sem1_string(g);
    std::string twice = write_sem1_string(read_sem1_string(once));
    CHECK(once == twice);
  }
  EmbeddedMultigraph grown = grow_random(base_surface("torus"), 120, 5);
  std::string once = write_sem1_string(grown);
  CHECK(once == write_sem1_string(read_sem1_string(once)));
}

TEST_CASE("writer anchors every rotation at its smallest dart") {
  EmbeddedMultigraph g = base_surface("sphere");
  std::string canonical = write_sem1_string(g);
  // rotating the stored cyclic lists must not change the output
  for (std::vector<Dart>& rot : g.rotation)
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  g.check_valid();
  CHECK(write_sem1_string(g) == canonical);
}

TEST_CASE("reader accepts comments, blank lines and any line order") {
  std::string text =
      "SEM 1\n"
      "# a crossed bigon\n"
      "m 2\n"
      "r 1 1 3\n"
      "e 1 0 1 -\n"
      "\n"
      "n 2\n"
      "e 0 0 1 +\n"
      "r 0 0 2\n";
  EmbeddedMultigraph g = read_sem1_string(text);
  CHECK(same_embedding(g, fixtures::crossed_bigon()));
}

TEST_CASE("reader diagnostics carry line numbers") {
  auto fails_with_line = [](const std::string& text) {
    try {
      read_sem1_string(text);
      return false;
    } catch (const std::runtime_error& e) {
      return std::string(e.what()).find("line") != std::string::npos;
    }
  };
  SUBCASE("wrong magic") { CHECK(fails_with_line("SEM 2\nn 0\nm 0\n")); }
  SUBCASE("bad sign token") {
    CHECK(fails_with_line("SEM 1\nn 2\nm 1\ne 0 0 1 x\nr 0 0\nr 1 1\n"));
  }
  SUBCASE("edge id out of range") {
    CHECK(fails_with_line("SEM 1\nn 2\nm 1\ne 5 0 1 +\nr 0 0\nr 1 1\n"));
  }
  SUBCASE("duplicate edge line") {
    CHECK(fails_with_line(
        "SEM 1\nn 2\nm 1\ne 0 0 1 +\ne 0 0 1 +\nr 0 0\nr 1 1\n"));
  }
  SUBCASE("junk in dart list") {
    CHECK(fails_with_line("SEM 1\nn 2\nm 1\ne 0 0 1 +\nr 0 0 x\nr 1 1\n"));
  }
  SUBCASE("unknown line kind") {
    CHECK(fails_with_line("SEM 1\nn 2\nm 1\nq 0 0 1 +\nr 0 0\nr 1 1\n"));
  }
  SUBCASE("missing rotation") {
    CHECK_THROWS_AS(
        read_sem1_string("SEM 1\nn 2\nm 1\ne 0 0 1 +\nr 0 0\n"),
        std::runtime_error);
  }
}

TEST_CASE("reader rejects inconsistent rotation systems") {
  SUBCASE("dart at the wrong vertex") {
    // dart 1 belongs to vertex 1, not vertex 0
    CHECK_THROWS_AS(
        read_sem1_string("SEM 1\nn 2\nm 1\ne 0 0 1 +\nr 0 1\nr 1 0\n"),
        std::invalid_argument);
  }
  SUBCASE("dart out of range") {
    CHECK_THROWS_AS(
        read_sem1_string("SEM 1\nn 2\nm 1\ne 0 0 1 +\nr 0 0\nr 1 9\n"),
        std::invalid_argument);
  }
}

TEST_CASE("file round-trip") {
  EmbeddedMultigraph g = grow_random(base_surface("sphere"), 40, 9);
  write_sem1_file("/tmp/surfsep_io_test.sem", g);
  CHECK(same_embedding(read_sem1_file("/tmp/surfsep_io_test.sem"), g));
  CHECK_THROWS_AS(read_sem1_file("/tmp/surfsep_io_missing.sem"), std::runtime_error);
}
