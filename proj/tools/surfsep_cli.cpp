// surfsep: generate, triangulate, separate, verify, and measure embedded
// multigraphs, plus the degree-diameter bound calculators.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or I/O errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surfsep/bounds.h"
#include "surfsep/constructions.h"
#include "surfsep/generators.h"
#include "surfsep/sem_io.h"
#include "surfsep/separator.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_graph(const std::string& path, const surfsep::EmbeddedMultigraph& g) {
  write_text(path, surfsep::write_sem1_string(g));
}

std::vector<int> read_id_list(const std::string& path) {
  std::vector<int> ids;
  std::istringstream in(read_text(path));
  int v;
  while (in >> v) ids.push_back(v);
  return ids;
}

std::string id_list_text(const std::vector<int>& ids) {
  std::string text;
  for (int v : ids) text += std::to_string(v) + "\n";
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ell-separators and degree-diameter bounds for embedded multigraphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "grow a random triangulation of a surface");
  std::string gen_surface = "sphere", gen_out;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--surface", gen_surface, "sphere | projective | torus")
      ->capture_default_str();
  gen->add_option("--n", gen_n, "target vertex count")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "output SEM1 path (default stdout)");

  // triangulate
  auto* tri = app.add_subcommand("triangulate", "make every face triangular");
  std::string tri_in, tri_out, tri_aux_out, tri_strategy = "ear";
  tri->add_option("--in", tri_in, "input SEM1 path")->required();
  tri->add_option("--out", tri_out, "output SEM1 path (default stdout)");
  tri->add_option("--strategy", tri_strategy, "ear | star")->capture_default_str();
  tri->add_option("--aux-out", tri_aux_out, "write added vertex ids, one per line");

  // separate
  auto* sep = app.add_subcommand("separate", "compute an ell-separator certificate");
  std::string sep_in, sep_cert, sep_aux;
  int sep_ell = 0, sep_root = -1;
  sep->add_option("--in", sep_in, "input SEM1 triangulation")->required();
  sep->add_option("--ell", sep_ell, "number of cut edges (>= 1)")->required();
  sep->add_option("--cert", sep_cert, "certificate JSON path (default stdout)");
  sep->add_option("--aux", sep_aux, "file of auxiliary vertex ids to discount");
  sep->add_option("--root", sep_root, "BFS root override (default: a center)");

  // verify
  auto* ver = app.add_subcommand("verify", "re-check a certificate against a graph");
  std::string ver_in, ver_cert, ver_aux;
  ver->add_option("--in", ver_in, "input SEM1 triangulation")->required();
  ver->add_option("--cert", ver_cert, "certificate JSON path")->required();
  ver->add_option("--aux", ver_aux, "file of auxiliary vertex ids");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "degree-diameter bound report");
  long long bnd_genus = 0, bnd_delta = 3;
  int bnd_k = 2;
  bool bnd_json = false;
  bnd->add_option("--genus", bnd_genus, "Euler genus g >= 0")->required();
  bnd->add_option("--delta", bnd_delta, "maximum degree >= 3")->required();
  bnd->add_option("--k", bnd_k, "diameter >= 2")->required();
  bnd->add_flag("--json", bnd_json, "emit JSON instead of text");

  // construct
  auto* con = app.add_subcommand("construct", "build the extremal lower-bound graph");
  long long con_genus = 0, con_delta = 3;
  int con_k = 3;
  std::string con_out, con_kp;
  con->add_option("--genus", con_genus, "0, 1 or 2 unless --kp is given")->required();
  con->add_option("--delta", con_delta, "maximum degree")->required();
  con->add_option("--k", con_k, "odd diameter >= 3")->required();
  con->add_option("--out", con_out, "output SEM1 path (default stdout)");
  con->add_option("--kp", con_kp, "SEM1 file with a complete-graph embedding");

  // metrics
  auto* met = app.add_subcommand("metrics", "print n, m, genus, degree, diameter, radius");
  std::string met_in;
  met->add_option("--in", met_in, "input SEM1 path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      surfsep::EmbeddedMultigraph base = surfsep::base_surface(gen_surface);
      write_graph(gen_out, surfsep::grow_random(base, gen_n, gen_seed));
    } else if (*tri) {
      surfsep::TriangulateStrategy strategy;
      if (tri_strategy == "ear") strategy = surfsep::TriangulateStrategy::ear;
      else if (tri_strategy == "star") strategy = surfsep::TriangulateStrategy::star;
      else throw std::runtime_error("unknown strategy: " + tri_strategy);
      surfsep::TriangulationResult result =
          surfsep::triangulate(surfsep::read_sem1_file(tri_in), strategy);
      write_graph(tri_out, result.emb);
      if (!tri_aux_out.empty()) write_text(tri_aux_out, id_list_text(result.aux_vertices));
    } else if (*sep) {
      surfsep::EmbeddedMultigraph g = surfsep::read_sem1_file(sep_in);
      std::vector<int> aux;
      if (!sep_aux.empty()) aux = read_id_list(sep_aux);
      surfsep::SeparatorCertificate cert =
          surfsep::run_pipeline(g, sep_ell, aux, sep_root).cert;
      write_text(sep_cert, surfsep::certificate_to_json(cert));
    } else if (*ver) {
      surfsep::EmbeddedMultigraph g = surfsep::read_sem1_file(ver_in);
      surfsep::SeparatorCertificate cert =
          surfsep::certificate_from_json(read_text(ver_cert));
      std::vector<int> aux;
      if (!ver_aux.empty()) aux = read_id_list(ver_aux);
      surfsep::CertificateValidation validation =
          surfsep::verify_certificate(g, cert, aux);
      for (const auto& c : validation.clauses)
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
      if (!validation.ok) {
        std::cerr << "certificate rejected\n";
        return kExitVerifyFailed;
      }
      std::cout << "certificate accepted\n";
    } else if (*bnd) {
      surfsep::BoundReport rep =
          surfsep::bounds_report(surfsep::BigInt(bnd_genus), surfsep::BigInt(bnd_delta),
                                 bnd_k);
      if (bnd_json) {
        std::cout << surfsep::bound_report_to_json(rep);
      } else {
        std::cout << "g=" << rep.g << " delta=" << rep.delta << " k=" << rep.k << "\n"
                  << "moore_k           " << rep.moore_k << "\n"
                  << "thm_main_upper    " << rep.main_upper << "\n"
                  << "ell               " << rep.ellc.ell << "\n"
                  << "c                 " << rep.ellc.c_string() << "\n";
        if (rep.eq2) std::cout << "eq2_lower_formula " << *rep.eq2 << "\n";
        if (rep.construction)
          std::cout << "construction_order " << *rep.construction << "\n";
        if (rep.p) std::cout << "p                 " << *rep.p << "\n";
        if (rep.preconditions_possibly_unmet)
          std::cout << "note: " << rep.precondition_note << "\n";
      }
    } else if (*con) {
      surfsep::ConstructionSpec spec;
      spec.genus = con_genus;
      spec.delta = con_delta;
      spec.k = con_k;
      if (!con_kp.empty()) spec.kp = surfsep::read_sem1_file(con_kp);
      surfsep::Construction built = surfsep::construct_lower_bound(spec);
      write_graph(con_out, built.emb);
      std::cerr << "order=" << built.report.order << " p=" << built.p
                << " max_degree=" << built.report.max_degree
                << " diameter=" << built.report.diameter
                << " genus=" << built.report.genus << "\n";
    } else if (*met) {
      surfsep::EmbeddedMultigraph g = surfsep::read_sem1_file(met_in);
      surfsep::GraphMetrics m = surfsep::metrics(g);
      std::cout << "n " << g.num_vertices << "\n"
                << "m " << g.num_edges() << "\n"
                << "genus " << surfsep::euler_genus(g) << "\n"
                << "max_degree " << m.max_degree << "\n"
                << "diameter " << m.diameter << "\n"
                << "radius " << m.radius << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
