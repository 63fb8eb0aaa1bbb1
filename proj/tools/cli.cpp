#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutcx/acceptance.hpp"
#include "cutcx/algebra.hpp"
#include "cutcx/automorphisms.hpp"
#include "cutcx/json_io.hpp"
#include "cutcx/pants.hpp"
#include "cutcx/reconstruction.hpp"
#include "cutcx/spheres.hpp"
#include "cutcx/systems.hpp"

namespace cutcx::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Complex for a space descriptor: exact for finite specs, depth-bounded
// otherwise.
CutGraph complex_for(const SpaceSpec& spec, int depth) {
  std::vector<Cut> cuts = count_space(spec).is_infinite()
                              ? enumerate_cuts_bounded(spec, depth)
                              : enumerate_cuts_finite(spec);
  return CutGraph::build(std::move(cuts));
}

std::uint64_t mask_from_points(const std::vector<int>& points, int n) {
  std::uint64_t m = 0;
  for (int p : points) {
    if (p < 0 || p >= n) throw std::invalid_argument("point index out of range");
    m |= std::uint64_t(1) << p;
  }
  return m;
}

json point_list(std::uint64_t mask, int n) {
  json out = json::array();
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write to " + path);
  file << text;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cut complexes of Stone spaces"};
  app.require_subcommand(1);

  std::string space_json, sides_json, perm_json, k_json, u_json, hom_json, system_json;
  std::string format = "text", out_path, fixture;
  int depth = 3, probe_depth = 4, levels = 0, jobs = 1;
  std::uint64_t seed = 0xC0FFEE;

  auto add_space = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--space", space_json, "space descriptor (JSON)");
    if (required) opt->required();
  };

  auto* cmd_cuts = app.add_subcommand("cuts", "list the bounded non-peripheral cuts");
  add_space(cmd_cuts);
  cmd_cuts->add_option("--depth", depth, "enumeration depth for infinite spaces");

  auto* cmd_graph = app.add_subcommand("graph", "emit the cut complex");
  add_space(cmd_graph);
  cmd_graph->add_option("--depth", depth, "enumeration depth for infinite spaces");
  cmd_graph->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot", "text"}));
  cmd_graph->add_option("--out", out_path, "output file (stdout otherwise)");

  auto* cmd_export = app.add_subcommand("export", "write the cut complex to a file");
  add_space(cmd_export);
  cmd_export->add_option("--depth", depth, "enumeration depth for infinite spaces");
  cmd_export->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  cmd_export->add_option("--out", out_path, "output file")->required();

  auto* cmd_diameter = app.add_subcommand("diameter", "diameter of the cut complex");
  add_space(cmd_diameter);
  cmd_diameter->add_option("--depth", depth, "enumeration depth for infinite spaces");

  auto* cmd_aut = app.add_subcommand("aut", "automorphism group of the cut complex");
  add_space(cmd_aut);
  cmd_aut->add_option("--depth", depth, "enumeration depth for infinite spaces");

  auto* cmd_reconstruct =
      app.add_subcommand("reconstruct", "point bijection from a complex automorphism");
  add_space(cmd_reconstruct);
  cmd_reconstruct->add_option("--perm", perm_json, "vertex permutation (JSON array)")->required();

  auto* cmd_kernel = app.add_subcommand("kernel", "kernel of the point action");
  add_space(cmd_kernel);

  auto* cmd_stab = app.add_subcommand("stabcheck", "stabilizer family for K inside U");
  add_space(cmd_stab);
  cmd_stab->add_option("--k", k_json, "point set K (JSON array)")->required();
  cmd_stab->add_option("--u", u_json, "point set U (JSON array)")->required();

  auto* cmd_pants = app.add_subcommand("pants", "pants decomposition certificates");
  add_space(cmd_pants);
  cmd_pants->add_option("--depth", depth, "standard decomposition depth");
  cmd_pants->add_option("--probe-depth", probe_depth, "probe cut depth");
  cmd_pants->add_option("--report", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* cmd_spheres = app.add_subcommand("spheres", "sphere recognition and exhaustions");
  add_space(cmd_spheres);
  cmd_spheres->add_option("--sides", sides_json, "boundary sides (JSON array of string arrays)");
  cmd_spheres->add_option("--levels", levels, "build an exhaustion with this many levels");
  cmd_spheres->add_option("--depth", depth, "bounded complex / certification depth");

  auto* cmd_duality = app.add_subcommand("duality", "finite Stone duality checks");
  int atoms_count = 3;
  cmd_duality->add_option("--atoms", atoms_count, "atom count")->required();
  cmd_duality->add_option("--hom", hom_json, "homomorphism {\"atom_map\":[...]} into this algebra");
  cmd_duality->add_option("--seed", seed, "seed for random homomorphisms");

  auto* cmd_systems = app.add_subcommand("systems", "Stone space system fixtures");
  cmd_systems->add_option("--fixture", fixture, "weak5|cone5|cone6|strong7");
  cmd_systems->add_option("--system", system_json, "system descriptor (JSON)");

  auto* cmd_acceptance = app.add_subcommand("acceptance", "run the acceptance battery");
  cmd_acceptance->add_option("--jobs", jobs, "run criteria concurrently");
  cmd_acceptance->add_option("--seed", seed, "seed for randomized sweeps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cmd_cuts->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    std::vector<Cut> cuts = count_space(spec).is_infinite()
                                ? enumerate_cuts_bounded(spec, depth)
                                : enumerate_cuts_finite(spec);
    for (const Cut& c : cuts) out << c.label() << " | " << c.side(1).str() << "\n";
    out << cuts.size() << " cuts\n";
    return kExitOk;
  }

  if (cmd_graph->parsed() || cmd_export->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    CutGraph g = complex_for(spec, depth);
    if (g.size() == 0) throw std::invalid_argument("empty graph: no non-peripheral cuts");
    std::string text;
    if (format == "dot")
      text = graph_to_dot(g);
    else if (format == "json")
      text = graph_to_json(g);
    else
      text = std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) +
             " edges\n";
    write_output(text, out_path, out);
    return kExitOk;
  }

  if (cmd_diameter->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    CutGraph g = complex_for(spec, depth);
    if (g.size() == 0) throw std::invalid_argument("empty graph: no non-peripheral cuts");
    out << g.diameter().str() << "\n";
    return kExitOk;
  }

  if (cmd_aut->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    CutGraph g = complex_for(spec, depth);
    AutomorphismGroup aut = graph_automorphisms(g);
    json j;
    j["order"] = aut.order;
    j["generators"] = aut.generators;
    out << j.dump() << "\n";
    return kExitOk;
  }

  if (cmd_reconstruct->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    if (spec.kind() != SpaceSpec::Kind::Finite)
      throw std::invalid_argument("reconstruct expects a finite space");
    FiniteComplex fc = finite_complex(spec.finite_size());
    std::vector<int> iso = parse_int_array(perm_json);
    std::vector<int> f = reconstruct(fc, fc, iso);
    json j;
    j["point_bijection"] = f;
    j["induces_input"] = verify_geometric(fc, iso, f);
    out << j.dump() << "\n";
    return kExitOk;
  }

  if (cmd_kernel->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    if (spec.kind() != SpaceSpec::Kind::Finite)
      throw std::invalid_argument("kernel expects a finite space");
    auto kernel = kernel_of_action(spec.finite_size());
    json j;
    j["order"] = kernel.size();
    j["elements"] = kernel;
    out << j.dump() << "\n";
    return kExitOk;
  }

  if (cmd_stab->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    if (spec.kind() != SpaceSpec::Kind::Finite)
      throw std::invalid_argument("stabcheck expects a finite space");
    const int n = spec.finite_size();
    StabilizerCheck sc = stabilizer_check(n, mask_from_points(parse_int_array(k_json), n),
                                          mask_from_points(parse_int_array(u_json), n));
    json j;
    j["verified"] = sc.verified;
    j["sphere_based"] = sc.sphere_based;
    j["added_peripheral_pairs"] = sc.added_peripheral_pairs;
    json cuts = json::array();
    for (std::uint64_t m : sc.cut_masks) cuts.push_back(point_list(m, n));
    j["cuts"] = std::move(cuts);
    out << j.dump() << "\n";
    return sc.verified ? kExitOk : kExitViolation;
  }

  if (cmd_pants->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    PantsDecomposition pants = standard_cantor_pants(depth);
    if (spec != SpaceSpec::cantor()) pants = restrict_pants(spec, pants);
    PantsBoundedReport r = verify_pants_bounded(pants, probe_depth);
    bool ok = r.pairwise_compatible && r.every_probe_crossed;
    if (format == "json") {
      json j;
      j["members"] = r.members;
      j["probe_depth"] = r.probe_depth;
      j["probes_checked"] = r.probes_checked;
      j["pairwise_compatible"] = r.pairwise_compatible;
      j["every_probe_crossed"] = r.every_probe_crossed;
      j["max_crossing_set"] = r.max_crossing_set;
      out << j.dump() << "\n";
    } else {
      out << "members " << r.members << ", probes " << r.probes_checked << " at depth "
          << r.probe_depth << "\n"
          << "pairwise compatible: " << (r.pairwise_compatible ? "yes" : "NO") << "\n"
          << "every probe crossed: " << (r.every_probe_crossed ? "yes" : "NO") << "\n"
          << "max crossing set:    " << r.max_crossing_set << "\n";
    }
    return ok ? kExitOk : kExitViolation;
  }

  if (cmd_spheres->parsed()) {
    SpaceSpec spec = parse_space(space_json);
    if (!sides_json.empty()) {
      std::vector<ClopenSet> sides = parse_sides(spec, sides_json);
      SphereRecognition rec = recognize_sphere(spec, sides, depth);
      json j;
      j["recognized"] = rec.ok;
      if (rec.ok) {
        j["n"] = rec.n;
        j["k"] = rec.k;
        Sphere s = make_sphere(spec, sides);
        QuotientSpace q = quotient_space(s);
        j["quotient_labels"] = q.labels;
      } else {
        j["failure"] = rec.failure;
      }
      j["depth"] = depth;
      out << j.dump() << "\n";
      return rec.ok ? kExitOk : kExitViolation;
    }
    if (levels > 0) {
      Exhaustion ex = build_exhaustion(spec, depth, levels);
      json j;
      j["levels"] = ex.levels.size();
      j["cylinder_depths"] = ex.cylinder_depths;
      j["certified_depth"] = ex.certified_depth;
      j["increasing"] = ex.increasing;
      j["complexity"] = ex.complexity;
      j["infinite_complement"] = ex.infinite_complement;
      json quotients = json::array();
      for (const Sphere& s : ex.levels) {
        QuotientSpace q = quotient_space(s);
        quotients.push_back({{"n", s.puncture_count()},
                             {"k", s.boundary_count()},
                             {"labels", q.labels}});
      }
      j["spheres"] = std::move(quotients);
      json maps = json::array();
      for (std::size_t i = 0; i + 1 < ex.levels.size(); ++i)
        maps.push_back(restriction_map(ex.levels[i], ex.levels[i + 1]));
      j["restriction_maps"] = std::move(maps);
      bool limit = inverse_limit_check(ex, static_cast<int>(ex.levels.size()));
      j["inverse_limit"] = limit;
      out << j.dump() << "\n";
      return limit ? kExitOk : kExitViolation;
    }
    throw std::invalid_argument("spheres needs --sides or --levels");
  }

  if (cmd_duality->parsed()) {
    FiniteBooleanAlgebra b(atoms_count);
    StoneDual dual = stone_dual(b);
    json j;
    j["atoms"] = atoms_count;
    j["ultrafilters"] = ultrafilters(b).size();
    bool eta_ok = true;
    std::set<std::vector<std::string>> image;
    for (std::uint64_t m = 0; m < b.element_count(); ++m) {
      AlgebraElement x = b.element(m);
      image.insert(dual.eta(x).antichain());
      if (dual.eta(complement_of(x)) != dual.eta(x).complement()) eta_ok = false;
    }
    j["eta_isomorphism"] = eta_ok && image.size() == b.element_count();
    j["epsilon_bijective"] = verify_epsilon(SpaceSpec::finite(atoms_count));
    bool dual_ok = true;
    if (!hom_json.empty()) {
      json h = json::parse(hom_json);
      Homomorphism g(b, FiniteBooleanAlgebra(static_cast<int>(h.at("atom_map").size())),
                     h.at("atom_map").get<std::vector<int>>());
      dual_ok = verify_dual_preimages(dual_map(g));
    } else {
      std::mt19937_64 rng(seed);
      for (int trial = 0; trial < 100; ++trial) {
        int kb = 1 + static_cast<int>(rng() % 5);
        std::vector<int> amap(static_cast<std::size_t>(kb));
        for (int& v : amap) v = static_cast<int>(rng() % static_cast<std::uint64_t>(atoms_count));
        Homomorphism g(b, FiniteBooleanAlgebra(kb), amap);
        if (!verify_dual_preimages(dual_map(g))) dual_ok = false;
      }
    }
    j["dual_preimages"] = dual_ok;
    out << j.dump() << "\n";
    bool all = eta_ok && image.size() == b.element_count() && dual_ok &&
               j["epsilon_bijective"].get<bool>();
    return all ? kExitOk : kExitViolation;
  }

  if (cmd_systems->parsed()) {
    if (!fixture.empty()) {
      FixtureReport r = run_fixture(fixture);
      out << r.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
      for (const auto& line : r.lines) out << "  " << line << "\n";
      return r.pass ? kExitOk : kExitViolation;
    }
    if (!system_json.empty()) {
      StoneSpaceSystem sys = parse_system(system_json);
      SystemComplex wc = weak_complex(sys);
      SystemComplex sc = strong_complex(sys);
      json j;
      j["weak_vertices"] = wc.graph.size();
      j["weak_edges"] = wc.graph.edge_count();
      j["strong_vertices"] = sc.graph.size();
      j["strong_edges"] = sc.graph.edge_count();
      j["cone_vertices"] = cone_vertices(wc.graph).size();
      // Experiment data for small systems: the strong complex's symmetries
      // against the system homeomorphisms.
      if (sc.graph.size() > 0 && sc.graph.size() <= 80 && sys.n <= 9) {
        j["strong_aut_order"] = graph_automorphisms(sc.graph).order;
        std::vector<int> perm(static_cast<std::size_t>(sys.n));
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t homeos = 0;
        do {
          if (is_system_homeo(perm, sys)) ++homeos;
        } while (std::next_permutation(perm.begin(), perm.end()));
        j["system_homeo_order"] = homeos;
      }
      out << j.dump() << "\n";
      return kExitOk;
    }
    throw std::invalid_argument("systems needs --fixture or --system");
  }

  if (cmd_acceptance->parsed()) {
    auto results = acceptance::run_all(jobs, seed);
    bool all = true;
    for (const auto& r : results) {
      out << "[" << std::setw(2) << r.id << "/13] " << (r.pass ? "PASS" : "FAIL") << "  "
          << r.name << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
      if (!r.pass) out << "  -- " << r.detail;
      out << "\n";
      all = all && r.pass;
    }
    out << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return all ? kExitOk : kExitViolation;
  }

  err << "no subcommand handled\n";
  return kExitUsage;
}

}  // namespace

}  // namespace cutcx::cli
