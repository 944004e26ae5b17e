#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wcm/dispatch.hpp"
#include "wcm/io.hpp"
#include "wcm/reductions.hpp"
#include "wcm/tree_decomposition.hpp"

namespace {

using namespace wcm;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  return out;
}

WeightedGraph load_graph(const std::string& path) {
  return with_input_file(path, [](std::istream& in) { return read_graph(in); });
}

Cnf load_cnf(const std::string& path) {
  return with_input_file(path, [](std::istream& in) { return read_cnf(in); });
}

ReductionSource load_source(ReductionKind kind, const std::vector<std::string>& paths, std::optional<Weight> k) {
  auto single = [&]() -> const std::string& {
    if (paths.size() != 1) throw Error("kind '" + to_string(kind) + "' takes exactly one --source file");
    return paths[0];
  };
  switch (kind) {
    case ReductionKind::Starlike:
    case ReductionKind::Bip4:
    case ReductionKind::PlanarBipartite:
      return load_cnf(single());
    case ReductionKind::CrossComposition: {
      if (paths.empty()) throw Error("crosscomp needs at least one --source file");
      std::vector<Cnf> all;
      for (const auto& p : paths) all.push_back(load_cnf(p));
      return all;
    }
    case ReductionKind::PlanarSubcubic:
      return with_input_file(single(), [](std::istream& in) { return read_steiner(in); });
    case ReductionKind::WcsToWcm: {
      WcsSource src = with_input_file(single(), [](std::istream& in) { return read_wcs(in); });
      if (k) src.k = *k;
      return src;
    }
  }
  throw Error("unknown reduction kind");
}

LabeledInstance generate(ReductionKind kind, const ReductionSource& source) {
  switch (kind) {
    case ReductionKind::Starlike:
      return gen_starlike(std::get<Cnf>(source));
    case ReductionKind::Bip4:
      return gen_bip4(std::get<Cnf>(source));
    case ReductionKind::PlanarBipartite:
      return gen_planar_bipartite(std::get<Cnf>(source));
    case ReductionKind::CrossComposition:
      return gen_crosscomp(std::get<std::vector<Cnf>>(source));
    case ReductionKind::PlanarSubcubic:
      return gen_planar_subcubic(std::get<SteinerInstance>(source));
    case ReductionKind::WcsToWcm: {
      const auto& src = std::get<WcsSource>(source);
      return gen_wcs_to_wcm(src.graph, src.k);
    }
  }
  throw Error("unknown reduction kind");
}

struct SolveArgs {
  std::string graph;
  std::string solver = "auto";
  std::string td;
  std::optional<Weight> k;
  std::string out;
  int brute_limit = 24;
};

int run_solve(const SolveArgs& a) {
  const WeightedGraph g = load_graph(a.graph);
  DispatchOptions opts;
  opts.solver = parse_solver_kind(a.solver);
  opts.brute_edge_limit = a.brute_limit;
  if (!a.td.empty()) {
    opts.td = with_input_file(a.td, [&](std::istream& in) { return read_td(in, g.num_vertices()); });
  }
  const DispatchResult r = dispatch_solve(g, opts);
  std::cout << "c solver";
  for (SolverKind s : r.component_solvers) std::cout << ' ' << to_string(s);
  std::cout << '\n' << "w " << r.solution.optimum << '\n';
  if (a.out.empty()) {
    write_certificate(std::cout, g, r.solution.witness);
  } else {
    auto out = open_output(a.out);
    write_certificate(out, g, r.solution.witness);
  }
  if (a.k) return r.solution.optimum >= *a.k ? kYes : kNo;
  return kYes;
}

struct VerifyArgs {
  std::string graph;
  std::string cert;
  Weight k = 0;
};

int run_verify(const VerifyArgs& a) {
  const WeightedGraph g = load_graph(a.graph);
  const Matching m = with_input_file(a.cert, [&](std::istream& in) { return read_certificate(in, g); });
  const VerifyResult v = verify_certificate(g, m, a.k);
  std::cout << "w " << m.weight() << '\n';
  if (v.accepted) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no: " << v.reason << '\n';
  return kNo;
}

struct GenerateArgs {
  std::string kind;
  std::vector<std::string> sources;
  std::string out_graph;
  std::string out_map;
  std::optional<Weight> k;
};

int run_generate(const GenerateArgs& a) {
  if (a.kind == "setcover") {
    if (a.sources.size() != 1) throw Error("kind 'setcover' takes exactly one --source file");
    const SetCoverInstance sc = with_input_file(a.sources[0], [](std::istream& in) { return read_setcover(in); });
    const WcsInstance w = gen_setcover_to_wcs(sc);
    auto out = open_output(a.out_graph);
    write_wcs(out, w.graph, w.k, w.labels);
    std::cout << "k " << w.k << '\n';
    return kYes;
  }
  const ReductionKind kind = parse_reduction_kind(a.kind);
  const LabeledInstance inst = generate(kind, load_source(kind, a.sources, a.k));
  {
    auto out = open_output(a.out_graph);
    write_graph(out, inst.graph, {"kind " + to_string(kind), "k " + std::to_string(inst.k)});
  }
  if (!a.out_map.empty()) {
    auto out = open_output(a.out_map);
    write_map(out, inst);
  }
  std::cout << "k " << inst.k << '\n';
  return kYes;
}

struct MapCertArgs {
  std::string kind;
  std::vector<std::string> sources;
  std::string graph;
  std::string map;
  std::string direction;
  std::string in;
  std::string out;
  std::optional<Weight> k;
};

int run_map_cert(const MapCertArgs& a) {
  if (a.direction != "lift" && a.direction != "project") throw Error("--direction must be lift or project");
  auto out = open_output(a.out);
  if (a.kind == "setcover") {
    if (a.sources.size() != 1) throw Error("kind 'setcover' takes exactly one --source file");
    const SetCoverInstance sc = with_input_file(a.sources[0], [](std::istream& in) { return read_setcover(in); });
    const WcsInstance w = gen_setcover_to_wcs(sc);
    if (a.direction == "lift") {
      const auto family = with_input_file(a.in, [&](std::istream& in) {
        SetFamily f;
        for (std::string tag; in >> tag;) {
          long long s = 0;
          if (tag != "s" || !(in >> s)) throw Error("expected 's <set index>' lines");
          f.push_back(static_cast<int>(s - 1));
        }
        return f;
      });
      write_source_solution(out, lift_set_cover(w, sc, family));
    } else {
      const auto vs = with_input_file(a.in, [&](std::istream& in) {
        WcsSource dummy{w.graph, w.k};
        return std::get<std::vector<Vertex>>(read_source_solution(in, ReductionKind::WcsToWcm, dummy));
      });
      for (int s : project_set_cover(w, sc, vs)) out << "s " << s + 1 << '\n';
    }
    return kYes;
  }
  const ReductionKind kind = parse_reduction_kind(a.kind);
  WeightedGraph g = load_graph(a.graph);
  const LabelMap map = with_input_file(a.map, [&](std::istream& in) { return read_map(in, g.num_vertices()); });
  if (map.kind && parse_reduction_kind(*map.kind) != kind) {
    throw Error("map was written for kind '" + *map.kind + "', not '" + a.kind + "'");
  }
  ReductionSource source = load_source(kind, a.sources, a.k);
  Weight k = 0;
  if (map.k) {
    k = *map.k;
  } else {
    k = generate(kind, source).k;
  }
  const LabeledInstance inst = attach_source(kind, std::move(g), k, map.labels, std::move(source));
  if (a.direction == "lift") {
    const SourceSolution sol =
        with_input_file(a.in, [&](std::istream& in) { return read_source_solution(in, kind, inst.source); });
    const Matching m = lift_certificate(inst, sol);
    write_certificate(out, inst.graph, m);
    std::cout << "w " << m.weight() << '\n';
  } else {
    const Matching m = with_input_file(a.in, [&](std::istream& in) { return read_certificate(in, inst.graph); });
    write_source_solution(out, project_certificate(inst, m));
  }
  return kYes;
}

struct DecomposeArgs {
  std::string graph;
  std::string heuristic = "min-fill";
  std::string out;
};

int run_decompose(const DecomposeArgs& a) {
  const WeightedGraph g = load_graph(a.graph);
  EliminationHeuristic h = EliminationHeuristic::MinFill;
  if (a.heuristic == "min-degree") {
    h = EliminationHeuristic::MinDegree;
  } else if (a.heuristic != "min-fill") {
    throw Error("unknown heuristic '" + a.heuristic + "'");
  }
  const TreeDecomposition td = heuristic_td(g, h);
  const int width = validate_td(g, td);
  if (a.out.empty()) {
    write_td(std::cout, td, g.num_vertices());
  } else {
    auto out = open_output(a.out);
    write_td(out, td, g.num_vertices());
  }
  std::cerr << "width " << width << '\n';
  return kYes;
}

int run_classify(const std::string& path) {
  const WeightedGraph g = load_graph(path);
  const GraphClassReport c = classify(g);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "vertices " << g.num_vertices() << '\n'
            << "edges " << g.num_edges() << '\n'
            << "connected " << yn(c.connected) << '\n'
            << "tree " << yn(c.is_tree) << '\n'
            << "path " << yn(c.is_path) << '\n'
            << "cycle " << yn(c.is_cycle) << '\n'
            << "max_degree " << c.max_degree << '\n'
            << "bipartite " << yn(c.bipartite()) << '\n'
            << "chordal " << yn(c.chordal()) << '\n'
            << "nonnegative " << yn(c.all_weights_nonnegative) << '\n';
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum weight connected matching toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print its optimum");
  solve_cmd->add_option("--graph", solve.graph, ".gr input")->required();
  solve_cmd->add_option("--solver", solve.solver, "auto|brute|tree|cycle|chordal|treewidth");
  solve_cmd->add_option("--td", solve.td, ".td decomposition for the treewidth solver");
  solve_cmd->add_option("--k", solve.k, "exit 1 when the optimum is below this threshold");
  solve_cmd->add_option("--out", solve.out, "certificate output (stdout when omitted)");
  solve_cmd->add_option("--brute-limit", solve.brute_limit, "edge limit for brute force");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a matching certificate");
  verify_cmd->add_option("--graph", verify.graph)->required();
  verify_cmd->add_option("--cert", verify.cert)->required();
  verify_cmd->add_option("--k", verify.k)->required();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build a reduction instance");
  gen_cmd->add_option("kind", gen.kind, "starlike|bip4|planar-subcubic|planar-bipartite|crosscomp|wcs|setcover")
      ->required();
  gen_cmd->add_option("--source", gen.sources, "source instance file(s)")->required();
  gen_cmd->add_option("--out", gen.out_graph, "generated graph")->required();
  gen_cmd->add_option("--map", gen.out_map, "label map sidecar");
  gen_cmd->add_option("--k", gen.k, "threshold for wcs sources without a k line");

  MapCertArgs mc;
  auto* mc_cmd = app.add_subcommand("map-cert", "Translate certificates across a reduction");
  mc_cmd->add_option("--kind", mc.kind)->required();
  mc_cmd->add_option("--source", mc.sources)->required();
  mc_cmd->add_option("--graph", mc.graph);
  mc_cmd->add_option("--map", mc.map);
  mc_cmd->add_option("--direction", mc.direction, "lift|project")->required();
  mc_cmd->add_option("--in", mc.in)->required();
  mc_cmd->add_option("--out", mc.out)->required();
  mc_cmd->add_option("--k", mc.k, "threshold for wcs sources without a k line");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Write a heuristic tree decomposition");
  dec_cmd->add_option("--graph", dec.graph)->required();
  dec_cmd->add_option("--heuristic", dec.heuristic, "min-fill|min-degree");
  dec_cmd->add_option("--out", dec.out, ".td output (stdout when omitted)");

  std::string classify_path;
  auto* cls_cmd = app.add_subcommand("classify", "Report the graph classes relevant to solver choice");
  cls_cmd->add_option("--graph", classify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*gen_cmd) return run_generate(gen);
    if (*mc_cmd) {
      if (mc.kind != "setcover" && (mc.graph.empty() || mc.map.empty())) {
        throw Error("map-cert needs --graph and --map for kind '" + mc.kind + "'");
      }
      return run_map_cert(mc);
    }
    if (*dec_cmd) return run_decompose(dec);
    if (*cls_cmd) return run_classify(classify_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
