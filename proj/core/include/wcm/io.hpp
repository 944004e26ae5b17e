#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wcm/graph.hpp"
#include "wcm/reductions.hpp"

namespace wcm {

/// `.gr`: "c ..." comments, "p wcm <n> <m>", then exactly m lines "e <u> <v> <w>".
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g, const std::vector<std::string>& comments = {});

/// "m <u> <v>" lines; every pair must be an edge of `g`.
Matching read_certificate(std::istream& in, const WeightedGraph& g);
/// Edges written as (min, max) pairs in ascending order.
void write_certificate(std::ostream& out, const WeightedGraph& g, const Matching& m);

/// Label sidecar: "c kind <kind>", "c k <k>", then "map <id> <label>" per vertex.
struct LabelMap {
  std::optional<std::string> kind;
  std::optional<Weight> k;
  std::vector<std::string> labels;
};
LabelMap read_map(std::istream& in, int num_vertices);
void write_map(std::ostream& out, const LabeledInstance& inst);

Cnf read_cnf(std::istream& in);
void write_cnf(std::ostream& out, const Cnf& f);

/// "p steiner n m", "e u v", "t v", "k <budget>".
SteinerInstance read_steiner(std::istream& in);
void write_steiner(std::ostream& out, const SteinerInstance& inst);

/// "p setcover q p", one "s <elems...>" line per set, "k <budget>".
SetCoverInstance read_setcover(std::istream& in);
void write_setcover(std::ostream& out, const SetCoverInstance& inst);

/// "p wcs n m", "v <id> <w>" per vertex, "e u v", optional "k <int>".
WcsSource read_wcs(std::istream& in);
void write_wcs(std::ostream& out, const VertexWeightedGraph& g, Weight k,
               const std::vector<std::string>& labels = {});

/// Source-side solutions for map-cert:
///   assignment  "v <lit...> 0" (DIMACS solution line), plus "i <l>" for crosscomp
///   Steiner tree "n <v>" vertex lines and "e <u> <v>" edge lines
///   vertex set  "n <v>" lines
SourceSolution read_source_solution(std::istream& in, ReductionKind kind, const ReductionSource& source);
void write_source_solution(std::ostream& out, const SourceSolution& solution);

/// Opens `path` and applies `fn`, prefixing errors with the path.
template <class Fn>
auto with_input_file(const std::string& path, Fn&& fn) -> decltype(fn(std::declval<std::istream&>())) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  try {
    return fn(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace wcm
