#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

/// CNF formula; literal +i / -i refers to variable x_i (1-based).
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// assignment[i] is the value of x_{i+1}.
using Assignment = std::vector<bool>;

bool satisfies(const Cnf& f, const Assignment& a);
/// Truth-table search; nullopt when unsatisfiable. Limited to 24 variables.
std::optional<Assignment> solve_sat_exhaustive(const Cnf& f);

/// Steiner tree input: edge weights of `graph` are ignored.
struct SteinerInstance {
  WeightedGraph graph;
  std::vector<Vertex> terminals;
  int budget = 0;
};

struct SteinerTree {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Empty string when `t` is a tree of the source graph spanning every
/// terminal with at most `budget` edges; otherwise the violated constraint.
std::string check_steiner_tree(const SteinerInstance& inst, const SteinerTree& t);
/// Exhaustive search over edge subsets (small instances only).
std::optional<SteinerTree> solve_steiner_exhaustive(const SteinerInstance& inst);

/// Elements are 0-based ids below `universe`.
struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  int budget = 0;
};

/// Indices into SetCoverInstance::sets.
using SetFamily = std::vector<int>;

std::string check_set_cover(const SetCoverInstance& inst, const SetFamily& family);

struct WcsInstance {
  VertexWeightedGraph graph;
  Weight k = 0;
  std::vector<std::string> labels;
};

struct WcsSource {
  VertexWeightedGraph graph;
  Weight k = 0;
};

struct CrossCompositionCertificate {
  /// 0-based index of the satisfied instance.
  int instance = 0;
  Assignment assignment;
};

enum class ReductionKind { Starlike, Bip4, PlanarSubcubic, PlanarBipartite, CrossComposition, WcsToWcm };

std::string to_string(ReductionKind kind);
ReductionKind parse_reduction_kind(const std::string& name);

using ReductionSource = std::variant<Cnf, std::vector<Cnf>, SteinerInstance, WcsSource>;
using SourceSolution = std::variant<Assignment, SteinerTree, CrossCompositionCertificate, std::vector<Vertex>>;

/// Generated instance with one label per vertex (see README for the grammar).
struct LabeledInstance {
  ReductionKind kind = ReductionKind::Starlike;
  WeightedGraph graph;
  Weight k = 0;
  std::vector<std::string> labels;
  ReductionSource source;

  /// Vertex carrying `label`; throws if absent.
  Vertex at(const std::string& label) const;
  std::optional<Vertex> find(const std::string& label) const;
  void rebuild_index();

 private:
  std::unordered_map<std::string, Vertex> index_;
};

/// Parameters of the planar subcubic construction.
struct SteinerParams {
  Weight q = 0;
  Weight p = 0;
  Weight r = 0;
  Weight k = 0;
};
SteinerParams steiner_params(const SteinerInstance& inst);

LabeledInstance gen_starlike(const Cnf& f);
LabeledInstance gen_bip4(const Cnf& f);
LabeledInstance gen_planar_subcubic(const SteinerInstance& inst);
LabeledInstance gen_planar_bipartite(const Cnf& f);
LabeledInstance gen_crosscomp(const std::vector<Cnf>& instances);
LabeledInstance gen_wcs_to_wcm(const VertexWeightedGraph& g, Weight k);
WcsInstance gen_setcover_to_wcs(const SetCoverInstance& inst);

/// Rebuilds a labeled instance from a graph, its labels and the source;
/// checks that every label of the construction is present.
LabeledInstance attach_source(ReductionKind kind, WeightedGraph graph, Weight k, std::vector<std::string> labels,
                              ReductionSource source);

Matching lift_certificate(const LabeledInstance& inst, const SourceSolution& solution);
SourceSolution project_certificate(const LabeledInstance& inst, const Matching& m);

std::vector<Vertex> lift_set_cover(const WcsInstance& inst, const SetCoverInstance& source, const SetFamily& family);
SetFamily project_set_cover(const WcsInstance& inst, const SetCoverInstance& source, std::span<const Vertex> vertices);

}  // namespace wcm
