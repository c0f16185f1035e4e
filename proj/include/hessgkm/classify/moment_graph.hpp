#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm {

struct MomentEdge {
  Permutation from;  ///< the endpoint whose cell contains the curve
  Permutation to;    ///< t_{ij} from
  Character weight;  ///< e_i - e_j for the root position (i, j)
  friend bool operator==(const MomentEdge&, const MomentEdge&) = default;
};

struct MomentGraph {
  int n = 0;
  std::vector<Permutation> vertices;
  std::vector<MomentEdge> edges;
  Subtorus torus;
  /// False when infinitely many one-dimensional orbits were detected.
  bool complete = true;
  std::optional<Permutation> locked_pair_witness;
  std::string note;
};

/// Vertices are the permutation flags of H(X, h); an edge joins w and
/// t_{ij} w when the root curve through w lies in the variety. For X = F_2
/// with the canonical torus the locked-pair scan also runs. Throws
/// Unsupported when `torus` is not regular.
MomentGraph moment_graph(const SkeletalNilpotent& x, const HessenbergFunction& h,
                         const Subtorus& torus, int first_sample = 1);

/// The graph on flags of C^{n-1} obtained by deleting the fixed last index,
/// or nullopt when some vertex moves n or some weight involves e_n.
std::optional<MomentGraph> drop_last_index(const MomentGraph& g);

/// Same vertices and the same edges with weights up to sign, ignoring
/// order and edge orientation.
bool same_graph(const MomentGraph& a, const MomentGraph& b);

}  // namespace hessgkm
