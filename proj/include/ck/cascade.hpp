#pragma once

#include <map>
#include <vector>

#include "ck/chevalley.hpp"
#include "ck/report.hpp"
#include "ck/rootsys.hpp"

namespace ck {

// One node of the cascade forest: the highest root beta of the subsystem on
// support, together with its Heisenberg layer E(beta).
struct CascadeNode {
  int beta = -1;                // positive-root index
  std::vector<int> support;     // simple indices, ascending
  std::vector<int> delta_plus;  // positive-root indices of the subsystem
  std::vector<int> layer;       // E(beta) = {phi : (phi,beta) > 0}, ascending
  int parent = -1;              // node index, -1 at a tree root
  std::vector<int> children;    // node indices
  int h_dual = 0;               // dual Coxeter number of the subsystem
};

// The cascade: nodes in depth-first order (children by smallest supporting
// simple index), so nodes[k].beta is beta_{k+1}.
struct Cascade {
  std::vector<CascadeNode> nodes;

  int m() const { return static_cast<int>(nodes.size()); }

  // Node index housing the cascade root beta (by positive-root index);
  // throws std::invalid_argument if beta is not a cascade root.
  int node_of(int beta) const;
  bool in_cascade(int root_idx) const;

  const std::vector<int>& layer(int beta) const { return nodes[node_of(beta)].layer; }

  // The Heisenberg twin phi' with phi + phi' = beta, for phi in
  // layer(beta) \ {beta}.  Throws if phi is a cascade root or not in a layer.
  int twin(int phi) const;

  // The chain from the forest root down to the node whose layer contains
  // phi, as positive-root indices.  Throws if phi is out of range.
  std::vector<int> chain_of(int phi) const;

  std::map<int, int> node_of_;  // cascade root -> node index
  std::map<int, int> twin_;     // layer member (not beta) -> twin
  std::vector<int> home_;       // positive root -> node index of its layer
};

Cascade compute_cascade(const RootSystem& rs);

// Exact checks of the structural claims: local highness, layer sizes
// 2 h_dual - 3, the ratio 2(beta,phi)/(beta,beta) = 1 on layers, the
// partition of the positive roots, strong orthogonality and maximality,
// the product of cascade reflections against the longest element (any
// order), stability of each subsystem under the other reflections, the
// restriction of w0 to each subsystem, chain ordering, and total
// disjointness of unrelated subsystems.
VerificationReport verify_section1(const RootSystem& rs, const Cascade& cascade);

// True iff span{e_phi : phi in E(beta)} is Heisenberg with center e_beta:
// twin pairs bracket to nonzero multiples of e_beta, all other pairs to 0.
bool heisenberg_bracket_check(const RootSystem& rs, const ChevalleyTable& tbl,
                              const Cascade& cascade, int beta);

}  // namespace ck
