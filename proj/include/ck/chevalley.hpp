#pragma once

#include <iosfwd>
#include <map>

#include "ck/rational.hpp"
#include "ck/rootsys.hpp"

namespace ck {

// Signed root keys: +(idx+1) for the positive root phi_idx, -(idx+1) for its
// negative.  0 is never a key.
inline int root_key(int idx, bool negative = false) { return negative ? -(idx + 1) : idx + 1; }
inline int key_index(int key) { return (key > 0 ? key : -key) - 1; }
inline bool key_negative(int key) { return key < 0; }

// Element of the semisimple algebra: a Cartan part over the simple coroots
// alpha_i^vee plus root-vector coefficients by signed key.
struct LieElement {
  RatVec cartan;             // empty or size = rank
  std::map<int, Rat> parts;  // signed key -> coefficient of e_{key}

  bool is_zero() const { return cartan_zero() && parts.empty(); }
  bool cartan_zero() const;
  void add_part(int key, const Rat& c);     // drops zero results
  void add_cartan(int rank, const RatVec& c, const Rat& scale);
  bool operator==(const LieElement&) const = default;
};

LieElement lie_zero();
LieElement lie_e(int key, const Rat& c = 1);

std::string lie_str(const RootSystem& rs, const LieElement& x);

// Chevalley basis with integer structure constants.  Extraspecial pairs get
// the positive sign |N| = p+1; every other constant is propagated from those
// through the Jacobi identity and the standard length-ratio relations, so
// N_{-phi,-psi} = -N_{phi,psi} holds throughout.
class ChevalleyTable {
 public:
  explicit ChevalleyTable(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }

  // N_{phi,psi} for signed keys; 0 when phi + psi is not a root.  Throws on
  // phi + psi = 0 (that bracket is a coroot, not a root vector).
  long long structure_constant(int key_a, int key_b) const;

  // p: the largest k with psi - k phi a root (keys signed).
  int string_down(int key_a, int key_b) const;

  // Coordinates of phi^vee = 2 phi/(phi,phi) over the simple coroots.
  RatVec coroot(int idx) const;

  // Value phi(h) for h given over the simple coroots (phi by signed key).
  Rat eval_on_cartan(const RatVec& cartan, int key) const;

  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // (ad z)^k (x); z must lie in n (positive keys only, no Cartan part).
  LieElement ad_pow(const LieElement& z, const LieElement& x, int k) const;

  // TSV dump of all nonzero N (columns: phi, psi, N), deterministic order.
  void dump_tsv(std::ostream& out) const;

 private:
  long long pos_pair(int i, int j) const { return pos_[i][j]; }
  long long mixed_from_pos(int i, int j) const;

  const RootSystem* rs_;
  std::vector<IntVec> pos_;    // N_{phi_i, phi_j}, 0 if not a root sum
  std::vector<IntVec> mixed_;  // N_{phi_i, -phi_j}, 0 if not a root sum
  std::vector<IntVec> sum_;    // index of phi_i + phi_j, -1 otherwise
  IntMat coroot_pairing_;      // <phi_k, alpha_i^vee>
};

ChevalleyTable build_chevalley(const RootSystem& rs);

}  // namespace ck
