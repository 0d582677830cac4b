#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ck/cascade.hpp"
#include "ck/chevalley.hpp"
#include "ck/report.hpp"
#include "ck/rootsys.hpp"
#include "ck/sampler.hpp"

namespace ck {

// Sparse element of n_-: positive-root index -> coefficient of e_{-phi}.
struct NMinusElement {
  std::map<int, Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(int idx, const Rat& c);  // drops zero results
  Rat at(int idx) const;
  bool operator==(const NMinusElement&) const = default;
};

// t = sum t_beta e_{-beta} over the cascade roots, every t_beta nonzero.
struct CrossSectionPoint {
  std::map<int, Rat> t;  // cascade-root index -> coefficient

  NMinusElement as_nminus() const;
};

// u = exp(log) with log in n; N is unipotent, so exp is onto.
struct GroupElement {
  LieElement log;
};

std::string nminus_str(const RootSystem& rs, const NMinusElement& z);

// Projection of g onto n_- with kernel b.
NMinusElement project_nminus(const LieElement& x);
LieElement lift_nminus(const NMinusElement& z);

// coad v(z): project [v, z]; v must lie in n.
NMinusElement coad(const ChevalleyTable& tbl, const LieElement& v, const NMinusElement& z);

// Ad exp(log)(x) as the exact finite series sum (ad log)^k (x) / k!.
LieElement ad_exp(const ChevalleyTable& tbl, const LieElement& log, const LieElement& x);

// Coad u(z): project Ad u(z).
NMinusElement coad_group(const ChevalleyTable& tbl, const GroupElement& u,
                         const NMinusElement& z);

// Matrix of v -> coad v(tau) over the e_phi / e_{-phi} bases: column j holds
// the coordinates of coad e_{phi_j}(tau).
RatMat coad_matrix(const ChevalleyTable& tbl, const NMinusElement& tau);

// Basis (rows, over the e_phi coordinates) of {v in n : coad v(tau) = 0}.
RatMat isotropy_algebra(const ChevalleyTable& tbl, const NMinusElement& tau);

// dim n - dim isotropy, i.e. the rank of the coad matrix at tau.
int orbit_dimension(const ChevalleyTable& tbl, const NMinusElement& tau);

// For v in s = span{e_phi : phi off the cascade}: coad v(tau) is nonzero and
// lies in s_-.  Checked exactly on every basis vector and by rank (which
// proves it for all of s), then demonstrated on seeded samples.
VerificationReport check_s_injectivity(const ChevalleyTable& tbl, const Cascade& c,
                                       const CrossSectionPoint& tau, int samples,
                                       std::uint64_t seed);

// The orbit of tau meets r_- only at tau: group elements with log off the
// cascade move tau out of r_-; those with log on the cascade fix it.
VerificationReport check_cross_section(const ChevalleyTable& tbl, const Cascade& c,
                                       const CrossSectionPoint& tau, int samples,
                                       std::uint64_t seed);

// True iff span{coad v(tau) : v in n} + span{project [h, tau]} is all of n_-
// and the dimension identity (dim n - m) + m = dim n_- holds at tau.
bool check_open_orbit(const ChevalleyTable& tbl, const Cascade& c,
                      const CrossSectionPoint& tau);

// Seeded generators: coefficients in {-3,...,-1,1,...,3}.
CrossSectionPoint random_cross_section(const Cascade& c, Sampler& gen);
NMinusElement random_nminus(const RootSystem& rs, Sampler& gen);
LieElement random_n_element(const RootSystem& rs, Sampler& gen);

// Full suite for one type: num_tau seeded cross-section points (isotropy,
// orbit dimension, injectivity on s, cross-section separation with `samples`
// group elements, open orbit), plus once per type: coad-commutator
// consistency, group-action composition, H-equivariance, and the rank drop
// at a degenerate point.
VerificationReport verify_coadjoint(const ChevalleyTable& tbl, const Cascade& c,
                                    std::uint64_t seed, int num_tau, int samples);

}  // namespace ck
