#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ck/cascade.hpp"
#include "ck/chevalley.hpp"
#include "ck/coadjoint.hpp"
#include "ck/report.hpp"
#include "ck/rootsys.hpp"

namespace ck {

// Integer coordinates over the cascade basis B = {beta_1,...,beta_m}
// (ordered as cascade.nodes), i.e. an element of the lattice Lambda(B).
struct CascadeLatticePoint {
  IntVec coords;

  bool operator==(const CascadeLatticePoint&) const = default;
  bool operator<(const CascadeLatticePoint& o) const { return coords < o.coords; }
};

// Finitely supported exponent vector gamma: positive-root index -> exponent,
// standing for the monomial prod e_phi^{gamma(phi)} in S(n).
using ExponentVector = std::map<int, int>;

inline int total_degree(const ExponentVector& g) {
  int d = 0;
  for (const auto& [idx, e] : g) d += e;
  return d;
}

// A weight vector of S(n)^N: homogeneous of the stated degree, isobaric of
// the stated weight, annihilated by the action of every e_alpha.
struct PolyInvariant {
  CascadeLatticePoint weight;
  int degree = 0;
  std::map<ExponentVector, Rat> terms;
};

// The m free generator weights of the dominant semigroup, in increasing
// (r, lex) order; transition column j holds the coordinates of mu_j over B.
struct GeneratorSet {
  std::vector<CascadeLatticePoint> mus;
  IntMat transition;
};

// r_beta(nu) = (beta, nu)/(beta, beta); beta must be a cascade root.
Rat r_coeff(const RootSystem& rs, const Cascade& c, int beta_idx, const Weight& nu);

// r(nu) = sum of r_beta(nu) over the cascade; the degree of the weight-nu
// invariant when nu is a dominant lattice point.
Rat r_total(const RootSystem& rs, const Cascade& c, const Weight& nu);

// The weight sum coords_i beta_i.
Weight lattice_weight(const RootSystem& rs, const Cascade& c, const CascadeLatticePoint& p);

// Coordinates of nu over B when nu lies in Lambda(B) (real span membership is
// decided by the orthogonal-projection identity nu = sum r_beta(nu) beta and
// cross-checked against the w0(nu) = -nu criterion; integrality on top of
// that); absent otherwise.
std::optional<CascadeLatticePoint> in_cascade_span(const RootSystem& rs, const Cascade& c,
                                                   const Weight& nu);

// All dominant lattice points with 1 <= r <= r_cap, in increasing (r, lex)
// order.  Dominance forces every coordinate into Z_+, so the search region
// is the simplex sum coords <= r_cap.
std::vector<CascadeLatticePoint> dominant_lattice_points(const RootSystem& rs,
                                                         const Cascade& c, int r_cap);

// The indecomposable dominant lattice points.  Throws std::runtime_error
// ("cap exceeded") if fewer than m appear up to r_cap, or a theorem-violation
// error if more than m appear, the transition matrix is not unimodular, or
// some enumerated dominant point fails to decompose over the generators with
// nonnegative integer multiplicities.
GeneratorSet semigroup_generators(const RootSystem& rs, const Cascade& c, int r_cap);

// The cascade monomial gamma_r: beta_i -> coords_i, zero off B.
ExponentVector cascade_monomial(const Cascade& c, const CascadeLatticePoint& p);

// All exponent vectors of total degree r(nu) and weight nu (the set
// Gamma(nu)), sorted; always contains cascade_monomial(p).  Throws if p is
// not dominant.
std::vector<ExponentVector> monomial_support(const RootSystem& rs, const Cascade& c,
                                             const CascadeLatticePoint& p);

// The unique (up to scale) invariant of weight nu, computed as the joint
// kernel of the simple-root derivations on the span of Gamma(nu) and
// normalized so the cascade monomial has coefficient 1.  Throws a
// theorem-violation error if the kernel dimension is not 1 or the cascade
// coefficient vanishes.
PolyInvariant compute_invariant(const ChevalleyTable& tbl, const Cascade& c,
                                const CascadeLatticePoint& p);

// Dimension of the weight-nu invariants per polynomial degree (only nonzero
// entries).  Enumerates every exponent vector of weight nu in every degree;
// zero dimensions are certified by a full-column-rank elimination modulo a
// fixed prime (one-sided exact) with an exact rational fallback.
std::map<int, int> weight_multiplicity_by_degree(const ChevalleyTable& tbl, const Cascade& c,
                                                 const Weight& nu);

// Total invariant multiplicity of the weight nu across all degrees.
int all_weight_multiplicity(const ChevalleyTable& tbl, const Cascade& c, const Weight& nu);

// True iff the weight-nu invariant equals the product of generator
// invariants prescribed by the Laurent coordinates of nu (exact polynomial
// identity; both sides carry cascade coefficient 1).
bool factorization_check(const ChevalleyTable& tbl, const Cascade& c, const GeneratorSet& gens,
                         const CascadeLatticePoint& p);

// Evaluation under the pairing <e_phi, e_{-psi}> = delta: substitute the
// coordinates of z into every monomial.
Rat evaluate(const PolyInvariant& inv, const NMinusElement& z);
Rat evaluate_at_cross_section(const PolyInvariant& inv, const CrossSectionPoint& t);

// The unique integer solution d of transition. d = coords, so that the
// weight-nu invariant is the Laurent monomial prod xi_{mu_i}^{d_i}.
IntVec laurent_coordinates(const GeneratorSet& gens, const CascadeLatticePoint& p);

std::string lattice_str(const CascadeLatticePoint& p);
std::string invariant_str(const RootSystem& rs, const PolyInvariant& inv);

// Full per-type battery: generator structure, and for every dominant lattice
// point with r <= r_cap multiplicity one, the degree formula over all
// degrees, nonvanishing leading coefficient, factorization, and the
// cross-section evaluation identity at 5 seeded points; multiplicity zero at
// 20 seeded non-dominant/off-lattice weights with nonempty monomial spaces;
// a dominance scan over |coords| <= lattice_cap; N-invariance of the
// generator invariants at 10 seeded group elements x 10 points; and the
// observed half-integrality of r_beta on sampled dominant weights.
VerificationReport verify_invariants(const ChevalleyTable& tbl, const Cascade& c,
                                     std::uint64_t seed, int r_cap, int lattice_cap);

}  // namespace ck
