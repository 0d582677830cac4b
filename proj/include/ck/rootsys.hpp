#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ck/rational.hpp"

namespace ck {

// Cartan type of a semisimple algebra, one or more simple components:
// "A3", "B2xG2", ...  Families A..G with the usual rank bounds
// (A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2).
struct TypeSpec {
  struct Component {
    char family = 'A';
    int rank = 1;
  };
  std::vector<Component> components;

  // Throws std::invalid_argument on bad grammar or rank bounds.
  static TypeSpec parse(std::string_view text);
  std::string str() const;  // canonical form, e.g. "B2xG2"
  int total_rank() const;
};

// A root written over the simple roots (coefficients all >= 0 or all <= 0).
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool operator==(const Root&) const = default;
};

// Rational vector in the span of the simple roots.
using Weight = RatVec;

Weight to_weight(const std::vector<int>& coeffs);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(const Rat& c, const Weight& a);
std::string weight_str(const Weight& w);

// An element of the Weyl group: a word in simple reflections together with
// its matrix on simple-root coordinates.  matrix equals the product of the
// simple-reflection matrices of word, left to right.
struct WeylElement {
  std::vector<int> word;
  IntMat matrix;

  std::vector<int> apply(const std::vector<int>& coeffs) const;
  Weight apply(const Weight& w) const;
};

struct SubsystemComponent {
  std::vector<int> simples;  // ascending simple indices
  int highest;               // positive-root index of the component's highest root
};

// The set of positive roots supported on a subset of simple roots, split
// into connected components.
struct Subsystem {
  std::vector<int> roots;  // ascending positive-root indices
  std::vector<SubsystemComponent> components;
};

class RootSystem {
 public:
  explicit RootSystem(const TypeSpec& spec);

  const TypeSpec& type() const { return spec_; }
  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  // Positive roots ordered by height, then reverse-lexicographically on
  // coefficients, so positive_roots()[i] is the simple root alpha_{i+1}
  // for i < rank().
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int idx) const { return positive_[idx]; }

  // Index of a positive root; -1 if the vector is not one.
  int index_of(const std::vector<int>& coeffs) const;
  bool is_root(const std::vector<int>& coeffs) const;  // positive or negative

  // cartan()[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i).
  const IntMat& cartan() const { return cartan_; }
  // (alpha_i, alpha_i) = 2 d_i; short roots of each component have d = 1.
  const IntVec& symmetrizer() const { return d_; }
  // Gram matrix of the simple roots, (alpha_i, alpha_j).
  long long gram(int i, int j) const { return gram_[i][j]; }

  long long inner_root(int i, int j) const;  // (phi_i, phi_j) for positive-root indices
  long long norm2(int idx) const;            // (phi, phi)
  Rat inner(const Weight& v, const Weight& w) const;

  // <phi, alpha_i^vee> for the positive root phi_idx (integer).
  long long pairing_with_simple_coroot(int root_idx, int i) const;

  // Simple indices with a positive coefficient.  Throws std::invalid_argument
  // if idx is out of range.
  std::set<int> support(int idx) const;

  bool adjacent(int i, int j) const;  // Dynkin diagram adjacency of simples
  bool connected(const std::set<int>& simples) const;
  // Connected components of the induced subdiagram, ordered by smallest
  // simple index.
  std::vector<std::vector<int>> diagram_components(const std::set<int>& simples) const;

  Weight reflect(int beta_idx, const Weight& nu) const;             // s_beta(nu)
  std::vector<int> reflect_int(int beta_idx, const std::vector<int>& v) const;

  Weight rho() const;                                    // half-sum of positive roots
  Weight rho(const std::vector<int>& sub_roots) const;   // half-sum over given roots

 private:
  TypeSpec spec_;
  int rank_ = 0;
  IntMat cartan_;
  IntVec d_;
  IntMat gram_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> index_;
};

RootSystem build_root_system(const TypeSpec& spec);
RootSystem build_root_system(std::string_view spec);

Subsystem subsystem(const RootSystem& rs, const std::set<int>& simples);

// Longest element by greedy descent on a strictly dominant vector.
WeylElement longest_element(const RootSystem& rs);
// Longest element of the parabolic subsystem on the given simple indices.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& simples);

WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement weyl_identity(const RootSystem& rs);
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
// Reflection in any root as a matrix on simple-root coordinates (word empty).
IntMat reflection_matrix(const RootSystem& rs, int root_idx);

bool is_dominant(const RootSystem& rs, const Weight& nu);

// 1 + (rho_S, theta_S^vee) over the subsystem on the given simple indices;
// requires the subset to be nonempty and connected.
int dual_coxeter_number(const RootSystem& rs, const std::set<int>& simples);

// Fundamental weight of node i over simple-root coordinates.
Weight fundamental_weight(const RootSystem& rs, int i);

}  // namespace ck
