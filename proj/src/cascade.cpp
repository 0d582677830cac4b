#include "ck/cascade.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ck {

namespace {

std::string coeff_str(const RootSystem& rs, int idx) {
  std::string out = "(";
  const auto& c = rs.root(idx).coeffs;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

// (alpha_a, beta) over the Gram matrix of the simples.
long long inner_simple_root(const RootSystem& rs, int a, int beta) {
  long long v = 0;
  for (int j = 0; j < rs.rank(); ++j) v += rs.root(beta).coeffs[j] * rs.gram(a, j);
  return v;
}

void grow(const RootSystem& rs, Cascade& c, const std::vector<int>& support, int parent) {
  const std::set<int> sup(support.begin(), support.end());
  const Subsystem sub = subsystem(rs, sup);
  if (sub.components.size() != 1) throw std::logic_error("cascade: support not connected");
  const int beta = sub.components[0].highest;
  const int id = static_cast<int>(c.nodes.size());

  CascadeNode node;
  node.beta = beta;
  node.support = support;
  node.delta_plus = sub.roots;
  node.parent = parent;
  node.h_dual = dual_coxeter_number(rs, sup);
  for (const int idx : sub.roots)
    if (rs.inner_root(idx, beta) > 0) node.layer.push_back(idx);
  for (const int idx : node.layer) {
    if (idx == beta) continue;
    std::vector<int> diff = rs.root(beta).coeffs;
    for (int j = 0; j < rs.rank(); ++j) diff[j] -= rs.root(idx).coeffs[j];
    const int tw = rs.index_of(diff);
    if (tw < 0) throw std::logic_error("cascade: layer member without twin");
    c.twin_[idx] = tw;
  }

  c.nodes.push_back(node);
  c.node_of_[beta] = id;
  for (const int idx : node.layer) c.home_[idx] = id;
  if (parent >= 0) c.nodes[parent].children.push_back(id);

  std::set<int> pi0;
  for (const int a : support)
    if (inner_simple_root(rs, a, beta) == 0) pi0.insert(a);
  for (const std::vector<int>& comp : rs.diagram_components(pi0)) grow(rs, c, comp, id);
}

bool strongly_orthogonal(const RootSystem& rs, int i, int j) {
  if (rs.inner_root(i, j) != 0) return false;
  std::vector<int> sum = rs.root(i).coeffs;
  std::vector<int> diff = rs.root(i).coeffs;
  for (int k = 0; k < rs.rank(); ++k) {
    sum[k] += rs.root(j).coeffs[k];
    diff[k] -= rs.root(j).coeffs[k];
  }
  return !rs.is_root(sum) && !rs.is_root(diff);
}

bool is_ancestor(const Cascade& c, int anc, int node) {
  for (int cur = c.nodes[node].parent; cur >= 0; cur = c.nodes[cur].parent)
    if (cur == anc) return true;
  return false;
}

}  // namespace

int Cascade::node_of(int beta) const {
  const auto it = node_of_.find(beta);
  if (it == node_of_.end()) throw std::invalid_argument("cascade: not a cascade root");
  return it->second;
}

bool Cascade::in_cascade(int root_idx) const { return node_of_.count(root_idx) > 0; }

int Cascade::twin(int phi) const {
  const auto it = twin_.find(phi);
  if (it == twin_.end()) throw std::invalid_argument("cascade: no twin for this root");
  return it->second;
}

std::vector<int> Cascade::chain_of(int phi) const {
  if (phi < 0 || phi >= static_cast<int>(home_.size()) || home_[phi] < 0)
    throw std::invalid_argument("cascade: not a positive root");
  std::vector<int> chain;
  for (int cur = home_[phi]; cur >= 0; cur = nodes[cur].parent) chain.push_back(nodes[cur].beta);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Cascade compute_cascade(const RootSystem& rs) {
  Cascade c;
  c.home_.assign(rs.num_positive(), -1);
  std::set<int> all;
  for (int i = 0; i < rs.rank(); ++i) all.insert(i);
  for (const std::vector<int>& comp : rs.diagram_components(all)) grow(rs, c, comp, -1);
  return c;
}

VerificationReport verify_section1(const RootSystem& rs, const Cascade& c) {
  VerificationReport rep;
  const std::string type = rs.type().str();
  const int n = rs.num_positive();

  {
    CheckResult& r = rep.add("section1/locally_high", type);
    for (const CascadeNode& node : c.nodes) {
      const Subsystem sub =
          subsystem(rs, std::set<int>(node.support.begin(), node.support.end()));
      if (sub.components.size() != 1 || sub.components[0].highest != node.beta)
        r.fail("beta " + coeff_str(rs, node.beta) + " is not locally high");
      // The highest root dominates the whole subsystem coefficient-wise.
      for (const int idx : node.delta_plus)
        for (int k = 0; k < rs.rank(); ++k)
          if (rs.root(idx).coeffs[k] > rs.root(node.beta).coeffs[k])
            r.fail("beta fails to dominate " + coeff_str(rs, idx));
    }
  }

  {
    CheckResult& r = rep.add("section1/layer_size", type);
    for (const CascadeNode& node : c.nodes) {
      const int h =
          dual_coxeter_number(rs, std::set<int>(node.support.begin(), node.support.end()));
      if (h != node.h_dual) r.fail("stored h_dual differs from the oracle");
      if (static_cast<int>(node.layer.size()) != 2 * h - 3)
        r.fail("layer of " + coeff_str(rs, node.beta) + " has size " +
               std::to_string(node.layer.size()) + ", expected " + std::to_string(2 * h - 3));
      if (std::find(node.layer.begin(), node.layer.end(), node.beta) == node.layer.end())
        r.fail("beta missing from its own layer");
    }
  }

  {
    CheckResult& r = rep.add("section1/layer_ratio", type);
    for (const CascadeNode& node : c.nodes)
      for (const int phi : node.layer) {
        if (phi == node.beta) continue;
        if (2 * rs.inner_root(node.beta, phi) != rs.norm2(node.beta))
          r.fail("2(beta,phi) != (beta,beta) at phi = " + coeff_str(rs, phi));
        const int tw = c.twin(phi);
        if (c.twin(tw) != phi) r.fail("twin is not an involution");
        for (int k = 0; k < rs.rank(); ++k)
          if (rs.root(phi).coeffs[k] + rs.root(tw).coeffs[k] != rs.root(node.beta).coeffs[k])
            r.fail("twin sum misses beta at phi = " + coeff_str(rs, phi));
      }
  }

  {
    CheckResult& r = rep.add("section1/partition", type);
    std::vector<int> seen(n, 0);
    for (const CascadeNode& node : c.nodes)
      for (const int idx : node.layer) ++seen[idx];
    for (int idx = 0; idx < n; ++idx)
      if (seen[idx] != 1)
        r.fail("root " + coeff_str(rs, idx) + " lies in " + std::to_string(seen[idx]) +
               " layers");
  }

  {
    CheckResult& r = rep.add("section1/strong_orthogonality", type);
    for (const CascadeNode& a : c.nodes)
      for (const CascadeNode& b : c.nodes) {
        if (a.beta == b.beta) continue;
        if (!strongly_orthogonal(rs, a.beta, b.beta))
          r.fail(coeff_str(rs, a.beta) + ", " + coeff_str(rs, b.beta) +
                 " not strongly orthogonal");
      }
    // Maximality: no positive root can be adjoined.
    for (int idx = 0; idx < n; ++idx) {
      if (c.in_cascade(idx)) continue;
      bool clashes = false;
      for (const CascadeNode& node : c.nodes)
        if (!strongly_orthogonal(rs, idx, node.beta)) {
          clashes = true;
          break;
        }
      if (!clashes) r.fail(coeff_str(rs, idx) + " extends the cascade");
    }
  }

  {
    CheckResult& r = rep.add("section1/w0_product", type);
    std::vector<IntMat> refl;
    refl.reserve(c.nodes.size());
    for (const CascadeNode& node : c.nodes) refl.push_back(reflection_matrix(rs, node.beta));
    for (size_t i = 0; i < refl.size(); ++i)
      for (size_t j = i + 1; j < refl.size(); ++j)
        if (int_mul(refl[i], refl[j]) != int_mul(refl[j], refl[i]))
          r.fail("cascade reflections fail to commute");
    const IntMat w0 = longest_element(rs).matrix;
    IntMat prod = int_identity(rs.rank());
    for (const IntMat& s : refl) prod = int_mul(prod, s);
    if (prod != w0) r.fail("product of cascade reflections differs from w0");
    // Order is immaterial: with commutativity verified above this is implied;
    // exercise all orders literally when the cascade is small.
    if (c.m() <= 5) {
      std::vector<int> perm(c.m());
      for (int i = 0; i < c.m(); ++i) perm[i] = i;
      do {
        IntMat p = int_identity(rs.rank());
        for (const int i : perm) p = int_mul(p, refl[i]);
        if (p != w0) {
          r.fail("a reordered product differs from w0");
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  {
    CheckResult& r = rep.add("section1/delta_stability", type);
    for (const CascadeNode& a : c.nodes) {
      const std::set<int> members(a.delta_plus.begin(), a.delta_plus.end());
      for (const CascadeNode& b : c.nodes) {
        if (a.beta == b.beta) continue;
        for (const int idx : a.delta_plus) {
          std::vector<int> img = rs.reflect_int(b.beta, rs.root(idx).coeffs);
          int sign = 0;
          for (const int v : img) {
            if (v > 0) sign = 1;
            if (v < 0) sign = -1;
            if (sign) break;
          }
          if (sign < 0)
            for (int& v : img) v = -v;
          const int at = rs.index_of(img);
          if (at < 0 || members.count(at) == 0) {
            r.fail("s_beta' moves " + coeff_str(rs, idx) + " out of its subsystem");
            break;
          }
        }
      }
    }
  }

  {
    CheckResult& r = rep.add("section1/w0_restriction", type);
    const WeylElement w0 = longest_element(rs);
    for (const CascadeNode& node : c.nodes) {
      const WeylElement w0_sub = longest_element(rs, node.support);
      for (const int idx : node.delta_plus)
        if (w0.apply(rs.root(idx).coeffs) != w0_sub.apply(rs.root(idx).coeffs)) {
          r.fail("w0 and the subsystem w0 differ on " + coeff_str(rs, idx));
          break;
        }
    }
  }

  {
    CheckResult& r = rep.add("section1/chain_order", type);
    for (int phi = 0; phi < n; ++phi) {
      const std::vector<int> chain = c.chain_of(phi);
      if (chain.empty()) {
        r.fail("empty chain for " + coeff_str(rs, phi));
        continue;
      }
      for (size_t i = 0; i < chain.size(); ++i) {
        // Simply ordered: strictly decreasing in the dominance order.
        if (i + 1 < chain.size()) {
          bool ge = true, ne = false;
          for (int k = 0; k < rs.rank(); ++k) {
            const int d = rs.root(chain[i]).coeffs[k] - rs.root(chain[i + 1]).coeffs[k];
            if (d < 0) ge = false;
            if (d != 0) ne = true;
          }
          if (!ge || !ne) r.fail("chain not strictly decreasing at " + coeff_str(rs, phi));
        }
        // Orthogonal to every link but the last, positive on the last.
        const long long ip = rs.inner_root(phi, chain[i]);
        if (i + 1 < chain.size() ? ip != 0 : ip <= 0)
          r.fail("chain inner products wrong for " + coeff_str(rs, phi));
        // phi stays inside each subsystem along the chain.
        const CascadeNode& node = c.nodes[c.node_of(chain[i])];
        if (std::find(node.delta_plus.begin(), node.delta_plus.end(), phi) ==
            node.delta_plus.end())
          r.fail("chain leaves the subsystem at " + coeff_str(rs, phi));
      }
    }
  }

  {
    CheckResult& r = rep.add("section1/totally_disjoint", type);
    for (int a = 0; a < c.m(); ++a)
      for (int b = a + 1; b < c.m(); ++b) {
        if (is_ancestor(c, a, b) || is_ancestor(c, b, a)) continue;
        for (const int i : c.nodes[a].delta_plus)
          for (const int j : c.nodes[b].delta_plus)
            if (!strongly_orthogonal(rs, i, j))
              r.fail("unrelated subsystems share non-orthogonal roots " + coeff_str(rs, i) +
                     ", " + coeff_str(rs, j));
      }
  }

  return rep;
}

bool heisenberg_bracket_check(const RootSystem& rs, const ChevalleyTable& tbl,
                              const Cascade& c, int beta) {
  const CascadeNode& node = c.nodes[c.node_of(beta)];
  for (const int phi : node.layer) {
    if (phi != beta && tbl.structure_constant(root_key(beta), root_key(phi)) != 0)
      return false;  // e_beta must be central
    if (phi == beta) continue;
    for (const int psi : node.layer) {
      if (psi == beta || psi == phi) continue;
      const long long nc = tbl.structure_constant(root_key(phi), root_key(psi));
      if (psi == c.twin(phi)) {
        if (nc == 0) return false;  // twins must meet in e_beta
      } else if (nc != 0) {
        return false;  // all other layer brackets vanish
      }
    }
  }
  return true;
}

}  // namespace ck
