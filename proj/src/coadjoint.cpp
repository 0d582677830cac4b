#include "ck/coadjoint.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ck {

namespace {

void require_in_n(const LieElement& v, const char* who) {
  if (!v.cartan.empty()) throw std::invalid_argument(std::string(who) + ": not in n");
  for (const auto& [key, c] : v.parts)
    if (key < 0) throw std::invalid_argument(std::string(who) + ": not in n");
}

void axpy(LieElement& acc, const LieElement& x, const Rat& s) {
  if (!x.cartan.empty())
    acc.add_cartan(static_cast<int>(x.cartan.size()), x.cartan, s);
  for (const auto& [key, c] : x.parts) acc.add_part(key, s * c);
}

Rat rat_pow(const Rat& q, int e) {
  Rat out = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= q;
  if (e < 0) out = 1 / out;
  return out;
}

// The character value prod q_i^{coeff_i} of a positive root.
Rat character(const RootSystem& rs, const RatVec& q, int idx) {
  Rat out = 1;
  for (int i = 0; i < rs.rank(); ++i) out *= rat_pow(q[i], rs.root(idx).coeffs[i]);
  return out;
}

NMinusElement scale_by_character(const RootSystem& rs, const RatVec& q,
                                 const NMinusElement& z) {
  NMinusElement out;
  for (const auto& [idx, c] : z.coeffs) out.add(idx, c / character(rs, q, idx));
  return out;
}

LieElement conjugate_log(const RootSystem& rs, const RatVec& q, const LieElement& x,
                         bool inverse) {
  LieElement out;
  for (const auto& [key, c] : x.parts) {
    const Rat chi = character(rs, q, key_index(key));
    Rat scaled = c * chi;
    if (inverse) scaled = c / chi;
    out.add_part(key, scaled);
  }
  return out;
}

}  // namespace

void NMinusElement::add(int idx, const Rat& c) {
  if (c == 0) return;
  const auto it = coeffs.find(idx);
  if (it == coeffs.end()) {
    coeffs.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

Rat NMinusElement::at(int idx) const {
  const auto it = coeffs.find(idx);
  return it == coeffs.end() ? Rat(0) : it->second;
}

NMinusElement CrossSectionPoint::as_nminus() const {
  NMinusElement z;
  for (const auto& [beta, c] : t) z.add(beta, c);
  return z;
}

std::string nminus_str(const RootSystem& rs, const NMinusElement& z) {
  if (z.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : z.coeffs) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*e[-" + weight_str(to_weight(rs.root(idx).coeffs)) + "]";
  }
  return out;
}

NMinusElement project_nminus(const LieElement& x) {
  NMinusElement z;
  for (const auto& [key, c] : x.parts)
    if (key < 0) z.add(key_index(key), c);
  return z;
}

LieElement lift_nminus(const NMinusElement& z) {
  LieElement x;
  for (const auto& [idx, c] : z.coeffs) x.add_part(root_key(idx, true), c);
  return x;
}

NMinusElement coad(const ChevalleyTable& tbl, const LieElement& v, const NMinusElement& z) {
  require_in_n(v, "coad");
  return project_nminus(tbl.bracket(v, lift_nminus(z)));
}

LieElement ad_exp(const ChevalleyTable& tbl, const LieElement& log, const LieElement& x) {
  require_in_n(log, "ad_exp");
  LieElement acc = x;
  LieElement cur = x;
  Rat factorial = 1;
  for (int k = 1;; ++k) {
    cur = tbl.bracket(log, cur);
    if (cur.is_zero()) break;
    factorial *= k;
    axpy(acc, cur, 1 / factorial);
  }
  return acc;
}

NMinusElement coad_group(const ChevalleyTable& tbl, const GroupElement& u,
                         const NMinusElement& z) {
  return project_nminus(ad_exp(tbl, u.log, lift_nminus(z)));
}

RatMat coad_matrix(const ChevalleyTable& tbl, const NMinusElement& tau) {
  const int n = tbl.roots().num_positive();
  RatMat m(n, RatVec(n, 0));
  for (int j = 0; j < n; ++j) {
    const NMinusElement col = coad(tbl, lie_e(root_key(j)), tau);
    for (const auto& [idx, c] : col.coeffs) m[idx][j] = c;
  }
  return m;
}

RatMat isotropy_algebra(const ChevalleyTable& tbl, const NMinusElement& tau) {
  return kernel_basis(coad_matrix(tbl, tau));
}

int orbit_dimension(const ChevalleyTable& tbl, const NMinusElement& tau) {
  return rank(coad_matrix(tbl, tau));
}

namespace {

std::vector<int> off_cascade_roots(const RootSystem& rs, const Cascade& c) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!c.in_cascade(i)) out.push_back(i);
  return out;
}

bool supported_off_cascade(const Cascade& c, const NMinusElement& z) {
  for (const auto& [idx, coeff] : z.coeffs)
    if (c.in_cascade(idx)) return false;
  return true;
}

// Random nonzero element supported on the given roots.
LieElement random_on_support(const std::vector<int>& roots, Sampler& gen) {
  LieElement v;
  for (const int idx : roots)
    if (gen.below(2) == 0) v.add_part(root_key(idx), gen.nonzero_coeff());
  if (v.parts.empty() && !roots.empty())
    v.add_part(root_key(roots[gen.below(roots.size())]), gen.nonzero_coeff());
  return v;
}

}  // namespace

VerificationReport check_s_injectivity(const ChevalleyTable& tbl, const Cascade& c,
                                       const CrossSectionPoint& tau, int samples,
                                       std::uint64_t seed) {
  const RootSystem& rs = tbl.roots();
  const std::string type = rs.type().str();
  const NMinusElement t = tau.as_nminus();
  const std::vector<int> off = off_cascade_roots(rs, c);
  VerificationReport rep;

  {
    CheckResult& r = rep.add("coadjoint/s_injectivity_basis", type);
    for (const int phi : off) {
      const NMinusElement y = coad(tbl, lie_e(root_key(phi)), t);
      if (y.is_zero()) r.fail("coad e_phi(tau) = 0 at phi = " + weight_str(to_weight(rs.root(phi).coeffs)));
      if (!supported_off_cascade(c, y))
        r.fail("coad e_phi(tau) leaves s_- at phi = " +
               weight_str(to_weight(rs.root(phi).coeffs)));
    }
  }

  {
    // Full column rank on the s columns proves injectivity on all of s.
    CheckResult& r = rep.add("coadjoint/s_injectivity_rank", type);
    const RatMat m = coad_matrix(tbl, t);
    RatMat cols(m.size(), RatVec(off.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < off.size(); ++j) cols[i][j] = m[i][off[j]];
    if (rank(cols) != static_cast<int>(off.size()))
      r.fail("coad(.)(tau) drops rank on s");
  }

  {
    CheckResult& r = rep.add("coadjoint/s_injectivity_samples", type);
    r.seed = seed;
    r.samples = samples;
    Sampler gen(seed);
    for (int k = 0; k < samples && !off.empty(); ++k) {
      const LieElement v = random_on_support(off, gen);
      const NMinusElement y = coad(tbl, v, t);
      if (y.is_zero() || !supported_off_cascade(c, y))
        r.fail("sample " + std::to_string(k) + " violates 0 != coad v(tau) in s_-");
    }
  }

  return rep;
}

VerificationReport check_cross_section(const ChevalleyTable& tbl, const Cascade& c,
                                       const CrossSectionPoint& tau, int samples,
                                       std::uint64_t seed) {
  const RootSystem& rs = tbl.roots();
  const std::string type = rs.type().str();
  const NMinusElement t = tau.as_nminus();
  const std::vector<int> off = off_cascade_roots(rs, c);
  std::vector<int> on;
  for (const CascadeNode& node : c.nodes) on.push_back(node.beta);
  VerificationReport rep;

  {
    CheckResult& r = rep.add("coadjoint/cross_section_off", type);
    r.kind = "property-based evidence";
    r.seed = seed;
    r.samples = samples;
    Sampler gen(seed);
    for (int k = 0; k < samples && !off.empty(); ++k) {
      const GroupElement u{random_on_support(off, gen)};
      const NMinusElement y = coad_group(tbl, u, t);
      bool moved_off = false;
      for (const auto& [idx, coeff] : y.coeffs)
        if (!c.in_cascade(idx)) moved_off = true;
      if (!moved_off)
        r.fail("exp(v) with v off the cascade keeps tau in r_- at sample " +
               std::to_string(k));
    }
  }

  {
    CheckResult& r = rep.add("coadjoint/cross_section_fix", type);
    r.kind = "property-based evidence";
    r.seed = seed;
    r.samples = samples;
    Sampler gen(seed ^ 0x5eeded);
    for (int k = 0; k < samples; ++k) {
      const GroupElement u{random_on_support(on, gen)};
      if (!(coad_group(tbl, u, t) == t))
        r.fail("exp(v) with v on the cascade moves tau at sample " + std::to_string(k));
    }
  }

  return rep;
}

bool check_open_orbit(const ChevalleyTable& tbl, const Cascade& c,
                      const CrossSectionPoint& tau) {
  const RootSystem& rs = tbl.roots();
  const int n = rs.num_positive();
  const NMinusElement t = tau.as_nminus();
  const RatMat m = coad_matrix(tbl, t);
  RatMat wide(n, RatVec(n + rs.rank(), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wide[i][j] = m[i][j];
  for (int i = 0; i < rs.rank(); ++i) {
    LieElement h;
    RatVec e(rs.rank(), 0);
    e[i] = 1;
    h.add_cartan(rs.rank(), e, 1);
    const NMinusElement col = project_nminus(tbl.bracket(h, lift_nminus(t)));
    for (const auto& [idx, coeff] : col.coeffs) wide[idx][n + i] = coeff;
  }
  const bool full = rank(wide) == n;
  const bool dims = orbit_dimension(tbl, t) + c.m() == n;
  return full && dims;
}

CrossSectionPoint random_cross_section(const Cascade& c, Sampler& gen) {
  CrossSectionPoint tau;
  for (const CascadeNode& node : c.nodes) tau.t[node.beta] = gen.nonzero_coeff();
  return tau;
}

NMinusElement random_nminus(const RootSystem& rs, Sampler& gen) {
  NMinusElement z;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (gen.below(2) == 0) z.add(i, gen.nonzero_coeff());
  if (z.is_zero()) z.add(static_cast<int>(gen.below(rs.num_positive())), gen.nonzero_coeff());
  return z;
}

LieElement random_n_element(const RootSystem& rs, Sampler& gen) {
  std::vector<int> all(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i) all[i] = i;
  return random_on_support(all, gen);
}

VerificationReport verify_coadjoint(const ChevalleyTable& tbl, const Cascade& c,
                                    std::uint64_t seed, int num_tau, int samples) {
  const RootSystem& rs = tbl.roots();
  const std::string type = rs.type().str();
  const int n = rs.num_positive();
  VerificationReport rep;

  for (int i = 0; i < num_tau; ++i) {
    const std::uint64_t tau_seed = derive_seed(seed, "coadjoint/tau", i);
    Sampler gen(tau_seed);
    const CrossSectionPoint tau = random_cross_section(c, gen);
    const NMinusElement t = tau.as_nminus();

    {
      CheckResult& r = rep.add("coadjoint/isotropy", type);
      r.seed = tau_seed;
      const RatMat ker = isotropy_algebra(tbl, t);
      if (static_cast<int>(ker.size()) != c.m())
        r.fail("isotropy dimension " + std::to_string(ker.size()) + " != m");
      for (const CascadeNode& node : c.nodes)
        if (!coad(tbl, lie_e(root_key(node.beta)), t).is_zero())
          r.fail("coad e_beta(tau) != 0 on the cascade");
    }
    {
      CheckResult& r = rep.add("coadjoint/orbit_dimension", type);
      r.seed = tau_seed;
      if (orbit_dimension(tbl, t) != n - c.m()) r.fail("orbit dimension != card Delta_+ - m");
    }
    rep.merge(check_s_injectivity(tbl, c, tau, 25, derive_seed(seed, "coadjoint/s", i)));
    rep.merge(check_cross_section(tbl, c, tau, samples, derive_seed(seed, "coadjoint/x", i)));
    {
      CheckResult& r = rep.add("coadjoint/open_orbit", type);
      r.seed = tau_seed;
      if (!check_open_orbit(tbl, c, tau)) r.fail("B-orbit tangent space at tau not full");
    }
  }

  {
    // Phi[v, Phi[w,z]] - Phi[w, Phi[v,z]] = Phi[[v,w], z]: the b-component
    // discarded in between never returns to n_-.
    CheckResult& r = rep.add("coadjoint/commutator", type);
    auto check_triple = [&](int a, int b, int z) {
      const LieElement va = lie_e(root_key(a));
      const LieElement vb = lie_e(root_key(b));
      NMinusElement zc;
      zc.add(z, 1);
      NMinusElement lhs = coad(tbl, va, coad(tbl, vb, zc));
      const NMinusElement sub = coad(tbl, vb, coad(tbl, va, zc));
      for (const auto& [idx, coeff] : sub.coeffs) lhs.add(idx, -coeff);
      return lhs == coad(tbl, tbl.bracket(va, vb), zc);
    };
    if (rs.rank() <= 3) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int z = 0; z < n; ++z)
            if (!check_triple(a, b, z)) r.fail("commutator consistency fails on a basis triple");
    } else {
      r.kind = "property-based evidence";
      r.samples = 200;
      r.seed = derive_seed(seed, "coadjoint/comm", 0);
      Sampler gen(r.seed);
      for (int k = 0; k < r.samples; ++k)
        if (!check_triple(static_cast<int>(gen.below(n)), static_cast<int>(gen.below(n)),
                          static_cast<int>(gen.below(n))))
          r.fail("commutator consistency fails at sample " + std::to_string(k));
    }
  }

  {
    CheckResult& r = rep.add("coadjoint/group_composition", type);
    r.kind = "property-based evidence";
    r.samples = 10;
    r.seed = derive_seed(seed, "coadjoint/comp", 0);
    Sampler gen(r.seed);
    for (int k = 0; k < r.samples; ++k) {
      const GroupElement u{random_n_element(rs, gen)};
      const GroupElement v{random_n_element(rs, gen)};
      const NMinusElement z = random_nminus(rs, gen);
      // Composing the Ad series before projecting realizes u * v.
      const NMinusElement joint =
          project_nminus(ad_exp(tbl, u.log, ad_exp(tbl, v.log, lift_nminus(z))));
      if (!(joint == coad_group(tbl, u, coad_group(tbl, v, z))))
        r.fail("group composition law fails at sample " + std::to_string(k));
    }
  }

  {
    CheckResult& r = rep.add("coadjoint/h_equivariance", type);
    r.kind = "property-based evidence";
    r.samples = 10;
    r.seed = derive_seed(seed, "coadjoint/h", 0);
    Sampler gen(r.seed);
    for (int k = 0; k < r.samples; ++k) {
      RatVec q(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) {
        Rat v = gen.nonzero_coeff();
        if (gen.below(2) != 0) v = 1 / v;
        q[i] = v;
      }
      Sampler tgen(derive_seed(r.seed, "tau", k));
      const NMinusElement tau = random_cross_section(c, tgen).as_nminus();
      const GroupElement u{random_n_element(rs, tgen)};
      const NMinusElement lhs = coad_group(tbl, u, scale_by_character(rs, q, tau));
      const GroupElement conj{conjugate_log(rs, q, u.log, true)};
      const NMinusElement rhs =
          scale_by_character(rs, q, coad_group(tbl, conj, tau));
      if (!(lhs == rhs)) r.fail("H-equivariance fails at sample " + std::to_string(k));
    }
  }

  {
    // Off r_-^x the B-orbit cannot be open: the missing cascade direction is
    // unreachable, so the tangent rank drops.
    CheckResult& r = rep.add("coadjoint/degenerate", type);
    r.seed = derive_seed(seed, "coadjoint/deg", 0);
    Sampler gen(r.seed);
    CrossSectionPoint tau = random_cross_section(c, gen);
    tau.t[c.nodes[static_cast<int>(gen.below(c.m()))].beta] = 0;
    if (check_open_orbit(tbl, c, tau)) r.fail("open-orbit rank survives a zero coordinate");
    if (orbit_dimension(tbl, tau.as_nminus()) > n - c.m())
      r.fail("degenerate orbit dimension exceeds card Delta_+ - m");
    NMinusElement zero;
    if (orbit_dimension(tbl, zero) != 0) r.fail("orbit of 0 not a point");
  }

  return rep;
}

}  // namespace ck
