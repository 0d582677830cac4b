#include "ck/chevalley.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ck {

bool LieElement::cartan_zero() const {
  for (const Rat& c : cartan)
    if (c != 0) return false;
  return true;
}

void LieElement::add_part(int key, const Rat& c) {
  if (c == 0) return;
  const auto it = parts.find(key);
  if (it == parts.end()) {
    parts.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) parts.erase(it);
}

void LieElement::add_cartan(int rank, const RatVec& c, const Rat& scale) {
  if (cartan.empty()) cartan.assign(rank, 0);
  for (int i = 0; i < rank; ++i) cartan[i] += scale * c[i];
  if (cartan_zero()) cartan.clear();
}

LieElement lie_zero() { return LieElement{}; }

LieElement lie_e(int key, const Rat& c) {
  LieElement x;
  x.add_part(key, c);
  return x;
}

std::string lie_str(const RootSystem& rs, const LieElement& x) {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (!x.cartan.empty())
    for (int i = 0; i < rs.rank(); ++i)
      if (x.cartan[i] != 0) append(to_string(x.cartan[i]) + "*h" + std::to_string(i + 1));
  for (const auto& [key, c] : x.parts) {
    std::string root = "e[";
    const auto& coeffs = rs.root(key_index(key)).coeffs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) root += ",";
      root += std::to_string(key_negative(key) ? -coeffs[i] : coeffs[i]);
    }
    root += "]";
    append(to_string(c) + "*" + root);
  }
  return out.empty() ? "0" : out;
}

ChevalleyTable::ChevalleyTable(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.num_positive();
  const int rank = rs.rank();
  pos_.assign(n, IntVec(n, 0));
  mixed_.assign(n, IntVec(n, 0));
  sum_.assign(n, IntVec(n, -1));
  coroot_pairing_.assign(n, IntVec(rank, 0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < rank; ++i)
      coroot_pairing_[k][i] = rs.pairing_with_simple_coroot(k, i);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> s = rs.root(i).coeffs;
      for (int k = 0; k < rank; ++k) s[k] += rs.root(j).coeffs[k];
      sum_[i][j] = rs.index_of(s);
    }

  // Work by height of the sum chi.  The extraspecial pair (r1, s1) of chi is
  // the special pair with minimal first index (always a simple root); it gets
  // N = p+1 > 0.  Every other special pair (r, s) of the same chi follows
  // from the Jacobi identity on (e_{-r1}, e_r, e_s):
  //   N_{r,s} = -(N_{-r1,r} N_{r-r1,s} + N_{s,-r1} N_{s-r1,r}) / N_{chi,-r1},
  // whose ingredients all have sums of smaller height.
  for (int chi = rank; chi < n; ++chi) {
    std::vector<std::pair<int, int>> special;
    for (int r = 0; r < n; ++r) {
      const int s = [&] {
        std::vector<int> diff = rs.root(chi).coeffs;
        for (int k = 0; k < rank; ++k) diff[k] -= rs.root(r).coeffs[k];
        return rs.index_of(diff);
      }();
      if (s > r) special.emplace_back(r, s);
    }
    if (special.empty()) throw std::logic_error("chevalley: root with no special pair");
    const auto [r1, s1] = special.front();  // minimal r: roots are index-ordered
    {
      const int p = string_down(root_key(r1), root_key(s1));
      pos_[r1][s1] = p + 1;
      pos_[s1][r1] = -(p + 1);
    }
    for (size_t k = 1; k < special.size(); ++k) {
      const auto [r, s] = special[k];
      Rat acc = 0;
      {
        std::vector<int> diff = rs.root(r).coeffs;
        for (int t = 0; t < rank; ++t) diff[t] -= rs.root(r1).coeffs[t];
        const int k1 = rs.index_of(diff);
        if (k1 >= 0) {
          // r - r1 is a positive root: N_{-r1,r} = -N_{r,-r1}.
          const long long n_r_mr1 = mixed_from_pos(r, r1);
          acc += to_rat(-n_r_mr1) * to_rat(pos_[k1][s]);
        }
      }
      {
        std::vector<int> diff = rs.root(s).coeffs;
        for (int t = 0; t < rank; ++t) diff[t] -= rs.root(r1).coeffs[t];
        const int k2 = rs.index_of(diff);
        if (k2 >= 0) {
          const long long n_s_mr1 = mixed_from_pos(s, r1);
          acc += to_rat(n_s_mr1) * to_rat(pos_[k2][r]);
        }
      }
      const long long denom = mixed_from_pos(chi, r1);
      if (denom == 0) throw std::logic_error("chevalley: vanishing extraspecial divisor");
      const Rat val = -acc / to_rat(denom);
      const long long nv = to_int(val);
      if (nv == 0) throw std::logic_error("chevalley: special pair with zero constant");
      pos_[r][s] = nv;
      pos_[s][r] = -nv;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) mixed_[i][j] = mixed_from_pos(i, j);
}

// N_{phi_i, -phi_j} from the positive table via the length-ratio relation for
// alpha + beta + gamma = 0:  N_{alpha,beta}/(gamma,gamma) is cyclic-invariant.
long long ChevalleyTable::mixed_from_pos(int i, int j) const {
  const RootSystem& rs = *rs_;
  std::vector<int> diff = rs.root(i).coeffs;
  for (int k = 0; k < rs.rank(); ++k) diff[k] -= rs.root(j).coeffs[k];
  int pos_idx = rs.index_of(diff);
  if (pos_idx >= 0) {
    // phi_i - phi_j = phi_k > 0: N_{i,-j} = -((k,k)/(i,i)) N_{j,k}.
    const Rat val = to_rat(-rs.norm2(pos_idx)) * to_rat(pos_[j][pos_idx]) / to_rat(rs.norm2(i));
    return to_int(val);
  }
  for (int k = 0; k < rs.rank(); ++k) diff[k] = -diff[k];
  pos_idx = rs.index_of(diff);
  if (pos_idx >= 0) {
    // phi_j - phi_i = phi_k > 0: N_{i,-j} = ((k,k)/(j,j)) N_{k,i}.
    const Rat val = to_rat(rs.norm2(pos_idx)) * to_rat(pos_[pos_idx][i]) / to_rat(rs.norm2(j));
    return to_int(val);
  }
  return 0;
}

long long ChevalleyTable::structure_constant(int key_a, int key_b) const {
  const int i = key_index(key_a);
  const int j = key_index(key_b);
  const bool na = key_negative(key_a);
  const bool nb = key_negative(key_b);
  if (i == j && na != nb) throw std::invalid_argument("structure_constant: sum is zero");
  if (!na && !nb) return pos_[i][j];
  if (na && nb) return -pos_[i][j];
  if (!na && nb) return mixed_[i][j];
  return -mixed_[j][i];  // N_{-a, b} = -N_{b, -a}
}

int ChevalleyTable::string_down(int key_a, int key_b) const {
  const RootSystem& rs = *rs_;
  const int sa = key_negative(key_a) ? -1 : 1;
  const int sb = key_negative(key_b) ? -1 : 1;
  std::vector<int> cur(rs.rank());
  for (int k = 0; k < rs.rank(); ++k)
    cur[k] = sb * rs.root(key_index(key_b)).coeffs[k];
  int p = 0;
  for (;;) {
    for (int k = 0; k < rs.rank(); ++k)
      cur[k] -= sa * rs.root(key_index(key_a)).coeffs[k];
    const bool zero = std::all_of(cur.begin(), cur.end(), [](int v) { return v == 0; });
    if (zero || !rs.is_root(cur)) break;
    ++p;
  }
  return p;
}

RatVec ChevalleyTable::coroot(int idx) const {
  const RootSystem& rs = *rs_;
  // phi^vee = 2 phi/(phi,phi) = sum_i n_i (alpha_i,alpha_i)/(phi,phi) alpha_i^vee.
  RatVec c(rs.rank());
  const long long n2 = rs.norm2(idx);
  for (int i = 0; i < rs.rank(); ++i) {
    c[i] = to_rat(rs.root(idx).coeffs[i] * rs.gram(i, i)) / to_rat(n2);
  }
  return c;
}

Rat ChevalleyTable::eval_on_cartan(const RatVec& cartan, int key) const {
  if (cartan.empty()) return 0;
  const int idx = key_index(key);
  Rat val = 0;
  for (int i = 0; i < rs_->rank(); ++i)
    if (cartan[i] != 0) val += cartan[i] * to_rat(coroot_pairing_[idx][i]);
  return key_negative(key) ? -val : val;
}

LieElement ChevalleyTable::bracket(const LieElement& x, const LieElement& y) const {
  const RootSystem& rs = *rs_;
  LieElement out;
  // [h, e_b] - [h', e_a]
  if (!x.cartan.empty())
    for (const auto& [key, c] : y.parts) out.add_part(key, eval_on_cartan(x.cartan, key) * c);
  if (!y.cartan.empty())
    for (const auto& [key, c] : x.parts) out.add_part(key, -eval_on_cartan(y.cartan, key) * c);
  for (const auto& [ka, ca] : x.parts) {
    for (const auto& [kb, cb] : y.parts) {
      if (ka == -kb) {
        // [e_phi, e_{-phi}] = phi^vee.
        const int idx = key_index(ka);
        Rat scale = ca * cb;
        if (key_negative(ka)) scale = -scale;
        out.add_cartan(rs.rank(), coroot(idx), scale);
        continue;
      }
      const long long n = structure_constant(ka, kb);
      if (n == 0) continue;
      // Key of phi_a + phi_b.
      std::vector<int> s(rs.rank());
      const int sa = key_negative(ka) ? -1 : 1;
      const int sb = key_negative(kb) ? -1 : 1;
      for (int k = 0; k < rs.rank(); ++k)
        s[k] = sa * rs.root(key_index(ka)).coeffs[k] + sb * rs.root(key_index(kb)).coeffs[k];
      int key_s = rs.index_of(s);
      if (key_s >= 0) {
        out.add_part(root_key(key_s), to_rat(n) * ca * cb);
      } else {
        for (int k = 0; k < rs.rank(); ++k) s[k] = -s[k];
        key_s = rs.index_of(s);
        if (key_s < 0) throw std::logic_error("bracket: nonzero constant for non-root sum");
        out.add_part(root_key(key_s, true), to_rat(n) * ca * cb);
      }
    }
  }
  return out;
}

LieElement ChevalleyTable::ad_pow(const LieElement& z, const LieElement& x, int k) const {
  if (!z.cartan.empty()) throw std::invalid_argument("ad_pow: z must lie in n");
  for (const auto& [key, c] : z.parts)
    if (key < 0) throw std::invalid_argument("ad_pow: z must lie in n");
  LieElement cur = x;
  for (int t = 0; t < k; ++t) cur = bracket(z, cur);
  return cur;
}

void ChevalleyTable::dump_tsv(std::ostream& out) const {
  const RootSystem& rs = *rs_;
  const int n = rs.num_positive();
  auto print_root = [&](int key) {
    std::string s;
    const auto& coeffs = rs.root(key_index(key)).coeffs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(key_negative(key) ? -coeffs[i] : coeffs[i]);
    }
    return s;
  };
  out << "phi\tpsi\tN\n";
  std::vector<int> keys;
  for (int i = 0; i < n; ++i) keys.push_back(root_key(i));
  for (int i = 0; i < n; ++i) keys.push_back(root_key(i, true));
  for (const int a : keys)
    for (const int b : keys) {
      if (a == -b) continue;
      const long long v = structure_constant(a, b);
      if (v != 0) out << print_root(a) << "\t" << print_root(b) << "\t" << v << "\n";
    }
}

ChevalleyTable build_chevalley(const RootSystem& rs) { return ChevalleyTable(rs); }

}  // namespace ck
