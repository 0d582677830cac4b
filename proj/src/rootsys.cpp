#include "ck/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ck {

namespace {

void check_rank(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw std::invalid_argument("invalid type component: " + std::string(1, family) +
                                std::to_string(rank));
}

// Cartan matrix of one simple component, a[i][j] = <alpha_j, alpha_i^vee>,
// and the symmetrizer d with (alpha_i, alpha_j) = d_i a[i][j], normalized so
// short roots have d = 1.  Bourbaki numbering throughout.
void component_cartan(char family, int n, IntMat& a, IntVec& d) {
  a.assign(n, IntVec(n, 0));
  d.assign(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      // alpha_n short; the others long.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      // alpha_n long; the others short.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      link(0, 1);
      a[1][2] = -1;
      a[2][1] = -2;
      link(2, 3);
      d[0] = d[1] = 2;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long; highest root 3a1 + 2a2.
      a[0][1] = -3;
      a[1][0] = -1;
      d[1] = 3;
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
}

}  // namespace

TypeSpec TypeSpec::parse(std::string_view text) {
  TypeSpec spec;
  size_t pos = 0;
  while (pos < text.size()) {
    const char raw = text[pos];
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
    if (family < 'A' || family > 'G')
      throw std::invalid_argument("invalid family letter in type spec: " + std::string(text));
    ++pos;
    size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw std::invalid_argument("missing rank in type spec: " + std::string(text));
    int rank = 0;
    const auto res = std::from_chars(text.data() + pos, text.data() + end, rank);
    if (res.ec != std::errc()) throw std::invalid_argument("bad rank in type spec");
    check_rank(family, rank);
    spec.components.push_back({family, rank});
    pos = end;
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X')
        throw std::invalid_argument("expected 'x' between components: " + std::string(text));
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("trailing 'x' in type spec: " + std::string(text));
    }
  }
  if (spec.components.empty()) throw std::invalid_argument("empty type spec");
  return spec;
}

std::string TypeSpec::str() const {
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) out += 'x';
    out += components[i].family;
    out += std::to_string(components[i].rank);
  }
  return out;
}

int TypeSpec::total_rank() const {
  int n = 0;
  for (const auto& c : components) n += c.rank;
  return n;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Weight to_weight(const std::vector<int>& coeffs) {
  Weight w(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) w[i] = coeffs[i];
  return w;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = a[i] - b[i];
  return w;
}

Weight weight_scale(const Rat& c, const Weight& a) {
  Weight w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = c * a[i];
  return w;
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w[i]);
  }
  return out + ")";
}

std::vector<int> WeylElement::apply(const std::vector<int>& coeffs) const {
  const int n = static_cast<int>(coeffs.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += static_cast<int>(matrix[i][j]) * coeffs[j];
  return out;
}

Weight WeylElement::apply(const Weight& w) const {
  Weight out(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j)
      if (matrix[i][j] != 0) out[i] += to_rat(matrix[i][j]) * w[j];
  return out;
}

RootSystem::RootSystem(const TypeSpec& spec) : spec_(spec) {
  rank_ = spec.total_rank();
  cartan_.assign(rank_, IntVec(rank_, 0));
  d_.assign(rank_, 1);
  int offset = 0;
  for (const auto& comp : spec.components) {
    check_rank(comp.family, comp.rank);
    IntMat a;
    IntVec d;
    component_cartan(comp.family, comp.rank, a, d);
    for (int i = 0; i < comp.rank; ++i) {
      d_[offset + i] = d[i];
      for (int j = 0; j < comp.rank; ++j) cartan_[offset + i][offset + j] = a[i][j];
    }
    offset += comp.rank;
  }
  gram_.assign(rank_, IntVec(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram_[i][j] = d_[i] * cartan_[i][j];

  // Positive roots by closure: phi + alpha_i is a root iff q > 0 where
  // q = p - <phi, alpha_i^vee> and p is the length of the descending
  // alpha_i-string through phi.
  std::vector<std::vector<Root>> by_height(1);
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    by_height[0].push_back(Root{c});
    seen.emplace(c, 1);
  }
  auto pair_with_coroot = [&](const std::vector<int>& c, int i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * c[j];
    return s;
  };
  for (int h = 0; h < static_cast<int>(by_height.size()); ++h) {
    for (const Root& phi : by_height[h]) {
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        std::vector<int> down = phi.coeffs;
        for (;;) {
          down[i] -= 1;
          const bool neg = std::any_of(down.begin(), down.end(), [](int v) { return v < 0; });
          if (neg || !seen.count(down)) break;
          ++p;
        }
        const long long q = p - pair_with_coroot(phi.coeffs, i);
        if (q <= 0) continue;
        std::vector<int> up = phi.coeffs;
        up[i] += 1;
        if (seen.count(up)) continue;
        seen.emplace(up, 1);
        if (static_cast<int>(by_height.size()) <= h + 1) by_height.resize(h + 2);
        by_height[h + 1].push_back(Root{up});
      }
    }
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(),
              [](const Root& a, const Root& b) { return a.coeffs > b.coeffs; });
    for (Root& r : level) positive_.push_back(std::move(r));
  }
  for (int i = 0; i < num_positive(); ++i) index_.emplace(positive_[i].coeffs, i);
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  const auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
  if (index_.count(coeffs)) return true;
  std::vector<int> neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return index_.count(neg) > 0;
}

long long RootSystem::inner_root(int i, int j) const {
  const auto& a = positive_[i].coeffs;
  const auto& b = positive_[j].coeffs;
  long long s = 0;
  for (int k = 0; k < rank_; ++k) {
    if (a[k] == 0) continue;
    for (int l = 0; l < rank_; ++l)
      if (b[l] != 0) s += static_cast<long long>(a[k]) * gram_[k][l] * b[l];
  }
  return s;
}

long long RootSystem::norm2(int idx) const { return inner_root(idx, idx); }

Rat RootSystem::inner(const Weight& v, const Weight& w) const {
  Rat s = 0;
  for (int k = 0; k < rank_; ++k) {
    if (v[k] == 0) continue;
    for (int l = 0; l < rank_; ++l)
      if (w[l] != 0) s += v[k] * to_rat(gram_[k][l]) * w[l];
  }
  return s;
}

long long RootSystem::pairing_with_simple_coroot(int root_idx, int i) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * positive_[root_idx].coeffs[j];
  return s;
}

std::set<int> RootSystem::support(int idx) const {
  if (idx < 0 || idx >= num_positive()) throw std::invalid_argument("support: bad root index");
  std::set<int> out;
  for (int i = 0; i < rank_; ++i)
    if (positive_[idx].coeffs[i] > 0) out.insert(i);
  return out;
}

bool RootSystem::adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

bool RootSystem::connected(const std::set<int>& simples) const {
  return diagram_components(simples).size() == 1;
}

std::vector<std::vector<int>> RootSystem::diagram_components(const std::set<int>& simples) const {
  std::vector<std::vector<int>> out;
  std::set<int> left = simples;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = left.begin(); it != left.end();) {
        if (adjacent(comp[k], *it)) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Weight RootSystem::reflect(int beta_idx, const Weight& nu) const {
  const Weight beta = to_weight(positive_[beta_idx].coeffs);
  const Rat factor = 2 * inner(nu, beta) / to_rat(norm2(beta_idx));
  return weight_sub(nu, weight_scale(factor, beta));
}

std::vector<int> RootSystem::reflect_int(int beta_idx, const std::vector<int>& v) const {
  // 2(v, beta)/(beta,beta) is an integer when v is in the root lattice.
  long long num = 0;
  const auto& b = positive_[beta_idx].coeffs;
  for (int k = 0; k < rank_; ++k) {
    if (v[k] == 0) continue;
    for (int l = 0; l < rank_; ++l)
      if (b[l] != 0) num += static_cast<long long>(v[k]) * gram_[k][l] * b[l];
  }
  const long long n2 = norm2(beta_idx);
  if ((2 * num) % n2 != 0) throw std::logic_error("reflect_int: non-integral pairing");
  const long long f = 2 * num / n2;
  std::vector<int> out = v;
  for (int k = 0; k < rank_; ++k) out[k] -= static_cast<int>(f) * b[k];
  return out;
}

Weight RootSystem::rho() const {
  Weight w(rank_, 0);
  for (const Root& r : positive_)
    for (int i = 0; i < rank_; ++i) w[i] += Rat(r.coeffs[i]) / 2;
  return w;
}

Weight RootSystem::rho(const std::vector<int>& sub_roots) const {
  Weight w(rank_, 0);
  for (const int idx : sub_roots)
    for (int i = 0; i < rank_; ++i) w[i] += Rat(positive_[idx].coeffs[i]) / 2;
  return w;
}

RootSystem build_root_system(const TypeSpec& spec) { return RootSystem(spec); }

RootSystem build_root_system(std::string_view spec) {
  return RootSystem(TypeSpec::parse(spec));
}

Subsystem subsystem(const RootSystem& rs, const std::set<int>& simples) {
  for (const int i : simples)
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("subsystem: bad simple index");
  Subsystem sub;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const auto supp = rs.support(idx);
    if (std::includes(simples.begin(), simples.end(), supp.begin(), supp.end()))
      sub.roots.push_back(idx);
  }
  for (const auto& comp : rs.diagram_components(simples)) {
    const std::set<int> cset(comp.begin(), comp.end());
    int best = -1;
    bool tie = false;
    for (const int idx : sub.roots) {
      const auto supp = rs.support(idx);
      if (!std::includes(cset.begin(), cset.end(), supp.begin(), supp.end())) continue;
      if (best < 0 || rs.root(idx).height() > rs.root(best).height()) {
        best = idx;
        tie = false;
      } else if (rs.root(idx).height() == rs.root(best).height()) {
        tie = true;
      }
    }
    if (best < 0 || tie) throw std::logic_error("subsystem: no unique highest root");
    sub.components.push_back({comp, best});
  }
  return sub;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement w;
  w.word = {i};
  w.matrix = int_identity(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) w.matrix[i][j] -= rs.cartan()[i][j];
  return w;
}

WeylElement weyl_identity(const RootSystem& rs) {
  return WeylElement{{}, int_identity(rs.rank())};
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  w.matrix = int_mul(a.matrix, b.matrix);
  return w;
}

IntMat reflection_matrix(const RootSystem& rs, int root_idx) {
  IntMat m = int_identity(rs.rank());
  const auto& b = rs.root(root_idx).coeffs;
  // s_beta(alpha_j) = alpha_j - 2(alpha_j,beta)/(beta,beta) * beta.
  const long long n2 = rs.norm2(root_idx);
  for (int j = 0; j < rs.rank(); ++j) {
    long long num = 0;
    for (int l = 0; l < rs.rank(); ++l)
      if (b[l] != 0) num += rs.gram(j, l) * b[l];
    if ((2 * num) % n2 != 0) throw std::logic_error("reflection_matrix: non-integral pairing");
    const long long f = 2 * num / n2;
    for (int i = 0; i < rs.rank(); ++i) m[i][j] -= f * b[i];
  }
  return m;
}

namespace {

WeylElement greedy_longest(const RootSystem& rs, const std::vector<int>& simples,
                           const Weight& start) {
  Weight v = start;
  std::vector<int> applied;
  for (;;) {
    int found = -1;
    for (const int i : simples) {
      Rat pair = 0;
      for (int j = 0; j < rs.rank(); ++j)
        if (v[j] != 0) pair += v[j] * to_rat(rs.gram(j, i));
      if (pair > 0) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    v = rs.reflect(found, v);
    applied.push_back(found);
  }
  WeylElement w = weyl_identity(rs);
  // v_final = s_{i_k} ... s_{i_1}(start), so the word reads the greedy
  // sequence backwards.
  for (auto it = applied.rbegin(); it != applied.rend(); ++it)
    w = weyl_mul(w, simple_reflection(rs, *it));
  return w;
}

}  // namespace

WeylElement longest_element(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return longest_element(rs, all);
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& simples) {
  const std::set<int> sset(simples.begin(), simples.end());
  const Subsystem sub = subsystem(rs, sset);
  return greedy_longest(rs, simples, rs.rho(sub.roots));
}

bool is_dominant(const RootSystem& rs, const Weight& nu) {
  for (int i = 0; i < rs.rank(); ++i) {
    Rat pair = 0;
    for (int j = 0; j < rs.rank(); ++j)
      if (nu[j] != 0) pair += nu[j] * to_rat(rs.gram(j, i));
    if (pair < 0) return false;
  }
  return true;
}

int dual_coxeter_number(const RootSystem& rs, const std::set<int>& simples) {
  if (simples.empty()) throw std::invalid_argument("dual_coxeter_number: empty subset");
  if (!rs.connected(simples))
    throw std::invalid_argument("dual_coxeter_number: subset not connected");
  const Subsystem sub = subsystem(rs, simples);
  const Weight rho_sub = rs.rho(sub.roots);
  const int theta = sub.components[0].highest;
  const Weight theta_w = to_weight(rs.root(theta).coeffs);
  const Rat val = 1 + 2 * rs.inner(rho_sub, theta_w) / to_rat(rs.norm2(theta));
  return static_cast<int>(to_int(val));
}

Weight fundamental_weight(const RootSystem& rs, int i) {
  // Solve cartan * c = e_i: <omega_i, alpha_j^vee> = delta_ij.
  const int n = rs.rank();
  RatMat a(n, RatVec(n));
  RatVec b(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = to_rat(rs.cartan()[r][c]);
  b[i] = 1;
  const auto x = solve(a, b);
  if (!x) throw std::logic_error("fundamental_weight: singular Cartan matrix");
  return *x;
}

}  // namespace ck
