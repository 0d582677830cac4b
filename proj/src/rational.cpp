#include "ck/rational.hpp"

#include <stdexcept>

namespace ck {

bool is_zero(const RatVec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

int rref(RatMat& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rat inv = 1 / m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

int rank(RatMat m) { return rref(m); }

RatMat kernel_basis(const RatMat& m) {
  if (m.empty() || m[0].empty()) {
    // Zero map: the whole domain is the kernel.
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    RatMat basis;
    for (int c = 0; c < cols; ++c) {
      RatVec v(cols, 0);
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  RatMat e = m;
  const int cols = static_cast<int>(e[0].size());
  const int rnk = rref(e);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rnk; ++r) {
    int c = 0;
    while (c < cols && e[r][c] == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  RatMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (int r = 0; r < rnk; ++r) v[pivot_col[r]] = -e[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  RatMat aug(rows, RatVec(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug[r][c] = m[r][c];
    aug[r][cols] = b[r];
  }
  const int rnk = rref(aug);
  RatVec x(cols, 0);
  for (int r = 0; r < rnk; ++r) {
    int c = 0;
    while (c <= cols && aug[r][c] == 0) ++c;
    if (c == cols) return std::nullopt;  // 0 = nonzero
    x[c] = aug[r][cols];
    // Free variables stay zero; subtract nothing further since rref already
    // cleared the pivot columns.
    for (int c2 = c + 1; c2 < cols; ++c2)
      if (aug[r][c2] != 0 && x[c2] != 0) x[c] -= aug[r][c2] * x[c2];
  }
  // Verify (free columns may interact; cheap at our sizes).
  for (int r = 0; r < rows; ++r) {
    Rat acc = 0;
    for (int c = 0; c < cols; ++c) acc += m[r][c] * x[c];
    if (acc != b[r]) return std::nullopt;
  }
  return x;
}

Rat det(RatMat m) {
  const int n = static_cast<int>(m.size());
  Rat result = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    const Rat inv = 1 / m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

long long to_int(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("to_int: not an integer: " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::logic_error("to_int: out of range");
  return q.get_num().get_si();
}

std::string to_string(const Rat& q) { return q.get_str(); }

IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int p = k == 0 ? 0 : static_cast<int>(b[0].size());
  IntMat c(n, IntVec(p, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

IntVec int_mul(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

}  // namespace ck
