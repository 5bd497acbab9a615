#include "ffr/linalg.hpp"

namespace ffr {

static int rref(QMatrix& m, int cols, std::vector<int>* pivots) {
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q d = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= d;
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        Q fct = m[i][c];
        for (int j = c; j < cols; ++j) m[i][j] -= fct * m[r][j];
      }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank_of(QMatrix m) {
  if (m.empty()) return 0;
  return rref(m, static_cast<int>(m[0].size()), nullptr);
}

std::vector<std::vector<Q>> nullspace(QMatrix m, int cols) {
  std::vector<int> piv;
  int r = m.empty() ? 0 : rref(m, cols, &piv);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Q>> out;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Q> v(cols, Q(0));
    v[fc] = 1;
    for (int i = 0; i < r; ++i) v[piv[i]] = -m[i][fc];
    out.push_back(v);
  }
  return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix c(n, std::vector<Q>(m, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

QMatrix identity_matrix(int n) {
  QMatrix m(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace ffr
