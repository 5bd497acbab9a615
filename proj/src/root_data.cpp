#include "ffr/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffr {

RootSystem build_root_system(int n) {
  if (n < 2) throw Error("InvalidRank", "n must be at least 2");
  RootSystem rs;
  rs.n = n;
  rs.rank = n - 1;
  rs.h = rs.h_dual = n;
  int r = rs.rank;
  rs.cartan.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    rs.cartan[i][i] = 2;
    if (i + 1 < r) rs.cartan[i][i + 1] = rs.cartan[i + 1][i] = -1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Root a;
      a.coeffs.assign(r, 0);
      for (int s = i; s < j; ++s) a.coeffs[s] = 1;
      a.height = j - i;
      a.i = i;
      a.j = j;
      rs.positive_roots.push_back(a);
    }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs > b.coeffs;
  });
  for (auto& a : rs.positive_roots)
    if (a.height == 1) rs.simple_roots.push_back(a);
  return rs;
}

int RootSystem::find(const std::vector<int>& c) const {
  for (int a = 0; a < npos(); ++a)
    if (positive_roots[a].coeffs == c) return a;
  return -1;
}

int RootSystem::index_ij(int i, int j) const {
  // height-major ordering: roots of height h start after sum_{t<h}(n-t)
  int ht = j - i;
  int off = 0;
  for (int t = 1; t < ht; ++t) off += n - t;
  return off + i;
}

std::string RootSystem::label(int a) const {
  std::string s;
  const auto& c = positive_roots[a].coeffs;
  for (int i = 0; i < rank; ++i)
    if (c[i]) {
      if (!s.empty()) s += "+";
      s += "a" + std::to_string(i + 1);
    }
  return s;
}

int RootSystem::parse_root(const std::string& s) const {
  std::vector<int> c(rank, 0);
  std::stringstream ss(s);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, '+')) {
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A'))
      throw Error("ParseError", "bad root '" + s + "'");
    int i = 0;
    try {
      i = std::stoi(tok.substr(1));
    } catch (...) {
      throw Error("ParseError", "bad root '" + s + "'");
    }
    if (i < 1 || i > rank) throw Error("ParseError", "root index out of range in '" + s + "'");
    c[i - 1] += 1;
    any = true;
  }
  int a = any ? find(c) : -1;
  if (a < 0) throw Error("ParseError", "not a positive root: '" + s + "'");
  return a;
}

Weight zero_weight(const RootSystem& rs) { return Weight{std::vector<Q>(rs.rank, Q(0))}; }

Weight fundamental(const RootSystem& rs, int i) {
  Weight w = zero_weight(rs);
  w.coords[i] = 1;
  return w;
}

Weight rho(const RootSystem& rs) { return Weight{std::vector<Q>(rs.rank, Q(1))}; }

const Root& theta(const RootSystem& rs) { return rs.positive_roots.back(); }

Weight root_weight(const RootSystem& rs, const Root& a) {
  Weight w = zero_weight(rs);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) w.coords[i] += rs.cartan[i][j] * a.coeffs[j];
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(const Q& s, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

Q pairing(const RootSystem& rs, const Weight& l, const Root& a) {
  if (static_cast<int>(l.coords.size()) != rs.rank || static_cast<int>(a.coeffs.size()) != rs.rank)
    throw Error("DimensionError", "rank mismatch");
  Q s = 0;
  for (int i = 0; i < rs.rank; ++i) s += l.coords[i] * a.coeffs[i];
  return s;
}

QMat inverse(const QMat& m) {
  size_t r = m.size();
  QMat a = m, inv(r, std::vector<Q>(r, Q(0)));
  for (size_t i = 0; i < r; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < r; ++c) {
    size_t p = c;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) throw Error("Singular", "matrix not invertible");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Q d = a[c][c];
    for (size_t j = 0; j < r; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t i = 0; i < r; ++i)
      if (i != c && a[i][c] != 0) {
        Q f = a[i][c];
        for (size_t j = 0; j < r; ++j) {
          a[i][j] -= f * a[c][j];
          inv[i][j] -= f * inv[c][j];
        }
      }
  }
  return inv;
}

static QMat cartan_q(const RootSystem& rs) {
  QMat m(rs.rank, std::vector<Q>(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) m[i][j] = rs.cartan[i][j];
  return m;
}

Q form_hstar(const RootSystem& rs, const Weight& a, const Weight& b) {
  QMat ai = inverse(cartan_q(rs));
  Q s = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) s += a.coords[i] * ai[i][j] * b.coords[j];
  return s;
}

std::vector<Q> to_root_coords(const RootSystem& rs, const Weight& w) {
  QMat ai = inverse(cartan_q(rs));
  std::vector<Q> c(rs.rank, Q(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) c[i] += ai[i][j] * w.coords[j];
  return c;
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.coords.size(); ++i) {
    const Q& c = w.coords[i];
    if (c == 0) continue;
    std::string name = "w" + std::to_string(i + 1);
    if (c < 0) {
      s += s.empty() ? "-" : "-";
    } else if (!s.empty()) {
      s += "+";
    }
    Q a = abs(c);
    if (a != 1) s += qstr(a) + "*";
    s += name;
  }
  return s.empty() ? "0" : s;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
  // either "c1,c2,..." (fundamental coordinates) or "0"
  Weight w = zero_weight(rs);
  if (s == "0" || s.empty()) return w;
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= rs.rank) throw Error("ParseError", "too many weight coordinates in '" + s + "'");
    w.coords[i++] = parse_q(tok);
  }
  if (i != rs.rank) throw Error("ParseError", "weight needs " + std::to_string(rs.rank) + " coordinates");
  return w;
}

BilinearForm form(const RootSystem& rs, const std::string& label, const Q& k) {
  QMat a = cartan_q(rs);
  Q s;
  if (label == "kappa0") s = 1;
  else if (label == "kappa_g") s = 2 * rs.h_dual;
  else if (label == "kappa_c") s = -rs.h_dual;
  else if (label == "level") s = k;
  else if (label == "kappa_cb") {
    // -tr_{g/b}(ad a ad b) on h: -sum over positive roots of a(h_i) a(h_j)
    BilinearForm f;
    f.label = label;
    f.gram_h.assign(rs.rank, std::vector<Q>(rs.rank, Q(0)));
    for (auto& r : rs.positive_roots) {
      Weight w = root_weight(rs, r);
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) f.gram_h[i][j] -= w.coords[i] * w.coords[j];
    }
    f.gram_hstar = inverse(f.gram_h);
    return f;
  } else {
    throw Error("InvalidForm", "unknown form label '" + label + "'");
  }
  BilinearForm f;
  f.label = label;
  f.gram_h = a;
  for (auto& row : f.gram_h)
    for (auto& x : row) x *= s;
  if (s != 0) {
    f.gram_hstar = inverse(a);
    for (auto& row : f.gram_hstar)
      for (auto& x : row) x /= s;
  }
  return f;
}

WeylGroupElement weyl_identity(const RootSystem& rs) {
  WeylGroupElement w;
  w.perm.resize(rs.n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylGroupElement compose(const WeylGroupElement& a, const WeylGroupElement& b) {
  WeylGroupElement r;
  r.perm.resize(a.perm.size());
  for (size_t i = 0; i < r.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  return r;
}

WeylGroupElement inverse(const WeylGroupElement& a) {
  WeylGroupElement r;
  r.perm.resize(a.perm.size());
  for (size_t i = 0; i < r.perm.size(); ++i) r.perm[a.perm[i]] = static_cast<int>(i);
  return r;
}

WeylGroupElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylGroupElement w = weyl_identity(rs);
  for (int s : word) {
    if (s < 1 || s > rs.rank) throw Error("InvalidWeylWord", "generator index " + std::to_string(s));
    WeylGroupElement g = weyl_identity(rs);
    std::swap(g.perm[s - 1], g.perm[s]);
    w = compose(w, g);
  }
  return w;
}

std::vector<WeylGroupElement> weyl_group(const RootSystem& rs) {
  std::vector<WeylGroupElement> out;
  WeylGroupElement w = weyl_identity(rs);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
  return out;
}

static std::vector<Q> eps_coords(const Weight& l, int n) {
  std::vector<Q> v(n, Q(0));
  for (int j = n - 2; j >= 0; --j) v[j] = v[j + 1] + l.coords[j];
  return v;
}

Weight weyl_act(const RootSystem& rs, const WeylGroupElement& w, const Weight& l) {
  auto v = eps_coords(l, rs.n);
  std::vector<Q> u(rs.n);
  for (int j = 0; j < rs.n; ++j) u[w.perm[j]] = v[j];
  Weight r = zero_weight(rs);
  for (int i = 0; i < rs.rank; ++i) r.coords[i] = u[i] - u[i + 1];
  return r;
}

Weight dot_action(const RootSystem& rs, const WeylGroupElement& w, const Weight& l) {
  return weyl_act(rs, w, l + rho(rs)) - rho(rs);
}

std::pair<int, int> weyl_act_root(const RootSystem& rs, const WeylGroupElement& w, int a) {
  int i = w.perm[rs.positive_roots[a].i], j = w.perm[rs.positive_roots[a].j];
  if (i < j) return {rs.index_ij(i, j), 1};
  return {rs.index_ij(j, i), -1};
}

bool is_dominant_for(const RootSystem& rs, const std::vector<int>& sigma, const Weight& l) {
  for (int s : sigma) {
    if (s < 0 || s >= rs.rank) throw Error("DomainError", "bad simple root index");
    const Q& c = l.coords[s];
    if (!is_int(c) || c < 0) return false;
  }
  return true;
}

}  // namespace ffr
