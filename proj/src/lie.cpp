#include "ffr/lie.hpp"

namespace ffr {

LieAlgebra::LieAlgebra(int n) : rs_(build_root_system(n)) {
  dim_ = 2 * rs_.npos() + rs_.rank;
  std::vector<std::vector<std::vector<int>>> mats(dim_);
  for (int b = 0; b < dim_; ++b) mats[b] = matrix(b);
  sc_.assign(dim_, std::vector<std::vector<std::pair<int, int>>>(dim_));
  kappa0_.assign(dim_, std::vector<Q>(dim_, Q(0)));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      std::vector<std::vector<Q>> c(n, std::vector<Q>(n, Q(0)));
      long tr = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long s = 0;
          for (int k = 0; k < n; ++k) s += mats[a][i][k] * mats[b][k][j] - mats[b][i][k] * mats[a][k][j];
          c[i][j] = s;
          tr += static_cast<long>(mats[a][i][j]) * mats[b][j][i];
        }
      kappa0_[a][b] = tr;
      LieElement x = from_matrix(c);
      for (int t = 0; t < dim_; ++t)
        if (x.c[t] != 0) sc_[a][b].push_back({t, static_cast<int>(to_long(x.c[t]))});
    }
}

BasisSym LieAlgebra::sym(int b) const {
  if (b < npos()) return {Kind::E, b};
  if (b < npos() + rank()) return {Kind::H, b - npos()};
  return {Kind::F, b - npos() - rank()};
}

std::string LieAlgebra::label(int b) const {
  auto s = sym(b);
  if (s.kind == Kind::H) return "h_{" + std::to_string(s.idx + 1) + "}";
  return std::string(s.kind == Kind::E ? "e" : "f") + "_{" + rs_.label(s.idx) + "}";
}

std::string LieAlgebra::cli_symbol(int b) const {
  auto s = sym(b);
  if (s.kind == Kind::H) return "h:" + std::to_string(s.idx + 1);
  return std::string(s.kind == Kind::E ? "e:" : "f:") + rs_.label(s.idx);
}

int LieAlgebra::parse_symbol(const std::string& s) const {
  auto p = s.find(':');
  if (p == std::string::npos || p == 0) throw Error("ParseError", "expected kind:label, got '" + s + "'");
  std::string k = s.substr(0, p), rest = s.substr(p + 1);
  if (k == "e") return e(rs_.parse_root(rest));
  if (k == "f") return f(rs_.parse_root(rest));
  if (k == "h") {
    int i = 0;
    try {
      size_t used = 0;
      i = std::stoi(rest, &used);
      if (used != rest.size()) throw 0;
    } catch (...) {
      throw Error("ParseError", "bad Cartan index in '" + s + "'");
    }
    if (i < 1 || i > rank()) throw Error("ParseError", "Cartan index out of range in '" + s + "'");
    return h(i - 1);
  }
  throw Error("ParseError", "unknown kind '" + k + "'");
}

Weight LieAlgebra::weight_of(int b) const {
  auto s = sym(b);
  if (s.kind == Kind::H) return zero_weight(rs_);
  Weight w = root_weight(rs_, rs_.positive_roots[s.idx]);
  return s.kind == Kind::E ? w : Q(-1) * w;
}

std::vector<int> LieAlgebra::root_coords_of(int b) const {
  auto s = sym(b);
  std::vector<int> c(rank(), 0);
  if (s.kind == Kind::H) return c;
  c = rs_.positive_roots[s.idx].coeffs;
  if (s.kind == Kind::F)
    for (auto& x : c) x = -x;
  return c;
}

std::vector<std::vector<int>> LieAlgebra::matrix(int b) const {
  int n = rs_.n;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  auto s = sym(b);
  if (s.kind == Kind::H) {
    m[s.idx][s.idx] = 1;
    m[s.idx + 1][s.idx + 1] = -1;
  } else {
    const Root& r = rs_.positive_roots[s.idx];
    if (s.kind == Kind::E) m[r.i][r.j] = 1;
    else m[r.j][r.i] = 1;
  }
  return m;
}

LieElement LieAlgebra::from_matrix(const std::vector<std::vector<Q>>& m) const {
  LieElement x = zero();
  int n = rs_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || m[i][j] == 0) continue;
      if (i < j) x.c[e(rs_.index_ij(i, j))] += m[i][j];
      else x.c[f(rs_.index_ij(j, i))] += m[i][j];
    }
  Q run = 0;
  for (int i = 0; i < rank(); ++i) {
    run += m[i][i];
    x.c[h(i)] = run;
  }
  return x;
}

LieElement LieAlgebra::basis(int b) const {
  LieElement x = zero();
  x.c[b] = 1;
  return x;
}

LieElement LieAlgebra::bracket_basis(int a, int b) const {
  LieElement x = zero();
  for (auto& [t, c] : sc_[a][b]) x.c[t] += c;
  return x;
}

LieElement LieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  if (static_cast<int>(a.c.size()) != dim_ || static_cast<int>(b.c.size()) != dim_)
    throw Error("DimensionError", "algebra mismatch");
  LieElement x = zero();
  for (int i = 0; i < dim_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b.c[j] == 0) continue;
      Q s = a.c[i] * b.c[j];
      for (auto& [t, c] : sc_[i][j]) x.c[t] += s * c;
    }
  }
  return x;
}

Q LieAlgebra::kappa0(const LieElement& a, const LieElement& b) const {
  Q s = 0;
  for (int i = 0; i < dim_; ++i)
    if (a.c[i] != 0)
      for (int j = 0; j < dim_; ++j)
        if (b.c[j] != 0) s += a.c[i] * b.c[j] * kappa0_[i][j];
  return s;
}

Q LieAlgebra::killing(int a, int b) const {
  Q tr = 0;
  for (int t = 0; t < dim_; ++t) {
    LieElement y = bracket(basis(a), bracket(basis(b), basis(t)));
    tr += y.c[t];
  }
  return tr;
}

std::string LieAlgebra::render(const LieElement& x) const {
  std::string s;
  for (int b = 0; b < dim_; ++b) {
    const Q& c = x.c[b];
    if (c == 0) continue;
    if (c < 0) s += s.empty() ? "-" : " - ";
    else if (!s.empty()) s += " + ";
    Q a = abs(c);
    if (a != 1) s += qstr(a) + " ";
    s += label(b);
  }
  return s.empty() ? "0" : s;
}

PolyG LieAlgebra::bracket_poly(const PolyG& a, const PolyG& b) const {
  PolyG r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].empty() || sc_[i][j].empty()) continue;
      Poly p = mul(a[i], b[j]);
      for (auto& [t, c] : sc_[i][j]) add_to(r[t], p, Q(c));
    }
  }
  return r;
}

PolyG LieAlgebra::ad_u(const PolyG& v) const {
  PolyG u(dim_);
  for (int a = 0; a < npos(); ++a) u[f(a)] = poly_var(npos(), a);
  return bracket_poly(u, v);
}

PolyG LieAlgebra::to_polyg(const LieElement& x) const {
  PolyG r(dim_);
  for (int b = 0; b < dim_; ++b)
    if (x.c[b] != 0) r[b] = poly_const(npos(), x.c[b]);
  return r;
}

bool LieAlgebra::polyg_zero(const PolyG& v) const {
  for (auto& p : v)
    if (!p.empty()) return false;
  return true;
}

int ad_nilpotency_index(const LieAlgebra& g, const LieElement& a) {
  for (int b = 0; b < g.dim(); ++b)
    if (a.c[b] != 0 && g.sym(b).kind != Kind::F)
      throw Error("NotNilpotent", "element not supported on n-bar");
  int best = 0;
  for (int t = 0; t < g.dim(); ++t) {
    LieElement y = g.basis(t);
    int k = 0;
    while (!(y == g.zero())) {
      y = g.bracket(a, y);
      ++k;
      if (k > 4 * g.n()) throw Error("NotNilpotent", "ad power did not vanish");
    }
    best = std::max(best, k);
  }
  return best;
}

int ad_nilpotency_index_generic(const LieAlgebra& g) {
  int best = 0;
  for (int t = 0; t < g.dim(); ++t) {
    PolyG y = g.to_polyg(g.basis(t));
    int k = 0;
    while (!g.polyg_zero(y)) {
      y = g.ad_u(y);
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

Split split(const LieAlgebra& g, const LieElement& x) {
  Split s{g.zero(), g.zero(), g.zero()};
  for (int b = 0; b < g.dim(); ++b) {
    auto k = g.sym(b).kind;
    (k == Kind::F ? s.nbar : k == Kind::H ? s.h : s.n).c[b] = x.c[b];
  }
  return s;
}

}  // namespace ffr
