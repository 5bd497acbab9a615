#include "ffr/weyl_poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "ffr/linalg.hpp"

namespace ffr {

WeylElement we_zero(const LieAlgebra& g) {
  WeylElement w;
  w.npos = g.npos();
  w.rank = g.rank();
  return w;
}

WeylElement we_const(const LieAlgebra& g, const Q& c) {
  WeylElement w = we_zero(g);
  if (c != 0) w.terms[Mono(2 * w.npos, 0)] = poly_const(w.rank, c);
  return w;
}

WeylElement we_x(const LieAlgebra& g, int a) {
  WeylElement w = we_zero(g);
  Mono m(2 * w.npos, 0);
  m[a] = 1;
  w.terms[m] = poly_const(w.rank, 1);
  return w;
}

WeylElement we_d(const LieAlgebra& g, int a) {
  WeylElement w = we_zero(g);
  Mono m(2 * w.npos, 0);
  m[w.npos + a] = 1;
  w.terms[m] = poly_const(w.rank, 1);
  return w;
}

WeylElement we_h(const LieAlgebra& g, int i) {
  WeylElement w = we_zero(g);
  w.terms[Mono(2 * w.npos, 0)] = poly_var(w.rank, i);
  return w;
}

static void we_add(WeylElement& w, const Mono& m, const Poly& p, const Q& s = 1) {
  if (p.empty() || s == 0) return;
  auto it = w.terms.find(m);
  if (it == w.terms.end()) {
    w.terms.emplace(m, scaled(p, s));
  } else {
    add_to(it->second, p, s);
    if (it->second.empty()) w.terms.erase(it);
  }
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  WeylElement r = a;
  for (auto& [m, p] : b.terms) we_add(r, m, p);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  WeylElement r = a;
  for (auto& [m, p] : b.terms) we_add(r, m, p, Q(-1));
  return r;
}

WeylElement operator*(const Q& s, const WeylElement& a) {
  WeylElement r = a;
  r.terms.clear();
  if (s == 0) return r;
  for (auto& [m, p] : a.terms) r.terms.emplace(m, scaled(p, s));
  return r;
}

// d^b x^c = sum_k prod_i C(b_i,k_i) c_i!/(c_i-k_i)! x^{c-k} d^{b-k}
WeylElement operator*(const WeylElement& A, const WeylElement& B) {
  WeylElement r;
  r.npos = A.npos;
  r.rank = A.rank;
  int N = A.npos;
  for (auto& [ma, pa] : A.terms)
    for (auto& [mb, pb] : B.terms) {
      Poly pp = mul(pa, pb);
      if (pp.empty()) continue;
      std::vector<int> kmax(N);
      for (int i = 0; i < N; ++i) kmax[i] = std::min(ma[N + i], mb[i]);
      std::vector<int> k(N, 0);
      while (true) {
        Q coef = 1;
        Mono m(2 * N);
        for (int i = 0; i < N; ++i) {
          coef *= binom(ma[N + i], k[i]) * factorial(mb[i]) / factorial(mb[i] - k[i]);
          m[i] = ma[i] + mb[i] - k[i];
          m[N + i] = ma[N + i] - k[i] + mb[N + i];
        }
        we_add(r, m, pp, coef);
        int i = 0;
        while (i < N && k[i] == kmax[i]) k[i++] = 0;
        if (i == N) break;
        ++k[i];
      }
    }
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

namespace {
struct RTerm {
  Mono x, d, h;
  Q c;
};
}  // namespace

static std::string var_power(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string render(const RootSystem& rs, const WeylElement& w) {
  std::vector<RTerm> ts;
  int N = w.npos;
  for (auto& [m, p] : w.terms)
    for (auto& [hm, c] : p) {
      RTerm t;
      t.x.assign(m.begin(), m.begin() + N);
      t.d.assign(m.begin() + N, m.end());
      t.h = hm;
      t.c = c;
      ts.push_back(t);
    }
  std::sort(ts.begin(), ts.end(), [](const RTerm& a, const RTerm& b) {
    int da = total_degree(a.x) + total_degree(a.d), db = total_degree(b.x) + total_degree(b.d);
    if (da != db) return da > db;
    if (a.x != b.x) return a.x > b.x;
    if (a.d != b.d) return a.d > b.d;
    int ha = total_degree(a.h), hb = total_degree(b.h);
    if (ha != hb) return ha > hb;
    return a.h > b.h;
  });
  std::string s;
  for (auto& t : ts) {
    std::vector<std::string> f;
    for (int i = 0; i < N; ++i)
      if (t.x[i]) f.push_back(var_power("x_{" + rs.label(i) + "}", t.x[i]));
    for (int i = 0; i < N; ++i)
      if (t.d[i]) f.push_back(var_power("d_{" + rs.label(i) + "}", t.d[i]));
    for (size_t i = 0; i < t.h.size(); ++i)
      if (t.h[i]) f.push_back(var_power("h" + std::to_string(i + 1), t.h[i]));
    std::string body;
    for (auto& x : f) body += (body.empty() ? "" : " ") + x;
    Q a = abs(t.c);
    std::string coef = (a == 1 && !body.empty()) ? "" : qstr(a);
    std::string term = coef.empty() ? body : (body.empty() ? coef : coef + " " + body);
    if (s.empty()) s = (t.c < 0 ? "-" : "") + term;
    else s += (t.c < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

std::vector<Q> bernoulli_series(Kernel k, int order) {
  if (order < 0) throw Error("DomainError", "order must be nonnegative");
  // (e^t-1)/t = sum t^j/(j+1)!
  std::vector<Q> a(order + 1);
  for (int j = 0; j <= order; ++j) a[j] = Q(1) / factorial(j + 1);
  if (k == Kernel::Expm1DivT) return a;
  std::vector<Q> b(order + 1, Q(0));
  b[0] = 1;
  for (int j = 1; j <= order; ++j) {
    Q s = 0;
    for (int i = 1; i <= j; ++i) s += a[i] * b[j - i];
    b[j] = -s;
  }
  if (k == Kernel::TExpDivExpm1 && order >= 1) b[1] += 1;
  if (k == Kernel::TdExpm1Minus1) b[0] -= 1;
  return b;
}

Kernel parse_kernel(const std::string& s) {
  if (s == "t/(e^t-1)") return Kernel::TdExpm1;
  if (s == "t*e^t/(e^t-1)") return Kernel::TExpDivExpm1;
  if (s == "t/(e^t-1)-1") return Kernel::TdExpm1Minus1;
  if (s == "(e^t-1)/t") return Kernel::Expm1DivT;
  throw Error("ParseError", "unknown kernel '" + s + "'");
}

PolyG apply_kernel(const LieAlgebra& g, Kernel k, const PolyG& v) {
  auto co = bernoulli_series(k, 4 * g.n());
  PolyG out(g.dim()), cur = v;
  for (int j = 0; !g.polyg_zero(cur); ++j) {
    for (int b = 0; b < g.dim(); ++b) add_to(out[b], cur[b], co[j]);
    cur = g.ad_u(cur);
  }
  return out;
}

PolyG exp_ad_u(const LieAlgebra& g, const PolyG& v, int sign) {
  PolyG out(g.dim()), cur = v;
  for (int j = 0; !g.polyg_zero(cur); ++j) {
    Q c = Q(sign == 1 || j % 2 == 0 ? 1 : -1) / factorial(j);
    for (int b = 0; b < g.dim(); ++b) add_to(out[b], cur[b], c);
    cur = g.ad_u(cur);
  }
  return out;
}

PolyG T_poly(const LieAlgebra& g, const LieElement& a) {
  for (int b = 0; b < g.dim(); ++b)
    if (a.c[b] != 0 && g.sym(b).kind != Kind::F) throw Error("NotInNilradical", "element not in n-bar");
  return apply_kernel(g, Kernel::TdExpm1, g.to_polyg(a));
}

std::string render_xpoly(const RootSystem& rs, const Poly& p) {
  std::vector<std::pair<Mono, Q>> ts(p.begin(), p.end());
  std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string s;
  for (auto& [m, c] : ts) {
    std::string body;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) body += (body.empty() ? "" : " ") + var_power("x_{" + rs.label(static_cast<int>(i)) + "}", m[i]);
    Q a = abs(c);
    std::string coef = (a == 1 && !body.empty()) ? "" : qstr(a);
    std::string term = coef.empty() ? body : (body.empty() ? coef : coef + " " + body);
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

std::string render_polyg(const LieAlgebra& g, const PolyG& v) {
  std::string s;
  for (int b = 0; b < g.dim(); ++b) {
    if (v[b].empty()) continue;
    std::string c = render_xpoly(g.rs(), v[b]);
    if (!s.empty()) s += " + ";
    if (c == "1") s += g.label(b);
    else if (c == "-1") s += "-" + g.label(b);
    else s += (v[b].size() == 1 && c.find(' ') == std::string::npos ? c : "(" + c + ")") + " " + g.label(b);
  }
  return s.empty() ? "0" : s;
}

WeylElement pi_g(const LieAlgebra& g, const LieElement& a) {
  PolyG w = exp_ad_u(g, g.to_polyg(a), -1);
  PolyG wn(g.dim());
  for (int b = 0; b < g.npos(); ++b) wn[g.f(b)] = w[g.f(b)];
  PolyG v = apply_kernel(g, Kernel::TExpDivExpm1, wn);
  WeylElement r = we_zero(g);
  int N = g.npos();
  for (int b = 0; b < N; ++b)
    for (auto& [m, c] : v[g.f(b)]) {
      Mono key(2 * N, 0);
      for (int i = 0; i < N; ++i) key[i] = m[i];
      key[N + b] += 1;
      we_add(r, key, poly_const(g.rank(), -c));
    }
  for (int i = 0; i < g.rank(); ++i)
    for (auto& [m, c] : w[g.h(i)]) {
      Mono key(2 * N, 0);
      for (int t = 0; t < N; ++t) key[t] = m[t];
      we_add(r, key, poly_var(g.rank(), i), c);
    }
  return r;
}

PQ pq_polynomials(const LieAlgebra& g, int gamma) {
  if (gamma < 0 || gamma >= g.npos() || !g.rs().is_simple(gamma))
    throw Error("NotSimpleRoot", "expected a simple root");
  PQ out;
  PolyG p = apply_kernel(g, Kernel::TdExpm1Minus1, g.to_polyg(g.basis(g.f(gamma))));
  PolyG w = exp_ad_u(g, g.to_polyg(g.basis(g.e(gamma))), -1);
  PolyG wn(g.dim());
  for (int b = 0; b < g.npos(); ++b) wn[g.f(b)] = w[g.f(b)];
  PolyG q = apply_kernel(g, Kernel::TExpDivExpm1, wn);
  for (int b = 0; b < g.npos(); ++b) {
    out.p.push_back(p[g.f(b)]);
    out.q.push_back(q[g.f(b)]);
  }
  return out;
}

PiTable::PiTable(const LieAlgebra& g) : g_(g) {
  for (int b = 0; b < g.dim(); ++b) img_.push_back(pi_g(g, g.basis(b)));
}

WeylElement PiTable::of(const LieElement& x) const {
  WeylElement r = we_zero(g_);
  for (int b = 0; b < g_.dim(); ++b)
    if (x.c[b] != 0) r = r + x.c[b] * img_[b];
  return r;
}

static LieElement h_of_root(const LieAlgebra& g, int alpha) {
  LieElement h = g.zero();
  const auto& c = g.rs().positive_roots[alpha].coeffs;
  for (int i = 0; i < g.rank(); ++i) h.c[g.h(i)] = c[i];
  return h;
}

WeylElement casimir_weyl(const LieAlgebra& g, int alpha) {
  WeylElement e = pi_g(g, g.basis(g.e(alpha))), f = pi_g(g, g.basis(g.f(alpha)));
  WeylElement h = pi_g(g, h_of_root(g, alpha));
  return e * f + f * e + Q(1, 2) * (h * h);
}

Q casimir_on_highest(const RootSystem& rs, const Weight& l, int alpha) {
  Q t = pairing(rs, l, rs.positive_roots[alpha]);
  return t + t * t / 2;
}

std::vector<std::string> verify_pi_hom(const LieAlgebra& g) {
  PiTable pi(g);
  std::vector<std::string> fails;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      WeylElement lhs = pi.of(g.bracket_basis(a, b));
      WeylElement rhs = commutator(pi[a], pi[b]);
      if (!(lhs == rhs)) fails.push_back(g.cli_symbol(a) + "," + g.cli_symbol(b));
    }
  return fails;
}

FockVector fock_basis(const LieAlgebra& g, FockKind kind, int alpha, const Weight& l, const Mono& m) {
  FockVector v;
  v.kind = kind;
  v.alpha = alpha;
  v.lambda = l;
  if (static_cast<int>(m.size()) != g.npos()) throw Error("DimensionError", "monomial length");
  v.terms[m] = 1;
  return v;
}

static void fock_add(std::map<Mono, Q>& t, const Mono& m, const Q& c) {
  if (c == 0) return;
  auto it = t.find(m);
  if (it == t.end()) t.emplace(m, c);
  else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// x_a or d_a on a Fock term map
static std::map<Mono, Q> fock_gen(const FockVector& v, const std::map<Mono, Q>& in, bool is_x, int a) {
  std::map<Mono, Q> out;
  bool special = v.kind == FockKind::NbarAlpha && a == v.alpha;
  for (auto& [m, c] : in) {
    Mono mm = m;
    if (special == is_x) {
      // multiplication: x_alpha on GT, d_gamma otherwise
      mm[a] += 1;
      fock_add(out, mm, c);
    } else if (m[a] > 0) {
      // d/dx_alpha on GT, -d/d(d_gamma) otherwise
      Q s = special ? Q(m[a]) : Q(-m[a]);
      mm[a] -= 1;
      fock_add(out, mm, c * s);
    }
  }
  return out;
}

FockVector act_F(const LieAlgebra& g, const WeylElement& w, const FockVector& v) {
  int N = g.npos();
  std::vector<Q> hval(g.rank());
  for (int i = 0; i < g.rank(); ++i) hval[i] = v.lambda.coords[i] + 2;
  FockVector out = v;
  out.terms.clear();
  for (auto& [m, p] : w.terms) {
    Q s = poly_eval(p, hval);
    if (s == 0) continue;
    std::map<Mono, Q> cur = v.terms;
    for (int a = 0; a < N && !cur.empty(); ++a)
      for (int e = 0; e < m[N + a]; ++e) cur = fock_gen(v, cur, false, a);
    for (int a = 0; a < N && !cur.empty(); ++a)
      for (int e = 0; e < m[a]; ++e) cur = fock_gen(v, cur, true, a);
    for (auto& [mm, c] : cur) fock_add(out.terms, mm, c * s);
  }
  return out;
}

std::vector<int> fock_weight_offset(const LieAlgebra& g, FockKind kind, int alpha, const Mono& m) {
  std::vector<int> off(g.rank(), 0);
  for (int a = 0; a < g.npos(); ++a) {
    const auto& c = g.rs().positive_roots[a].coeffs;
    int s = (kind == FockKind::NbarAlpha && a == alpha) ? m[a] + 1 : -m[a];
    for (int i = 0; i < g.rank(); ++i) off[i] += s * c[i];
  }
  return off;
}

std::vector<Mono> monomials_upto(int nvars, int d) {
  std::vector<Mono> out;
  Mono m(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, d);
  return out;
}

static bool in_box(const std::vector<int>& off, int radius) {
  for (int x : off)
    if (x < -radius || x > radius) return false;
  return true;
}

// index set shared by the formula and the realization
static std::vector<Mono> twist_index_set(const LieAlgebra& g, int alpha, int radius, int trunc) {
  int N = g.npos();
  std::vector<Mono> out;
  if (g.rs().is_simple(alpha)) {
    Mono m(N, 0);
    std::function<void(int, int)> rec = [&](int i, int sum) {
      if (i == N) {
        for (int k = 0; k <= radius + sum; ++k) {
          m[alpha] = k;
          out.push_back(m);
        }
        m[alpha] = 0;
        return;
      }
      if (i == alpha) {
        rec(i + 1, sum);
        return;
      }
      for (int e = 0; e <= radius; ++e) {
        m[i] = e;
        rec(i + 1, sum + e);
      }
      m[i] = 0;
    };
    rec(0, 0);
  } else {
    out = monomials_upto(N, trunc);
  }
  return out;
}

WindowChar twist_character(const LieAlgebra& g, int alpha, int radius, int trunc) {
  if (radius < 0) throw Error("EmptyWindow", "window radius must be nonnegative");
  const auto& rs = g.rs();
  bool exact = rs.is_simple(alpha);
  WindowChar ch;
  for (auto& m : twist_index_set(g, alpha, radius, trunc)) {
    // f_alpha^{-k} prod f_gamma^{b_gamma} v with k = m[alpha] + 1
    std::vector<int> off(g.rank(), 0);
    for (int a = 0; a < g.npos(); ++a) {
      int s = a == alpha ? m[a] + 1 : -m[a];
      for (int i = 0; i < g.rank(); ++i) off[i] += s * rs.positive_roots[a].coeffs[i];
    }
    if (!in_box(off, radius)) continue;
    auto& e = ch[off];
    e.mult += 1;
    e.exact = exact;
  }
  return ch;
}

WindowChar realization_spectrum(const LieAlgebra& g, const PiTable& pi, const Weight& l, int alpha,
                                int radius, int trunc) {
  if (radius < 0) throw Error("EmptyWindow", "window radius must be nonnegative");
  bool exact = g.rs().is_simple(alpha);
  auto ainv = inverse([&] {
    QMat c(g.rank(), std::vector<Q>(g.rank()));
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j) c[i][j] = g.rs().cartan[i][j];
    return c;
  }());
  WindowChar ch;
  for (auto& m : twist_index_set(g, alpha, radius, trunc)) {
    FockVector v = fock_basis(g, FockKind::NbarAlpha, alpha, l, m);
    std::vector<Q> eig(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
      FockVector hv = act_F(g, pi[g.h(i)], v);
      if (hv.terms.size() > 1 || (hv.terms.size() == 1 && hv.terms.begin()->first != m))
        throw Error("RealizationBug", "monomial is not an h-eigenvector");
      eig[i] = hv.terms.empty() ? Q(0) : hv.terms.begin()->second;
      eig[i] -= l.coords[i];
    }
    std::vector<int> off(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
      Q s = 0;
      for (int j = 0; j < g.rank(); ++j) s += ainv[i][j] * eig[j];
      off[i] = static_cast<int>(to_long(s));
    }
    if (!in_box(off, radius)) continue;
    auto& e = ch[off];
    e.mult += 1;
    e.exact = exact;
  }
  return ch;
}

GammaMult gamma_alpha_multiplicity(const LieAlgebra& g, const PiTable& pi, const Weight& l, int alpha,
                                   const std::vector<int>& offset, int D) {
  (void)pi;
  std::vector<Mono> basis;
  for (auto& m : monomials_upto(g.npos(), D))
    if (fock_weight_offset(g, FockKind::NbarAlpha, alpha, m) == offset) basis.push_back(m);
  if (basis.empty()) throw Error("EmptyWeightSpace", "no monomials of that weight up to the given degree");
  std::map<Mono, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
  WeylElement c = casimir_weyl(g, alpha);
  int d = static_cast<int>(basis.size());
  GammaMult out;
  out.dim = d;
  QMatrix M(d, std::vector<Q>(d, Q(0)));
  for (int j = 0; j < d; ++j) {
    FockVector v = act_F(g, c, fock_basis(g, FockKind::NbarAlpha, alpha, l, basis[j]));
    for (auto& [m, x] : v.terms) {
      auto it = pos.find(m);
      if (it == pos.end()) out.leak = true;
      else M[it->second][j] = x;
    }
  }
  std::set<Q> cand;
  for (int i = 0; i < d; ++i) cand.insert(M[i][i]);
  int found = 0;
  for (auto& ev : cand) {
    QMatrix A = M;
    for (int i = 0; i < d; ++i) A[i][i] -= ev;
    QMatrix P = identity_matrix(d);
    for (int t = 0; t < d; ++t) P = matmul(P, A);
    int nul = d - rank_of(P);
    if (nul > 0) {
      out.counts[ev] = nul;
      found += nul;
    }
  }
  out.irrational = d - found;
  return out;
}

}  // namespace ffr
