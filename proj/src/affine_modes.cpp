#include "ffr/affine_modes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ffr {

// ---- FieldExpr ----

void FieldExpr::add(std::vector<Factor> f, const Q& c) {
  if (c == 0) return;
  std::sort(f.begin(), f.end());
  auto it = terms.find(f);
  if (it == terms.end()) {
    terms.emplace(std::move(f), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void FieldExpr::add(const FieldExpr& o, const Q& s) {
  if (s == 0) return;
  for (auto& [f, c] : o.terms) add(f, c * s);
}

static int base_weight(FK k) { return k == FK::AS ? 0 : 1; }

int conformal_weight(const std::vector<Factor>& f) {
  int w = 0;
  for (auto& x : f) w += base_weight(x.kind) + x.deriv;
  return w;
}

std::string render(const LieAlgebra& g, const FieldExpr& F) {
  std::string s;
  for (auto& [f, c] : F.terms) {
    std::string body;
    for (auto& x : f) {
      std::string name = x.kind == FK::A ? "a_{" + g.rs().label(x.root) + "}"
                         : x.kind == FK::AS ? "a*_{" + g.rs().label(x.root) + "}"
                                            : "b_{" + std::to_string(x.root + 1) + "}";
      name += "(z)";
      if (x.deriv == 1) name = "d" + name;
      else if (x.deriv > 1) name = "d^" + std::to_string(x.deriv) + name;
      body += (body.empty() ? "" : " ") + name;
    }
    if (f.size() > 1) body = ":" + body + ":";
    if (body.empty()) body = "1";
    Q a = abs(c);
    std::string term = a == 1 ? body : qstr(a) + " " + body;
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

// ---- Wakimoto vectors ----

void wadd(WVec& v, const WMono& m, const Q& c) {
  if (c == 0) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

void wadd(WVec& v, const WVec& o, const Q& s) {
  if (s == 0) return;
  for (auto& [m, c] : o) wadd(v, m, c * s);
}

int energy(const LieAlgebra& g, const WMono& m) {
  int e = 0;
  for (size_t i = g.npos(); i < m.size(); ++i) e += gen_m(m[i]);
  return e;
}

WakimotoSpace::WakimotoSpace(const LieAlgebra& alg, TopKind t, int a, const Weight& l, const Q& level)
    : g(&alg), top(t), alpha(a), lambda(l), k(level) {
  if (t == TopKind::GT && (a < 0 || a >= alg.npos())) throw Error("DomainError", "GT top needs a positive root");
  if (static_cast<int>(l.coords.size()) != alg.rank()) throw Error("DimensionError", "weight rank");
  G.assign(alg.rank(), std::vector<Q>(alg.rank(), Q(0)));
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j) G[i][j] = (level + alg.n()) * alg.rs().cartan[i][j];
}

WMono WakimotoSpace::vacuum() const { return WMono(g->npos(), 0); }

WMono WakimotoSpace::top_mono(const Mono& m) const { return m; }

static int count_code(const WMono& m, int from, int code) {
  return static_cast<int>(std::count(m.begin() + from, m.end(), code));
}

static WMono insert_code(const WMono& m, int from, int code) {
  WMono r = m;
  auto it = std::upper_bound(r.begin() + from, r.end(), code);
  r.insert(it, code);
  return r;
}

static WMono remove_code(const WMono& m, int from, int code) {
  WMono r = m;
  auto it = std::find(r.begin() + from, r.end(), code);
  r.erase(it);
  return r;
}

WVec WakimotoSpace::act(FK kind, int root, int n, const WMono& m) const {
  WVec out;
  int N = g->npos();
  if (kind == FK::B) {
    if (n < 0) wadd(out, insert_code(m, N, gen_code(Gen::Y, root, -n)), Q(1));
    else if (n == 0) wadd(out, m, lambda.coords[root] + 2);
    else
      for (int j = 0; j < g->rank(); ++j) {
        if (G[root][j] == 0) continue;
        int code = gen_code(Gen::Y, j, n);
        int c = count_code(m, N, code);
        if (c) wadd(out, remove_code(m, N, code), Q(n) * G[root][j] * c);
      }
    return out;
  }
  bool special = top == TopKind::GT && root == alpha;
  if (kind == FK::A) {
    if (n < 0) {
      wadd(out, insert_code(m, N, gen_code(Gen::P, root, -n)), Q(1));
    } else if (n > 0) {
      int code = gen_code(Gen::X, root, n);
      int c = count_code(m, N, code);
      if (c) wadd(out, remove_code(m, N, code), Q(c));
    } else if (special) {
      if (m[root] > 0) {
        WMono r = m;
        r[root] -= 1;
        wadd(out, r, Q(m[root]));
      }
    } else {
      WMono r = m;
      r[root] += 1;
      wadd(out, r, Q(1));
    }
    return out;
  }
  // a*
  if (n < 0) {
    wadd(out, insert_code(m, N, gen_code(Gen::X, root, -n)), Q(1));
  } else if (n > 0) {
    int code = gen_code(Gen::P, root, n);
    int c = count_code(m, N, code);
    if (c) wadd(out, remove_code(m, N, code), Q(-c));
  } else if (special) {
    WMono r = m;
    r[root] += 1;
    wadd(out, r, Q(1));
  } else if (m[root] > 0) {
    WMono r = m;
    r[root] -= 1;
    wadd(out, r, Q(-m[root]));
  }
  return out;
}

WVec WakimotoSpace::act(FK kind, int root, int n, const WVec& v) const {
  WVec out;
  for (auto& [m, c] : v) wadd(out, act(kind, root, n, m), c);
  return out;
}

std::string WakimotoSpace::render(const WVec& v) const {
  if (v.empty()) return "0";
  const auto& rs = g->rs();
  int N = g->npos();
  std::string s;
  for (auto& [m, c] : v) {
    std::string body;
    for (size_t i = N; i < m.size(); ++i) {
      int code = m[i];
      Gen k = gen_kind(code);
      std::string nm = k == Gen::P ? "a_{" + rs.label(gen_root(code)) + ",-" : k == Gen::X ? "a*_{" + rs.label(gen_root(code)) + ",-"
                                                                                            : "b_{" + std::to_string(gen_root(code) + 1) + ",-";
      body += (body.empty() ? "" : " ") + nm + std::to_string(gen_m(code)) + "}";
    }
    for (int a = 0; a < N; ++a) {
      if (!m[a]) continue;
      bool special = top == TopKind::GT && a == alpha;
      std::string nm = (special ? "x_{" : "d_{") + rs.label(a) + "}";
      if (m[a] > 1) nm += "^" + std::to_string(m[a]);
      body += (body.empty() ? "" : " ") + nm;
    }
    body += (body.empty() ? "" : " ") + std::string("|v>");
    Q a = abs(c);
    std::string term = a == 1 ? body : qstr(a) + " " + body;
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  return s;
}

std::vector<WMono> WakimotoSpace::basis_energy(int e, int topdeg) const {
  int N = g->npos();
  std::vector<int> gens;
  for (int m = 1; m <= e; ++m) {
    for (int a = 0; a < N; ++a) gens.push_back(gen_code(Gen::P, a, m));
    for (int a = 0; a < N; ++a) gens.push_back(gen_code(Gen::X, a, m));
    for (int i = 0; i < g->rank(); ++i) gens.push_back(gen_code(Gen::Y, i, m));
  }
  std::sort(gens.begin(), gens.end());
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (size_t i = start; i < gens.size(); ++i) {
      int m = gen_m(gens[i]);
      if (m > left) continue;
      cur.push_back(gens[i]);
      rec(i, left - m);
      cur.pop_back();
    }
  };
  rec(0, e);
  std::vector<WMono> out;
  for (auto& tm : monomials_upto(N, topdeg))
    for (auto& p : parts) {
      WMono w = tm;
      w.insert(w.end(), p.begin(), p.end());
      out.push_back(w);
    }
  return out;
}

std::vector<WMono> WakimotoSpace::basis_upto(int d, int topdeg) const {
  std::vector<WMono> out;
  for (int e = 0; e <= d; ++e) {
    auto b = basis_energy(e, topdeg);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<int> WakimotoSpace::weight_offset(const WMono& m) const {
  int N = g->npos();
  Mono topm(m.begin(), m.begin() + N);
  auto off = fock_weight_offset(*g, top == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar, alpha, topm);
  for (size_t i = N; i < m.size(); ++i) {
    Gen k = gen_kind(m[i]);
    if (k == Gen::Y) continue;
    const auto& c = g->rs().positive_roots[gen_root(m[i])].coeffs;
    int s = k == Gen::P ? -1 : 1;
    for (int j = 0; j < g->rank(); ++j) off[j] += s * c[j];
  }
  return off;
}

WVec heisenberg_act(const WakimotoSpace& sp, int gamma, int n, const WVec& v) {
  if (gamma < 0 || gamma >= sp.g->rank()) throw Error("DomainError", "simple index out of range");
  return sp.act(FK::B, gamma, n, v);
}

// ---- mode expansion ----

// coefficient of the mode n of d^d phi, phi of weight base
static Q deriv_factor(FK kind, int d, int n) {
  Q c = 1;
  int b = base_weight(kind);
  for (int i = 0; i < d; ++i) c *= Q(-n - b - i);
  return c;
}

static int creator_max(FK k) { return k == FK::AS ? 0 : -1; }

namespace {
struct TermApply {
  const WakimotoSpace& sp;
  const std::vector<Factor>& f;
  int p;
  WVec& out;
  Q coef;
  std::vector<int> deferred;

  void creators(size_t j, int R, const WVec& cur) {
    if (cur.empty()) return;
    if (j == deferred.size()) {
      if (R == 0) wadd(out, cur, coef);
      return;
    }
    const Factor& x = f[deferred[j]];
    int others = 0;
    for (size_t t = j + 1; t < deferred.size(); ++t) others += creator_max(f[deferred[t]].kind);
    int lo = R - others, hi = creator_max(x.kind);
    if (j + 1 == deferred.size()) lo = R;
    for (int n = lo; n <= hi; ++n) {
      Q c = deriv_factor(x.kind, x.deriv, n);
      if (c == 0) continue;
      WVec nxt = sp.act(x.kind, x.root, n, cur);
      if (c != 1)
        for (auto& [m, q] : nxt) q *= c;
      creators(j + 1, R - n, nxt);
    }
  }

  void annihilators(size_t i, const WVec& cur, int S) {
    if (cur.empty()) return;
    if (i == f.size()) {
      creators(0, p - S, cur);
      return;
    }
    const Factor& x = f[i];
    deferred.push_back(static_cast<int>(i));
    annihilators(i + 1, cur, S);
    deferred.pop_back();
    std::vector<int> cand;
    if (x.kind != FK::AS) cand.push_back(0);
    int N = sp.g->npos();
    for (auto& [m, q] : cur)
      for (size_t t = N; t < m.size(); ++t) {
        int code = m[t];
        Gen gk = gen_kind(code);
        int r = gen_root(code);
        bool hit = (x.kind == FK::A && gk == Gen::X && r == x.root) ||
                   (x.kind == FK::AS && gk == Gen::P && r == x.root) ||
                   (x.kind == FK::B && gk == Gen::Y && sp.G[x.root][r] != 0);
        if (hit) cand.push_back(gen_m(code));
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int n : cand) {
      Q c = deriv_factor(x.kind, x.deriv, n);
      if (c == 0) continue;
      WVec nxt = sp.act(x.kind, x.root, n, cur);
      if (c != 1)
        for (auto& [m, q] : nxt) q *= c;
      annihilators(i + 1, nxt, S + n);
    }
  }
};
}  // namespace

static void apply_expr(const WakimotoSpace& sp, const FieldExpr& F, int p, const WVec& v, WVec& out) {
  for (auto& [f, c] : F.terms) {
    if (f.empty()) {
      if (p == 0) wadd(out, v, c);
      continue;
    }
    TermApply t{sp, f, p, out, c, {}};
    t.annihilators(0, v, 0);
  }
}

WVec mode_apply(const WakimotoSpace& sp, const FieldExpr& F, int m, const WVec& v) {
  WVec out;
  apply_expr(sp, F, m, v, out);
  return out;
}

WVec ModeOp::apply(const WakimotoSpace& sp, int m, const WMono& v) {
  WMono key = v;
  key.push_back(m);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  WVec one{{v, Q(1)}};
  WVec out;
  apply_expr(sp, F_, m, one, out);
  cache_.emplace(std::move(key), out);
  return out;
}

WVec ModeOp::apply(const WakimotoSpace& sp, int m, const WVec& v) {
  WVec out;
  for (auto& [mono, c] : v) wadd(out, apply(sp, m, mono), c);
  return out;
}

// ---- the realization ----

FieldExpr pi_affine_nbar(const LieAlgebra& g, const LieElement& a) {
  PolyG T = T_poly(g, a);
  FieldExpr F;
  for (int al = 0; al < g.npos(); ++al)
    for (auto& [m, c] : T[g.f(al)]) {
      std::vector<Factor> f;
      for (int b = 0; b < g.npos(); ++b)
        for (int e = 0; e < m[b]; ++e) f.push_back({FK::AS, b, 0});
      f.push_back({FK::A, al, 0});
      F.add(f, -c);
    }
  return F;
}

FieldExpr pi_affine_h(const LieAlgebra& g, int i) {
  FieldExpr F;
  for (int al = 0; al < g.npos(); ++al) {
    Weight w = root_weight(g.rs(), g.rs().positive_roots[al]);
    F.add({{FK::AS, al, 0}, {FK::A, al, 0}}, w.coords[i]);
  }
  F.add({{FK::B, i, 0}}, Q(1));
  return F;
}

std::pair<FieldExpr, FieldExpr> pi_affine_e_parts(const LieAlgebra& g, int gamma) {
  int ga = g.rs().simple_index(gamma);
  PQ pq = pq_polynomials(g, ga);
  FieldExpr E0, E1;
  for (int al = 0; al < g.npos(); ++al)
    for (auto& [m, c] : pq.q[al]) {
      std::vector<Factor> f;
      for (int b = 0; b < g.npos(); ++b)
        for (int e = 0; e < m[b]; ++e) f.push_back({FK::AS, b, 0});
      f.push_back({FK::A, al, 0});
      E0.add(f, -c);
    }
  E0.add({{FK::AS, ga, 0}, {FK::B, gamma, 0}}, Q(1));
  E1.add({{FK::AS, ga, 1}}, Q(-1));
  return {E0, E1};
}

CGammaReport solve_c_gamma(const LieAlgebra& g, int gamma, const Q& k, const Weight& l, TopKind top, int alpha) {
  if (gamma < 0 || gamma >= g.rank()) throw Error("NotSimpleRoot", "simple index out of range");
  WakimotoSpace sp(g, top, alpha, l, k);
  int ga = g.rs().simple_index(gamma);
  auto [E0, E1] = pi_affine_e_parts(g, gamma);
  FieldExpr F = pi_affine_nbar(g, g.basis(g.f(ga)));
  FieldExpr H = pi_affine_h(g, gamma);
  Q kef = k * g.kappa0(g.e(ga), g.f(ga));
  std::vector<std::pair<Q, Q>> eqs;  // (L1, R - L0)
  for (auto& mono : sp.basis_upto(2, 1)) {
    WVec v{{mono, Q(1)}};
    auto comm = [&](const FieldExpr& E) {
      WVec r = mode_apply(sp, E, 1, mode_apply(sp, F, -1, v));
      wadd(r, mode_apply(sp, F, -1, mode_apply(sp, E, 1, v)), Q(-1));
      return r;
    };
    WVec L0 = comm(E0), L1 = comm(E1);
    WVec R = mode_apply(sp, H, 0, v);
    wadd(R, v, kef);
    wadd(R, L0, Q(-1));
    std::map<WMono, std::pair<Q, Q>> rows;
    for (auto& [m, c] : L1) rows[m].first = c;
    for (auto& [m, c] : R) rows[m].second = c;
    for (auto& [m, pr] : rows) eqs.push_back(pr);
  }
  CGammaReport rep;
  bool have = false;
  Q C;
  for (auto& [a, b] : eqs) {
    if (a == 0) {
      if (b != 0) throw Error("RealizationBug", "commutator mismatch independent of c_gamma");
      continue;
    }
    Q s = b / a;
    if (!have) {
      C = s;
      have = true;
    } else if (s != C) {
      throw Error("RealizationBug", "inconsistent system for c_gamma");
    }
    ++rep.equations;
  }
  if (!have) throw Error("RealizationBug", "c_gamma not determined");
  rep.c = C - (k + g.n()) * g.kappa0(g.e(ga), g.f(ga));
  return rep;
}

// ---- OPE ----

FieldExpr ope_pole(const FieldExpr& A, const FieldExpr& B, const QMat& G, int order) {
  FieldExpr out;
  for (auto& [fa, ca] : A.terms)
    for (auto& [fb, cb] : B.terms) {
      std::vector<int> match(fa.size(), -1);
      std::vector<bool> used(fb.size(), false);
      std::function<void(size_t, Q, int)> rec = [&](size_t i, Q coef, int K) {
        if (i == fa.size()) {
          if (K == 0) return;
          int l = K - 1 - order;
          if (l < 0) return;
          std::vector<Factor> ra, rb;
          for (size_t t = 0; t < fa.size(); ++t)
            if (match[t] < 0) ra.push_back(fa[t]);
          for (size_t t = 0; t < fb.size(); ++t)
            if (!used[t]) rb.push_back(fb[t]);
          if (ra.empty()) {
            if (l == 0) out.add(rb, ca * cb * coef);
            return;
          }
          // (1/l!) d^l of :ra: by Leibniz
          std::vector<int> dist(ra.size(), 0);
          std::function<void(size_t, int)> leib = [&](size_t j, int left) {
            if (j + 1 == ra.size()) {
              dist[j] = left;
              std::vector<Factor> f = rb;
              Q c = ca * cb * coef;
              for (size_t t = 0; t < ra.size(); ++t) {
                Factor x = ra[t];
                x.deriv += dist[t];
                c /= factorial(dist[t]);
                f.push_back(x);
              }
              out.add(f, c);
              return;
            }
            for (int e = 0; e <= left; ++e) {
              dist[j] = e;
              leib(j + 1, left - e);
            }
          };
          leib(0, l);
          return;
        }
        rec(i + 1, coef, K);
        const Factor& x = fa[i];
        for (size_t j = 0; j < fb.size(); ++j) {
          if (used[j]) continue;
          const Factor& y = fb[j];
          Q c;
          int ord;
          Q sgn = (x.deriv % 2) ? Q(-1) : Q(1);
          if (x.kind == FK::A && y.kind == FK::AS && x.root == y.root) {
            c = sgn * factorial(x.deriv + y.deriv);
            ord = x.deriv + y.deriv + 1;
          } else if (x.kind == FK::AS && y.kind == FK::A && x.root == y.root) {
            c = -sgn * factorial(x.deriv + y.deriv);
            ord = x.deriv + y.deriv + 1;
          } else if (x.kind == FK::B && y.kind == FK::B && G[x.root][y.root] != 0) {
            c = G[x.root][y.root] * sgn * factorial(x.deriv + y.deriv + 1);
            ord = x.deriv + y.deriv + 2;
          } else {
            continue;
          }
          used[j] = true;
          match[i] = static_cast<int>(j);
          rec(i + 1, coef * c, K + ord);
          match[i] = -1;
          used[j] = false;
        }
      };
      rec(0, Q(1), 0);
    }
  return out;
}

FieldExpr ope_simple_pole(const FieldExpr& A, const FieldExpr& B, const QMat& G) { return ope_pole(A, B, G, 0); }

FieldExpr bracket_closure(const LieAlgebra& g, int beta, const FieldTable& partial, const QMat& G) {
  const Root& r = g.rs().positive_roots[beta];
  if (r.height < 2) throw Error("DomainError", "bracket closure needs a non-simple root");
  int gamma = g.rs().simple_index(r.i);
  int rest = g.rs().index_ij(r.i + 1, r.j);
  Q N = 0;
  for (auto& [t, c] : g.sc(g.e(gamma), g.e(rest)))
    if (t == g.e(beta)) N = c;
  if (N == 0) throw Error("RealizationBug", "decomposition does not bracket to e_beta");
  FieldExpr C0 = ope_simple_pole(partial.fields[g.e(gamma)], partial.fields[g.e(rest)], G);
  FieldExpr out;
  out.add(C0, Q(1) / N);
  return out;
}

FieldTable build_fields(const LieAlgebra& g, const Q& k) {
  if (k + g.n() == 0) throw Error("DomainError", "critical level: the Heisenberg form degenerates");
  FieldTable ft;
  ft.k = k;
  ft.fields.resize(g.dim());
  Weight l = zero_weight(g.rs());
  for (int i = 0; i < g.rank(); ++i) l.coords[i] = Q(1, 3 + i);
  for (int a = 0; a < g.npos(); ++a) ft.fields[g.f(a)] = pi_affine_nbar(g, g.basis(g.f(a)));
  for (int i = 0; i < g.rank(); ++i) ft.fields[g.h(i)] = pi_affine_h(g, i);
  for (int s = 0; s < g.rank(); ++s) {
    Q c = solve_c_gamma(g, s, k, l).c;
    ft.c_gamma.push_back(c);
    int ga = g.rs().simple_index(s);
    auto [E0, E1] = pi_affine_e_parts(g, s);
    E0.add(E1, c + (k + g.n()) * g.kappa0(g.e(ga), g.f(ga)));
    ft.fields[g.e(ga)] = E0;
  }
  QMat G(g.rank(), std::vector<Q>(g.rank()));
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j) G[i][j] = (k + g.n()) * g.rs().cartan[i][j];
  for (int b = 0; b < g.npos(); ++b)
    if (!g.rs().is_simple(b)) ft.fields[g.e(b)] = bracket_closure(g, b, ft, G);
  return ft;
}

AffineRealization::AffineRealization(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp)
    : g_(g), sp_(sp) {
  if (sp.k != ft.k) throw Error("DomainError", "level mismatch between fields and module");
  for (auto& F : ft.fields) ops_.emplace_back(F);
}

WVec AffineRealization::apply(const LieElement& x, int m, const WVec& v) {
  WVec out;
  for (int b = 0; b < g_.dim(); ++b)
    if (x.c[b] != 0) wadd(out, ops_[b].apply(sp_, m, v), x.c[b]);
  return out;
}

CommReport verify_affine_comm(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp, int Dmax,
                              int topdeg, int mrange, size_t max_failures) {
  AffineRealization R(g, ft, sp);
  CommReport rep;
  auto basis = sp.basis_upto(Dmax, topdeg);
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      LieElement ab = g.bracket_basis(a, b);
      Q kab = ft.k * g.kappa0(a, b);
      for (int m = -mrange; m <= mrange; ++m)
        for (int n = -mrange; n <= mrange; ++n)
          for (auto& mono : basis) {
            WVec bv = R.apply(b, n, mono), av = R.apply(a, m, mono);
            WVec lhs = R.apply(a, m, bv);
            wadd(lhs, R.apply(b, n, av), Q(-1));
            WVec rhs = R.apply(ab, m + n, WVec{{mono, Q(1)}});
            if (m + n == 0) wadd(rhs, mono, Q(m) * kab);
            ++rep.checked;
            if (lhs != rhs && rep.failures.size() < max_failures) {
              WVec v{{mono, Q(1)}};
              rep.failures.push_back({g.cli_symbol(a), g.cli_symbol(b), m, n, sp.render(v), sp.render(lhs),
                                      sp.render(rhs)});
            }
          }
    }
  return rep;
}

ZhuReport zhu_check(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp, int topdeg) {
  AffineRealization R(g, ft, sp);
  PiTable pi(g);
  ZhuReport rep;
  FockKind fk = sp.top == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar;
  for (auto& m : monomials_upto(g.npos(), topdeg))
    for (int b = 0; b < g.dim(); ++b) {
      WVec w = R.apply(b, 0, WVec{{sp.top_mono(m), Q(1)}});
      FockVector f = act_F(g, pi[b], fock_basis(g, fk, sp.alpha, sp.lambda, m));
      std::map<Mono, Q> got;
      bool bad = false;
      for (auto& [mono, c] : w) {
        if (static_cast<int>(mono.size()) != g.npos()) bad = true;
        got[Mono(mono.begin(), mono.begin() + g.npos())] += c;
      }
      ++rep.checked;
      if (bad || got != f.terms) rep.failures.push_back(g.cli_symbol(b) + " on " + sp.render(WVec{{m, Q(1)}}));
    }
  return rep;
}

}  // namespace ffr
