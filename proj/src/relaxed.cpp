#include "ffr/relaxed.hpp"

#include <algorithm>
#include <functional>

#include "ffr/linalg.hpp"

namespace ffr {

RelaxedVerma::RelaxedVerma(const LieAlgebra& g, TopKind top, int alpha, const Weight& l, const Q& k)
    : g_(g), top_(top), alpha_(alpha), lambda_(l), k_(k), pi_(std::make_unique<PiTable>(g)) {
  if (top == TopKind::GT && (alpha < 0 || alpha >= g.npos())) throw Error("DomainError", "GT top needs a positive root");
  if (static_cast<int>(l.coords.size()) != g.rank()) throw Error("DimensionError", "weight rank");
}

PVec RelaxedVerma::top_act(int b, const PMono& v) const {
  FockKind fk = top_ == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar;
  FockVector r = act_F(g_, (*pi_)[b], fock_basis(g_, fk, alpha_, lambda_, v));
  PVec out;
  for (auto& [m, c] : r.terms) wadd(out, m, c);
  return out;
}

PVec RelaxedVerma::act(int b, int m, const PMono& v) {
  std::vector<int> key = v;
  key.push_back(b);
  key.push_back(m);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  int N = g_.npos();
  PVec out;
  if (static_cast<int>(v.size()) == N) {
    if (m < 0) {
      PMono r = v;
      r.push_back(pbw_code(-m, b));
      wadd(out, r, Q(1));
    } else if (m == 0) {
      out = top_act(b, v);
    }
  } else {
    int x1 = v[N];
    if (m < 0 && pbw_code(-m, b) <= x1) {
      PMono r = v;
      r.insert(r.begin() + N, pbw_code(-m, b));
      wadd(out, r, Q(1));
    } else {
      // a_m X1 rest = X1 (a_m rest) + [a_m, X1] rest
      int n1 = pbw_n(x1), c = pbw_basis(x1);
      PMono rest = v;
      rest.erase(rest.begin() + N);
      PVec t = act(b, m, rest);
      wadd(out, act(c, -n1, t));
      for (auto& [t2, coef] : g_.sc(b, c)) wadd(out, act(t2, m - n1, rest), Q(coef));
      if (m == n1) wadd(out, rest, Q(m) * k_ * g_.kappa0(b, c));
    }
  }
  cache_.emplace(std::move(key), out);
  return out;
}

PVec RelaxedVerma::act(int b, int m, const PVec& v) {
  PVec out;
  for (auto& [mono, c] : v) wadd(out, act(b, m, mono), c);
  return out;
}

PVec RelaxedVerma::act(const LieElement& x, int m, const PVec& v) {
  PVec out;
  for (int b = 0; b < g_.dim(); ++b)
    if (x.c[b] != 0) wadd(out, act(b, m, v), x.c[b]);
  return out;
}

int RelaxedVerma::energy(const PMono& v) const {
  int e = 0;
  for (size_t i = g_.npos(); i < v.size(); ++i) e += pbw_n(v[i]);
  return e;
}

int RelaxedVerma::top_degree(const PMono& v) const {
  int d = 0;
  for (int i = 0; i < g_.npos(); ++i) d += v[i];
  return d;
}

std::vector<int> RelaxedVerma::weight_offset(const PMono& v) const {
  int N = g_.npos();
  Mono t(v.begin(), v.begin() + N);
  auto off = fock_weight_offset(g_, top_ == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar, alpha_, t);
  for (size_t i = N; i < v.size(); ++i) {
    auto w = g_.root_coords_of(pbw_basis(v[i]));
    for (int j = 0; j < g_.rank(); ++j) off[j] += w[j];
  }
  return off;
}

std::vector<PMono> RelaxedVerma::basis_energy(int e, int topdeg) const {
  std::vector<int> codes;
  for (int n = 1; n <= e; ++n)
    for (int b = 0; b < g_.dim(); ++b) codes.push_back(pbw_code(n, b));
  std::sort(codes.begin(), codes.end());
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (size_t i = start; i < codes.size(); ++i) {
      int n = pbw_n(codes[i]);
      if (n > left) continue;
      cur.push_back(codes[i]);
      rec(i, left - n);
      cur.pop_back();
    }
  };
  rec(0, e);
  std::vector<PMono> out;
  for (auto& t : monomials_upto(g_.npos(), topdeg))
    for (auto& p : parts) {
      PMono v = t;
      v.insert(v.end(), p.begin(), p.end());
      out.push_back(v);
    }
  return out;
}

std::vector<PMono> RelaxedVerma::basis_upto(int d, int topdeg) const {
  std::vector<PMono> out;
  for (int e = 0; e <= d; ++e) {
    auto b = basis_energy(e, topdeg);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string RelaxedVerma::render(const PVec& v) const {
  if (v.empty()) return "0";
  const auto& rs = g_.rs();
  int N = g_.npos();
  std::string s;
  for (auto& [m, c] : v) {
    std::string body;
    for (size_t i = N; i < m.size(); ++i) {
      std::string lab = g_.label(pbw_basis(m[i]));
      lab.pop_back();  // trailing brace
      body += (body.empty() ? "" : " ") + lab + ",-" + std::to_string(pbw_n(m[i])) + "}";
    }
    for (int a = 0; a < N; ++a) {
      if (!m[a]) continue;
      bool special = top_ == TopKind::GT && a == alpha_;
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

CommReport verify_pbw_comm(RelaxedVerma& M, int Dmax, int topdeg, int mrange, size_t max_failures) {
  const LieAlgebra& g = M.alg();
  CommReport rep;
  auto basis = M.basis_upto(Dmax, topdeg);
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      LieElement ab = g.bracket_basis(a, b);
      Q kab = M.level() * g.kappa0(a, b);
      for (int m = -mrange; m <= mrange; ++m)
        for (int n = -mrange; n <= mrange; ++n)
          for (auto& mono : basis) {
            PVec lhs = M.act(a, m, M.act(b, n, mono));
            wadd(lhs, M.act(b, n, M.act(a, m, mono)), Q(-1));
            PVec rhs = M.act(ab, m + n, PVec{{mono, Q(1)}});
            if (m + n == 0) wadd(rhs, mono, Q(m) * kab);
            ++rep.checked;
            if (lhs != rhs && rep.failures.size() < max_failures)
              rep.failures.push_back({g.cli_symbol(a), g.cli_symbol(b), m, n, M.render(PVec{{mono, Q(1)}}),
                                      M.render(lhs), M.render(rhs)});
          }
    }
  return rep;
}

// ---- characters ----

namespace {
using Series = std::map<std::vector<int>, long>;  // (offset..., energy)

// prod over (n, basis) of 1/(1 - q^n e^{wt}) up to energy D
Series free_part(const LieAlgebra& g, int D) {
  int r = g.rank();
  Series s;
  s[std::vector<int>(r + 1, 0)] = 1;
  for (int n = 1; n <= D; ++n)
    for (int b = 0; b < g.dim(); ++b) {
      auto w = g.root_coords_of(b);
      // multiply by the geometric series in q^n e^w
      Series out;
      for (auto& [key, c] : s)
        for (int j = 0; key[r] + j * n <= D; ++j) {
          auto k2 = key;
          for (int i = 0; i < r; ++i) k2[i] += j * w[i];
          k2[r] += j * n;
          out[k2] += c;
        }
      s = std::move(out);
    }
  return s;
}

std::vector<int> offset_from_h(const LieAlgebra& g, const Weight& l, const std::vector<Q>& ev) {
  // ev_i = lambda_i + sum_j off_j A_ji
  const auto& A = g.rs().cartan;
  int r = g.rank();
  QMat At(r, std::vector<Q>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) At[i][j] = A[j][i];
  QMat inv = inverse(At);
  std::vector<int> off(r);
  for (int j = 0; j < r; ++j) {
    Q s = 0;
    for (int i = 0; i < r; ++i) s += inv[j][i] * (ev[i] - l.coords[i]);
    if (!is_int(s)) throw Error("RealizationBug", "non-integral weight offset");
    off[j] = static_cast<int>(to_long(s));
  }
  return off;
}
}  // namespace

Char3 character_product(const LieAlgebra& g, TopKind top, int alpha, int D, int T) {
  int r = g.rank();
  Series fp = free_part(g, D);
  FockKind fk = top == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar;
  Char3 out;
  for (auto& m : monomials_upto(g.npos(), T)) {
    auto off = fock_weight_offset(g, fk, alpha, m);
    int deg = 0;
    for (int x : m) deg += x;
    for (auto& [key, c] : fp) {
      std::vector<int> k3(r + 2);
      for (int i = 0; i < r; ++i) k3[i] = off[i] + key[i];
      k3[r] = key[r];
      k3[r + 1] = deg;
      out[k3] += c;
    }
  }
  return out;
}

Char3 character_pbw(RelaxedVerma& M, int D, int T) {
  const LieAlgebra& g = M.alg();
  int r = g.rank();
  Char3 out;
  for (auto& v : M.basis_upto(D, T)) {
    std::vector<Q> ev(r);
    for (int i = 0; i < r; ++i) {
      PVec hv = M.act(g.h(i), 0, v);
      if (hv.size() > 1 || (hv.size() == 1 && hv.begin()->first != v))
        throw Error("RealizationBug", "PBW monomial is not an h-eigenvector");
      ev[i] = hv.empty() ? Q(0) : hv.begin()->second;
    }
    auto key = offset_from_h(g, M.lambda(), ev);
    key.push_back(M.energy(v));
    key.push_back(M.top_degree(v));
    out[key] += 1;
  }
  return out;
}

Char3 character_wakimoto(AffineRealization& R, int D, int T) {
  const WakimotoSpace& sp = R.space();
  const LieAlgebra& g = *sp.g;
  int r = g.rank();
  Char3 out;
  for (auto& v : sp.basis_upto(D, T)) {
    std::vector<Q> ev(r);
    for (int i = 0; i < r; ++i) {
      WVec hv = R.apply(g.h(i), 0, v);
      if (hv.size() > 1 || (hv.size() == 1 && hv.begin()->first != v))
        throw Error("RealizationBug", "Wakimoto monomial is not an h-eigenvector");
      ev[i] = hv.empty() ? Q(0) : hv.begin()->second;
    }
    auto key = offset_from_h(g, sp.lambda, ev);
    key.push_back(energy(g, v));
    int deg = 0;
    for (int a = 0; a < g.npos(); ++a) deg += v[a];
    key.push_back(deg);
    out[key] += 1;
  }
  return out;
}

Char3 twisted_prediction(const LieAlgebra& g, int alpha, int D, int T) {
  int r = g.rank();
  const auto& ac = g.rs().positive_roots[alpha].coeffs;
  Char3 base = character_product(g, TopKind::Verma, -1, D, T);
  // (1 - s e^{-alpha})
  Char3 step;
  for (auto& [key, c] : base) {
    step[key] += c;
    if (key[r + 1] + 1 <= T) {
      auto k2 = key;
      for (int i = 0; i < r; ++i) k2[i] -= ac[i];
      k2[r + 1] += 1;
      step[k2] -= c;
    }
  }
  Char3 out;
  for (auto& [key, c] : step) {
    if (c == 0) continue;
    for (int j = 1; key[r + 1] + j - 1 <= T; ++j) {
      auto k2 = key;
      for (int i = 0; i < r; ++i) k2[i] += j * ac[i];
      k2[r + 1] += j - 1;
      out[k2] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Char2 project(const Char3& c, int radius) {
  Char2 out;
  for (auto& [key, n] : c) {
    bool in = true;
    for (size_t i = 0; i + 2 < key.size(); ++i)
      if (key[i] < -radius || key[i] > radius) in = false;
    if (!in) continue;
    out[std::vector<int>(key.begin(), key.end() - 1)] += n;
  }
  return out;
}

int complete_topdeg(const LieAlgebra& g, TopKind top, int radius, int D) {
  if (top == TopKind::GT && g.rank() > 1) throw Error("DomainError", "GT weight spaces are infinite beyond sl2");
  int ht = g.rs().positive_roots[g.rs().theta_index()].height;
  return g.rank() * radius + D * ht;
}

TopReport top_component_check(RelaxedVerma& M, int topdeg) {
  const LieAlgebra& g = M.alg();
  PiTable pi(g);
  FockKind fk = M.top() == TopKind::GT ? FockKind::NbarAlpha : FockKind::Nbar;
  TopReport rep;
  for (auto& m : monomials_upto(g.npos(), topdeg))
    for (int b = 0; b < g.dim(); ++b) {
      PVec got = M.act(b, 0, m);
      FockVector f = act_F(g, pi[b], fock_basis(g, fk, M.alpha(), M.lambda(), m));
      PVec want;
      for (auto& [mm, c] : f.terms) wadd(want, mm, c);
      ++rep.checked;
      if (got != want) rep.failures.push_back(g.cli_symbol(b) + " on " + M.render(PVec{{m, Q(1)}}));
    }
  return rep;
}

namespace {
// monomials of energy e grouped by weight offset, with offset height >= -H
std::map<std::vector<int>, std::vector<PMono>> cells(RelaxedVerma& M, int e, int H) {
  const LieAlgebra& g = M.alg();
  int ht = g.rs().positive_roots[g.rs().theta_index()].height;
  int T = H + e * ht;
  std::map<std::vector<int>, std::vector<PMono>> out;
  for (auto& v : M.basis_energy(e, T)) {
    auto off = M.weight_offset(v);
    int h = 0;
    for (int x : off) h += x;
    if (h >= -H) out[off].push_back(v);
  }
  return out;
}
}  // namespace

std::vector<SingularVector> find_singular_vectors(RelaxedVerma& M, int D, int H) {
  if (M.top() != TopKind::Verma) throw Error("DomainError", "singular-vector search needs a Verma top");
  const LieAlgebra& g = M.alg();
  std::vector<int> raising;
  for (int b = 0; b < g.dim(); ++b) raising.push_back(b);
  std::vector<SingularVector> out;
  for (int e = 1; e <= D; ++e)
    for (auto& [off, basis] : cells(M, e, H)) {
      // rows: (operator, target monomial); columns: basis
      std::map<std::pair<int, PMono>, std::vector<Q>> rows;
      for (size_t j = 0; j < basis.size(); ++j) {
        auto put = [&](int op, const PVec& img) {
          for (auto& [m, c] : img) {
            auto& row = rows[{op, m}];
            if (row.empty()) row.assign(basis.size(), Q(0));
            row[j] += c;
          }
        };
        for (int b : raising) put(b, M.act(b, 1, basis[j]));
        for (int s = 0; s < g.rank(); ++s) {
          int ga = g.e(g.rs().simple_index(s));
          put(g.dim() + s, M.act(ga, 0, basis[j]));
        }
      }
      QMatrix A;
      for (auto& [k, row] : rows) A.push_back(row);
      for (auto& vec : nullspace(A, static_cast<int>(basis.size()))) {
        SingularVector sv{off, e, {}};
        for (size_t j = 0; j < basis.size(); ++j) wadd(sv.v, basis[j], vec[j]);
        out.push_back(std::move(sv));
      }
    }
  return out;
}

Char2 coinvariants_character(RelaxedVerma& M, int alpha, int D, int radius) {
  const LieAlgebra& g = M.alg();
  int T = complete_topdeg(g, M.top(), radius + 1, D);
  const auto& ac = g.rs().positive_roots[alpha].coeffs;
  int fa = g.f(alpha);
  Char2 out;
  for (int e = 0; e <= D; ++e) {
    std::map<std::vector<int>, std::vector<PMono>> byw;
    for (auto& v : M.basis_energy(e, T)) byw[M.weight_offset(v)].push_back(v);
    for (auto& [off, basis] : byw) {
      bool in = true;
      for (int x : off)
        if (x < -radius || x > radius) in = false;
      if (!in) continue;
      auto src = off;
      for (int i = 0; i < g.rank(); ++i) src[i] += ac[i];
      std::map<PMono, size_t> idx;
      for (size_t j = 0; j < basis.size(); ++j) idx[basis[j]] = j;
      QMatrix A;
      auto it = byw.find(src);
      if (it != byw.end())
        for (auto& v : it->second) {
          std::vector<Q> col(basis.size(), Q(0));
          for (auto& [m, c] : M.act(fa, 0, v)) {
            auto f = idx.find(m);
            if (f == idx.end()) throw Error("RealizationBug", "f_alpha left the weight cell");
            col[f->second] += c;
          }
          A.push_back(col);
        }
      long d = static_cast<long>(basis.size()) - (A.empty() ? 0 : rank_of(A));
      if (d) {
        auto key = off;
        key.push_back(e);
        out[key] = d;
      }
    }
  }
  return out;
}

}  // namespace ffr
