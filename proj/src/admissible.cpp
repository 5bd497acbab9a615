#include "ffr/admissible.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ffr {

AdmissibleResult admissible_check(const Q& k, int n) {
  if (n < 2) throw Error("InvalidRank", "n must be at least 2");
  Q s = k + n;
  AdmissibleResult r;
  if (s <= 0) {
    r.reason = "nonpositive";
    return r;
  }
  long p = s.get_num().get_si(), q = s.get_den().get_si();
  if (p < n) {
    r.reason = "p_too_small";
    return r;
  }
  r.level = AdmissibleLevel{n, p, q, k};
  return r;
}

AdmissibleLevel admissible_level(int n, long p, long q) {
  if (q < 1 || p < 1) throw Error("NotAdmissible", "nonpositive");
  if (std::gcd(p, q) != 1) throw Error("NotAdmissible", "p and q not coprime");
  auto r = admissible_check(Q(p, q) - n, n);
  if (!r.level) throw Error("NotAdmissible", r.reason);
  return *r.level;
}

std::vector<Weight> pr_k_integral(const AdmissibleLevel& lvl) {
  RootSystem rs = build_root_system(lvl.n);
  int r = rs.rank;
  long bound = lvl.p - lvl.n;
  std::vector<Weight> out;
  std::vector<long> c(r, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == r) {
      Weight w = zero_weight(rs);
      for (int j = 0; j < r; ++j) w.coords[j] = c[j];
      out.push_back(w);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
    c[i] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

AffineWeight t_translation(const RootSystem& rs, const Weight& mu, const AffineWeight& g) {
  AffineWeight r = g;
  r.fin = g.fin + g.level * mu;
  r.delta = g.delta - (form_hstar(rs, mu, mu) / 2 * g.level + form_hstar(rs, g.fin, mu));
  return r;
}

static Weight eta_weight(const RootSystem& rs, const std::vector<long>& eta) {
  if (static_cast<int>(eta.size()) != rs.rank) throw Error("DimensionError", "coweight rank");
  Weight w = zero_weight(rs);
  for (int i = 0; i < rs.rank; ++i) w.coords[i] = eta[i];
  return w;
}

static std::vector<long> weight_eta(const Weight& w) {
  std::vector<long> e;
  for (auto& c : w.coords) e.push_back(to_long(c));
  return e;
}

AffineWeylElement affine_compose(const RootSystem& rs, const AffineWeylElement& a, const AffineWeylElement& b) {
  // w1 t_{-e1} w2 t_{-e2} = w1 w2 t_{-(w2^{-1} e1 + e2)}
  Weight e1 = weyl_act(rs, inverse(b.w), eta_weight(rs, a.eta));
  Weight s = e1 + eta_weight(rs, b.eta);
  return {compose(a.w, b.w), weight_eta(s)};
}

AffineWeight affine_act(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& g) {
  AffineWeight r = t_translation(rs, Q(-1) * eta_weight(rs, y.eta), g);
  r.fin = weyl_act(rs, y.w, r.fin);
  return r;
}

AffineWeight affine_dot(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& g) {
  AffineWeight rh{rho(rs), Q(rs.n), Q(0)};
  AffineWeight s{g.fin + rh.fin, g.level + rh.level, g.delta};
  AffineWeight r = affine_act(rs, y, s);
  r.fin = r.fin - rh.fin;
  r.level -= rh.level;
  return r;
}

long eta_pair(const RootSystem& rs, const std::vector<long>& eta, int a) {
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) s += eta[i] * rs.positive_roots[a].coeffs[i];
  return s;
}

bool y_is_admissible(const RootSystem& rs, const AffineWeylElement& y, long q) {
  for (int a = 0; a < rs.npos(); ++a) {
    long e = eta_pair(rs, y.eta, a);
    bool pos = weyl_act_root(rs, y.w, a).second > 0;
    if (pos ? (e < 0 || e > q - 1) : (e < 1 || e > q)) return false;
  }
  return true;
}

// real root eps_i - eps_j + m delta, positive iff m > 0 or (m == 0 and i < j)
static bool real_root_positive(int i, int j, long m) { return m > 0 || (m == 0 && i < j); }

bool y_is_admissible_roots(const RootSystem& rs, const AffineWeylElement& y, long q) {
  auto image = [&](int i, int j, long m) {
    // t_{-eta}(beta + m delta) = beta + (m + (beta, eta)) delta
    long be = (i < j ? 1 : -1) * eta_pair(rs, y.eta, rs.index_ij(std::min(i, j), std::max(i, j)));
    return real_root_positive(y.w.perm[i], y.w.perm[j], m + be);
  };
  for (int s = 0; s + 1 < rs.n; ++s)
    if (!image(s, s + 1, 0)) return false;
  return image(rs.n - 1, 0, q);
}

Weight project_dot(const RootSystem& rs, const AdmissibleLevel& lvl, const AffineWeylElement& y, const Weight& l) {
  return affine_dot(rs, y, AffineWeight{l, lvl.k, Q(0)}).fin;
}

static std::vector<std::vector<long>> dominant_etas(int r, long bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> c(r, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == r) {
      out.push_back(c);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
    c[i] = 0;
  };
  rec(0, bound);
  return out;
}

std::vector<PrEntry> pr_k_bar(const AdmissibleLevel& lvl, long theta_bound) {
  RootSystem rs = build_root_system(lvl.n);
  if (theta_bound < 0) theta_bound = lvl.q - 1;
  auto ints = pr_k_integral(lvl);
  std::map<Weight, AffineWeylElement> seen;
  for (auto& eta : dominant_etas(rs.rank, theta_bound))
    for (auto& w : weyl_group(rs)) {
      AffineWeylElement y{w, eta};
      if (!y_is_admissible(rs, y, lvl.q)) continue;
      for (auto& l : ints) seen.emplace(project_dot(rs, lvl, y, l), y);
    }
  std::vector<PrEntry> out;
  for (auto& [l, y] : seen) out.push_back({l, y});
  return out;
}

std::vector<Weight> pr_k_bar_weights(const AdmissibleLevel& lvl) {
  std::vector<Weight> out;
  for (auto& e : pr_k_bar(lvl)) out.push_back(e.lambda);
  return out;
}

std::vector<Weight> pr_k_bar_y(const AdmissibleLevel& lvl, const AffineWeylElement& y) {
  RootSystem rs = build_root_system(lvl.n);
  std::set<Weight> s;
  for (auto& l : pr_k_integral(lvl)) s.insert(project_dot(rs, lvl, y, l));
  return {s.begin(), s.end()};
}

std::vector<std::vector<Weight>> pr_k_bar_classes(const AdmissibleLevel& lvl) {
  RootSystem rs = build_root_system(lvl.n);
  auto all = pr_k_bar_weights(lvl);
  std::set<Weight> done;
  std::vector<std::vector<Weight>> out;
  std::set<Weight> in(all.begin(), all.end());
  for (auto& l : all) {
    if (done.count(l)) continue;
    std::vector<Weight> cls;
    for (auto& w : weyl_group(rs)) {
      Weight m = dot_action(rs, w, l);
      if (in.count(m) && !done.count(m)) {
        done.insert(m);
        cls.push_back(m);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

bool regular_dominant_affine(const RootSystem& rs, const AdmissibleLevel& lvl, const Weight& l, int mmax) {
  Weight lr = l + rho(rs);
  Q kn = Q(lvl.p, lvl.q);
  for (int a = 0; a < rs.npos(); ++a) {
    Q base = pairing(rs, lr, rs.positive_roots[a]);
    for (int m = 0; m < mmax; ++m) {
      for (int s : {1, -1}) {
        if (s < 0 && m == 0) continue;
        Q v = s * base + m * kn;
        if (is_int(v) && v <= 0) return false;
      }
    }
  }
  return true;
}

bool in_levi(const RootSystem& rs, const std::vector<int>& sigma, int a) {
  const Root& r = rs.positive_roots[a];
  for (int s = r.i; s < r.j; ++s)
    if (std::find(sigma.begin(), sigma.end(), s + 1) == sigma.end()) return false;
  return true;
}

std::vector<int> nilradical_roots(const RootSystem& rs, const std::vector<int>& sigma) {
  std::vector<int> out;
  for (int a = 0; a < rs.npos(); ++a)
    if (!in_levi(rs, sigma, a)) out.push_back(a);
  return out;
}

static void check_sigma(const RootSystem& rs, const std::vector<int>& sigma) {
  for (int s : sigma)
    if (s < 1 || s > rs.rank) throw Error("DomainError", "Sigma index out of range");
}

std::vector<Weight> omega_theorem(const std::vector<int>& sigma, const AdmissibleLevel& lvl) {
  RootSystem rs = build_root_system(lvl.n);
  check_sigma(rs, sigma);
  std::set<Weight> out;
  int th = rs.theta_index();
  for (auto& eta : dominant_etas(rs.rank, lvl.q - 1))
    for (auto& w : weyl_group(rs)) {
      if (weyl_act_root(rs, w, th).second < 0) continue;
      bool ok = true;
      std::set<int> image;  // w(Delta_0^eta) as positive-root indices, both signs collapse
      for (int a = 0; a < rs.npos() && ok; ++a) {
        if (eta_pair(rs, eta, a) != 0) continue;
        auto [b, sg] = weyl_act_root(rs, w, a);
        if (sg < 0) ok = false;  // Delta_0^eta cap Delta_+ inside w^{-1}(Delta_+)
        image.insert(b);
      }
      if (!ok) continue;
      std::set<int> levi;
      for (int a = 0; a < rs.npos(); ++a)
        if (in_levi(rs, sigma, a)) levi.insert(a);
      if (image != levi) continue;
      for (auto& l : pr_k_bar_y(lvl, AffineWeylElement{w, eta})) out.insert(l);
    }
  return {out.begin(), out.end()};
}

std::vector<Weight> omega_direct(const std::vector<int>& sigma, const AdmissibleLevel& lvl) {
  RootSystem rs = build_root_system(lvl.n);
  check_sigma(rs, sigma);
  std::vector<int> s0;
  for (int s : sigma) s0.push_back(s - 1);
  auto nil = nilradical_roots(rs, sigma);
  std::vector<Weight> out;
  for (auto& l : pr_k_bar_weights(lvl)) {
    if (!is_dominant_for(rs, s0, l)) continue;
    Weight lr = l + rho(rs);
    bool ok = true;
    for (int a : nil) {
      Q v = pairing(rs, lr, rs.positive_roots[a]);
      if (is_int(v) && v > 0) ok = false;
    }
    if (ok) out.push_back(l);
  }
  return out;
}

WeylGroupElement w_cyclic(const RootSystem& rs, int j) {
  WeylGroupElement w;
  for (int i = 0; i < rs.n; ++i) w.perm.push_back((i + j) % rs.n);
  return w;
}

// ---- partitions ----

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x >= j) ++c;
    t.push_back(c);
  }
  return t;
}

long orbit_dim(const Partition& p) {
  long n = std::accumulate(p.begin(), p.end(), 0L);
  long s = 0;
  for (int x : transpose(p)) s += static_cast<long>(x) * x;
  return n * n - s;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  long na = std::accumulate(a.begin(), a.end(), 0L), nb = std::accumulate(b.begin(), b.end(), 0L);
  if (na != nb) throw Error("SizeMismatch", "partitions of different n");
  long sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Partition levi_blocks(const std::vector<int>& sigma, int n) {
  Partition blocks;
  int cur = 1;
  for (int i = 1; i < n; ++i) {
    if (std::find(sigma.begin(), sigma.end(), i) != sigma.end()) {
      ++cur;
    } else {
      blocks.push_back(cur);
      cur = 1;
    }
  }
  blocks.push_back(cur);
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

Partition richardson(const std::vector<int>& sigma, int n) {
  for (int s : sigma)
    if (s < 1 || s >= n) throw Error("DomainError", "Sigma index out of range");
  return transpose(levi_blocks(sigma, n));
}

Partition orbit_q(int n, long q) {
  if (q < 1) throw Error("DomainError", "q must be positive");
  Partition p;
  long r = n / q, s = n % q;
  for (long i = 0; i < r; ++i) p.push_back(static_cast<int>(q));
  if (s) p.push_back(static_cast<int>(s));
  return p;
}

std::vector<std::string> orbit_labels(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  std::vector<std::string> out;
  if (p == Partition(n, 1)) out.push_back("zero");
  Partition mn(n - 1, 1);
  mn[0] = 2;
  if (n >= 2 && p == mn) out.push_back("min");
  Partition sub{n - 1, 1};
  if (n >= 2 && p == sub) out.push_back("subreg");
  if (p == Partition{n}) out.push_back("reg");
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::vector<OrbitRow> orbit_table(int n) {
  if (n < 2) throw Error("InvalidRank", "n must be at least 2");
  auto ps = partitions(n);
  std::vector<OrbitRow> rows;
  for (auto& p : ps) {
    OrbitRow r{p, orbit_dim(p), orbit_labels(p), {}};
    for (auto& q : ps) {
      if (q == p || !dominance_leq(q, p)) continue;
      bool cover = true;
      for (auto& m : ps)
        if (m != p && m != q && dominance_leq(q, m) && dominance_leq(m, p)) cover = false;
      if (cover) r.covers.push_back(q);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ffr
