#include "ffr/core.hpp"

#include <numeric>

namespace ffr {

std::string qstr(const Q& q) { return q.get_str(); }

Q parse_q(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw Error("ParseError", "empty rational");
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  if (i == t.size()) throw Error("ParseError", "bad rational '" + s + "'");
  for (size_t j = i; j < t.size(); ++j) {
    if (t[j] == '/') {
      if (slash || j == i || j + 1 == t.size())
        throw Error("ParseError", "bad rational '" + s + "'");
      slash = true;
    } else if (t[j] < '0' || t[j] > '9') {
      throw Error("ParseError", "bad rational '" + s + "'");
    }
  }
  if (t[0] == '+') t = t.substr(1);
  Q q;
  try {
    q = Q(t);
  } catch (...) {
    throw Error("ParseError", "bad rational '" + s + "'");
  }
  if (q.get_den() == 0) throw Error("ParseError", "zero denominator");
  q.canonicalize();
  return q;
}

long to_long(const Q& q) {
  if (!is_int(q)) throw Error("DomainError", "not an integer: " + qstr(q));
  return q.get_num().get_si();
}

Q factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Q(r);
}

Q binom(long n, int k) {
  if (k < 0) return 0;
  Q r = 1;
  for (int i = 0; i < k; ++i) r = r * Q(n - i) / Q(i + 1);
  return r;
}

void add_term(Poly& p, const Mono& m, const Q& c) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

void add_to(Poly& p, const Poly& o, const Q& s) {
  if (s == 0) return;
  for (auto& [m, c] : o) add_term(p, m, c * s);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(r, m, ca * cb);
    }
  return r;
}

Poly scaled(const Poly& a, const Q& s) {
  Poly r;
  if (s == 0) return r;
  for (auto& [m, c] : a) r.emplace(m, c * s);
  return r;
}

Poly poly_const(int nvars, const Q& c) {
  Poly p;
  add_term(p, Mono(nvars, 0), c);
  return p;
}

Poly poly_var(int nvars, int i) {
  Mono m(nvars, 0);
  m[i] = 1;
  return Poly{{m, Q(1)}};
}

int total_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

int poly_degree(const Poly& p) {
  int d = -1;
  for (auto& [m, c] : p) d = std::max(d, total_degree(m));
  return d;
}

Q poly_eval(const Poly& p, const std::vector<Q>& at) {
  Q s = 0;
  for (auto& [m, c] : p) {
    Q t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= at[i];
    s += t;
  }
  return s;
}

}  // namespace ffr
