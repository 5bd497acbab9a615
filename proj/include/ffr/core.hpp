#pragma once
// Exact rationals, error type and sparse commutative polynomials.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffr {

using Q = mpq_class;

struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

std::string qstr(const Q& q);
Q parse_q(const std::string& s);
inline bool is_int(const Q& q) { return q.get_den() == 1; }
long to_long(const Q& q);
Q factorial(int n);
Q binom(long n, int k);

// exponent vector, fixed length inside one context
using Mono = std::vector<int>;
using Poly = std::map<Mono, Q>;

void add_term(Poly& p, const Mono& m, const Q& c);
void add_to(Poly& p, const Poly& o, const Q& s = 1);
Poly mul(const Poly& a, const Poly& b);
Poly scaled(const Poly& a, const Q& s);
Poly poly_const(int nvars, const Q& c);
Poly poly_var(int nvars, int i);
int total_degree(const Mono& m);
int poly_degree(const Poly& p);
Q poly_eval(const Poly& p, const std::vector<Q>& at);

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace ffr
