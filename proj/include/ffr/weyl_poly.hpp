#pragma once
// Weyl algebra A_nbar (x) U(h), the homomorphism pi_g, and the Fock
// realizations F_nbar and F_{nbar,alpha}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffr/lie.hpp"

namespace ffr {

// key: exponents of x_alpha (first npos) then d_alpha (next npos);
// value: polynomial in h_1..h_r
struct WeylElement {
  int npos = 0, rank = 0;
  std::map<Mono, Poly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const WeylElement& o) const { return terms == o.terms; }
};

WeylElement we_zero(const LieAlgebra& g);
WeylElement we_const(const LieAlgebra& g, const Q& c);
WeylElement we_x(const LieAlgebra& g, int a);
WeylElement we_d(const LieAlgebra& g, int a);
WeylElement we_h(const LieAlgebra& g, int i);
WeylElement operator+(const WeylElement& a, const WeylElement& b);
WeylElement operator-(const WeylElement& a, const WeylElement& b);
WeylElement operator*(const WeylElement& a, const WeylElement& b);
WeylElement operator*(const Q& s, const WeylElement& a);
WeylElement commutator(const WeylElement& a, const WeylElement& b);
std::string render(const RootSystem& rs, const WeylElement& w);

enum class Kernel { TdExpm1, TExpDivExpm1, TdExpm1Minus1, Expm1DivT };
std::vector<Q> bernoulli_series(Kernel k, int order);
Kernel parse_kernel(const std::string& s);

PolyG apply_kernel(const LieAlgebra& g, Kernel k, const PolyG& v);
PolyG exp_ad_u(const LieAlgebra& g, const PolyG& v, int sign);  // e^{sign ad u} v
PolyG T_poly(const LieAlgebra& g, const LieElement& a);
std::string render_polyg(const LieAlgebra& g, const PolyG& v);
std::string render_xpoly(const RootSystem& rs, const Poly& p);

WeylElement pi_g(const LieAlgebra& g, const LieElement& a);

struct PQ {
  std::vector<Poly> p, q;  // indexed by positive root
};
PQ pq_polynomials(const LieAlgebra& g, int gamma);  // gamma a simple index

// c_alpha = e f + f e + h^2/2 for the sl2-triple of a positive root
WeylElement casimir_weyl(const LieAlgebra& g, int alpha);
Q casimir_on_highest(const RootSystem& rs, const Weight& l, int alpha);

// one image per basis element, computed once
class PiTable {
 public:
  explicit PiTable(const LieAlgebra& g);
  const WeylElement& operator[](int b) const { return img_[b]; }
  WeylElement of(const LieElement& x) const;
  const LieAlgebra& alg() const { return g_; }

 private:
  const LieAlgebra& g_;
  std::vector<WeylElement> img_;
};

std::vector<std::string> verify_pi_hom(const LieAlgebra& g);

enum class FockKind { Nbar, NbarAlpha };

struct FockVector {
  FockKind kind = FockKind::Nbar;
  int alpha = -1;
  Weight lambda;
  std::map<Mono, Q> terms;  // exponent vector over positive roots
};

FockVector fock_basis(const LieAlgebra& g, FockKind kind, int alpha, const Weight& l, const Mono& m);
FockVector act_F(const LieAlgebra& g, const WeylElement& w, const FockVector& v);
// offset of the weight of a monomial from lambda, in simple-root coordinates
std::vector<int> fock_weight_offset(const LieAlgebra& g, FockKind kind, int alpha, const Mono& m);
// monomials of total degree <= d
std::vector<Mono> monomials_upto(int nvars, int d);

struct CharEntry {
  long mult = 0;
  bool exact = true;  // false: lower bound
};
using WindowChar = std::map<std::vector<int>, CharEntry>;  // simple-root offset from lambda

// character of T_alpha M(lambda) inside the box |offset_i| <= radius;
// non-simple alpha truncates the realization degree at trunc
WindowChar twist_character(const LieAlgebra& g, int alpha, int radius, int trunc);
// same set of weights read off from the h-spectrum of F_{nbar,alpha}
WindowChar realization_spectrum(const LieAlgebra& g, const PiTable& pi, const Weight& l, int alpha,
                                int radius, int trunc);

struct GammaMult {
  std::map<Q, int> counts;  // eigenvalue -> multiplicity
  int dim = 0;
  int irrational = 0;       // eigenvalues outside Q
  bool leak = false;        // c_alpha left the truncated slice
};
GammaMult gamma_alpha_multiplicity(const LieAlgebra& g, const PiTable& pi, const Weight& l, int alpha,
                                   const std::vector<int>& offset, int D);

}  // namespace ffr
