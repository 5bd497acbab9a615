#pragma once
// Mode-level free fields and the affine realization pi_{kappa,g}.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffr/weyl_poly.hpp"

namespace ffr {

enum class FK : int { A = 0, AS = 1, B = 2 };

struct Factor {
  FK kind;
  int root;   // positive root index (A, AS) or simple index (B)
  int deriv;  // order of d/dz
  auto operator<=>(const Factor&) const = default;
};

// sum of coefficient * :prod factors(z):, factor lists kept sorted
struct FieldExpr {
  std::map<std::vector<Factor>, Q> terms;

  void add(std::vector<Factor> f, const Q& c);
  void add(const FieldExpr& o, const Q& s = 1);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const FieldExpr& o) const { return terms == o.terms; }
};

std::string render(const LieAlgebra& g, const FieldExpr& F);
int conformal_weight(const std::vector<Factor>& f);

enum class TopKind { Verma, GT };

// generators of the Wakimoto module above the top component
enum class Gen : int { P = 0, X = 1, Y = 2 };  // a_{-m}, a*_{-m}, b_{-m}
inline int gen_code(Gen k, int root, int m) { return m * 256 + static_cast<int>(k) * 64 + root; }
inline int gen_m(int code) { return code / 256; }
inline Gen gen_kind(int code) { return static_cast<Gen>((code % 256) / 64); }
inline int gen_root(int code) { return code % 64; }

// key: npos top exponents followed by sorted generator codes
using WMono = std::vector<int>;
using WVec = std::map<WMono, Q>;

void wadd(WVec& v, const WMono& m, const Q& c);
void wadd(WVec& v, const WVec& o, const Q& s = 1);
int energy(const LieAlgebra& g, const WMono& m);

struct WakimotoSpace {
  const LieAlgebra* g = nullptr;
  TopKind top = TopKind::Verma;
  int alpha = -1;
  Weight lambda;
  Q k;
  QMat G;  // (kappa - kappa_c) on h in the basis h_1..h_r

  WakimotoSpace(const LieAlgebra& alg, TopKind t, int a, const Weight& l, const Q& level);
  WMono vacuum() const;
  WMono top_mono(const Mono& m) const;
  // elementary mode action on a monomial
  WVec act(FK kind, int root, int n, const WMono& m) const;
  WVec act(FK kind, int root, int n, const WVec& v) const;
  std::string render(const WVec& v) const;
  // monomials of energy exactly e / at most d with top degree <= t
  std::vector<WMono> basis_energy(int e, int topdeg) const;
  std::vector<WMono> basis_upto(int d, int topdeg) const;
  std::vector<int> weight_offset(const WMono& m) const;  // simple-root offset from lambda
};

WVec heisenberg_act(const WakimotoSpace& sp, int gamma, int n, const WVec& v);

// F_m v with the vacuum normal ordering; memoised per monomial
class ModeOp {
 public:
  ModeOp() = default;
  explicit ModeOp(FieldExpr F) : F_(std::move(F)) {}
  const FieldExpr& expr() const { return F_; }
  WVec apply(const WakimotoSpace& sp, int m, const WVec& v);
  WVec apply(const WakimotoSpace& sp, int m, const WMono& v);
  size_t cache_size() const { return cache_.size(); }

 private:
  FieldExpr F_;
  std::unordered_map<WMono, WVec, VecHash> cache_;
};

WVec mode_apply(const WakimotoSpace& sp, const FieldExpr& F, int m, const WVec& v);

// pieces of the realization
FieldExpr pi_affine_nbar(const LieAlgebra& g, const LieElement& a);
FieldExpr pi_affine_h(const LieAlgebra& g, int i);
// e_gamma = E0 + C * E1 with C = c_gamma + (k + h^vee) kappa0(e, f)
std::pair<FieldExpr, FieldExpr> pi_affine_e_parts(const LieAlgebra& g, int gamma);

struct CGammaReport {
  Q c;
  int equations = 0;
};
// solves the [e_1, f_{-1}] relation on the degree <= 2 slice
CGammaReport solve_c_gamma(const LieAlgebra& g, int gamma, const Q& k, const Weight& l,
                           TopKind top = TopKind::Verma, int alpha = -1);

// simple-pole coefficient of the OPE A(z)B(w) by Wick contractions
FieldExpr ope_simple_pole(const FieldExpr& A, const FieldExpr& B, const QMat& G);
FieldExpr ope_pole(const FieldExpr& A, const FieldExpr& B, const QMat& G, int order);

struct FieldTable {
  std::vector<FieldExpr> fields;  // per Chevalley basis element
  std::vector<Q> c_gamma;         // per simple root
  Q k;
};
FieldTable build_fields(const LieAlgebra& g, const Q& k);
FieldExpr bracket_closure(const LieAlgebra& g, int beta, const FieldTable& partial, const QMat& G);

class AffineRealization {
 public:
  AffineRealization(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp);
  const WakimotoSpace& space() const { return sp_; }
  WVec apply(int b, int m, const WVec& v) { return ops_[b].apply(sp_, m, v); }
  WVec apply(int b, int m, const WMono& v) { return ops_[b].apply(sp_, m, v); }
  WVec apply(const LieElement& x, int m, const WVec& v);

 private:
  const LieAlgebra& g_;
  WakimotoSpace sp_;
  std::vector<ModeOp> ops_;
};

struct CommFailure {
  std::string a, b;
  int m = 0, n = 0;
  std::string vector, lhs, rhs;
};
struct CommReport {
  long checked = 0;
  std::vector<CommFailure> failures;
};
// [pi(a_m), pi(b_n)] v == pi([a,b]_{m+n}) v + m k kappa0(a,b) delta v
CommReport verify_affine_comm(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp,
                              int Dmax, int topdeg, int mrange = 2, size_t max_failures = 20);

struct ZhuReport {
  long checked = 0;
  std::vector<std::string> failures;
};
// zero modes on the energy-0 component against act_F(pi_g)
ZhuReport zhu_check(const LieAlgebra& g, const FieldTable& ft, const WakimotoSpace& sp, int topdeg);

}  // namespace ffr
