#pragma once
// Relaxed Verma modules M_{kappa,g}(E) in PBW form, bigraded characters,
// singular vectors and coinvariants.
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffr/affine_modes.hpp"

namespace ffr {

// factor a_{-n} with a a basis index; codes sort as (n descending, basis)
inline int pbw_code(int n, int b) { return (128 - n) * 256 + b; }
inline int pbw_n(int code) { return 128 - code / 256; }
inline int pbw_basis(int code) { return code % 256; }

// key: npos top exponents followed by sorted factor codes
using PMono = std::vector<int>;
using PVec = WVec;

class RelaxedVerma {
 public:
  RelaxedVerma(const LieAlgebra& g, TopKind top, int alpha, const Weight& l, const Q& k);
  const LieAlgebra& alg() const { return g_; }
  TopKind top() const { return top_; }
  int alpha() const { return alpha_; }
  const Weight& lambda() const { return lambda_; }
  const Q& level() const { return k_; }

  PVec act(int b, int m, const PMono& v);
  PVec act(int b, int m, const PVec& v);
  PVec act(const LieElement& x, int m, const PVec& v);

  int energy(const PMono& v) const;
  int top_degree(const PMono& v) const;
  std::vector<int> weight_offset(const PMono& v) const;  // combinatorial, simple-root coords
  std::vector<PMono> basis_energy(int e, int topdeg) const;
  std::vector<PMono> basis_upto(int d, int topdeg) const;
  std::string render(const PVec& v) const;

 private:
  PVec top_act(int b, const PMono& v) const;
  const LieAlgebra& g_;
  TopKind top_;
  int alpha_;
  Weight lambda_;
  Q k_;
  std::unique_ptr<PiTable> pi_;
  std::unordered_map<std::vector<int>, PVec, VecHash> cache_;
};

// [a_m, b_n] v == [a,b]_{m+n} v + m k kappa0(a,b) delta_{m+n,0} v on the PBW basis
CommReport verify_pbw_comm(RelaxedVerma& M, int Dmax, int topdeg, int mrange = 2, size_t max_failures = 20);

// bigraded characters refined by top degree; key = (offset..., energy, topdeg)
using Char3 = std::map<std::vector<int>, long>;
Char3 character_product(const LieAlgebra& g, TopKind top, int alpha, int D, int T);
Char3 character_pbw(RelaxedVerma& M, int D, int T);
Char3 character_wakimoto(AffineRealization& R, int D, int T);
// chi(M(M(lambda))) (1 - s e^{-alpha}) sum_{j>=1} s^{j-1} e^{j alpha}, truncated at top degree T
Char3 twisted_prediction(const LieAlgebra& g, int alpha, int D, int T);
// (offset..., energy) -> count inside |offset_i| <= radius
using Char2 = std::map<std::vector<int>, long>;
Char2 project(const Char3& c, int radius);
// top degree needed so that the radius window is complete (Verma top, or GT top on sl2)
int complete_topdeg(const LieAlgebra& g, TopKind top, int radius, int D);

struct TopReport {
  long checked = 0;
  std::vector<std::string> failures;
};
// zero modes of the relaxed Verma module on energy 0 against act_F(pi_g)
TopReport top_component_check(RelaxedVerma& M, int topdeg);

struct SingularVector {
  std::vector<int> offset;
  int energy = 0;
  PVec v;
};
// vectors of energy 1..D killed by all a_1 and e_{gamma,0}; Verma tops only.
// cells are taken with offset height >= -H (complete by construction)
std::vector<SingularVector> find_singular_vectors(RelaxedVerma& M, int D, int H = 2);

// dim M_cell - rank(f_{alpha,0} : M_{cell+alpha} -> M_cell), per (offset, energy)
Char2 coinvariants_character(RelaxedVerma& M, int alpha, int D, int radius);

}  // namespace ffr
