#pragma once
// Chevalley basis of sl_n realized by matrix units.

#include <string>
#include <vector>

#include "ffr/root_data.hpp"

namespace ffr {

enum class Kind { E, H, F };

struct BasisSym {
  Kind kind;
  int idx;  // positive root index for E/F, simple index for H
};

struct LieElement {
  std::vector<Q> c;
  bool operator==(const LieElement& o) const { return c == o.c; }
};

// element of C[x_alpha] (x) g
using PolyG = std::vector<Poly>;

class LieAlgebra {
 public:
  explicit LieAlgebra(int n);

  const RootSystem& rs() const { return rs_; }
  int n() const { return rs_.n; }
  int rank() const { return rs_.rank; }
  int npos() const { return rs_.npos(); }
  int dim() const { return dim_; }

  int e(int a) const { return a; }
  int h(int i) const { return npos() + i; }
  int f(int a) const { return npos() + rank() + a; }
  BasisSym sym(int b) const;
  std::string label(int b) const;       // e_{a1}, h_{1}, f_{a1+a2}
  std::string cli_symbol(int b) const;  // e:a1, h:1, f:a1+a2
  int parse_symbol(const std::string& s) const;
  Weight weight_of(int b) const;        // weight of basis vector under ad h
  std::vector<int> root_coords_of(int b) const;

  LieElement zero() const { return LieElement{std::vector<Q>(dim_, Q(0))}; }
  LieElement basis(int b) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;
  LieElement bracket_basis(int a, int b) const;
  Q kappa0(int a, int b) const { return kappa0_[a][b]; }
  Q kappa0(const LieElement& a, const LieElement& b) const;
  Q killing(int a, int b) const;  // trace of ad a ad b
  const std::vector<std::pair<int, int>>& sc(int a, int b) const { return sc_[a][b]; }

  std::vector<std::vector<int>> matrix(int b) const;
  LieElement from_matrix(const std::vector<std::vector<Q>>& m) const;
  std::string render(const LieElement& x) const;

  // C[x]-bilinear bracket, nvars = npos
  PolyG bracket_poly(const PolyG& a, const PolyG& b) const;
  PolyG ad_u(const PolyG& v) const;  // [u, v] with u = sum x_alpha f_alpha
  PolyG to_polyg(const LieElement& x) const;
  bool polyg_zero(const PolyG& v) const;

 private:
  RootSystem rs_;
  int dim_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> sc_;
  std::vector<std::vector<Q>> kappa0_;
};

// smallest k with ad(a)^k = 0; a must be supported on F
int ad_nilpotency_index(const LieAlgebra& g, const LieElement& a);
int ad_nilpotency_index_generic(const LieAlgebra& g);

// split into n-bar, h, n parts
struct Split {
  LieElement nbar, h, n;
};
Split split(const LieAlgebra& g, const LieElement& x);

}  // namespace ffr
