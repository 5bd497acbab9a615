#pragma once
// Type A_{n-1} root data, weights, Weyl group and invariant forms.

#include <string>
#include <vector>

#include "ffr/core.hpp"

namespace ffr {

struct Root {
  std::vector<int> coeffs;  // over simple roots
  int height = 0;
  int i = 0, j = 0;         // epsilon_i - epsilon_j, 0-based, i < j
};

struct Weight {
  std::vector<Q> coords;    // fundamental weight basis
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

struct RootSystem {
  int n = 0;
  int rank = 0;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;
  std::vector<std::vector<int>> cartan;
  int h = 0, h_dual = 0, lacing = 1;

  int npos() const { return static_cast<int>(positive_roots.size()); }
  int find(const std::vector<int>& coeffs) const;  // -1 if absent
  int index_ij(int i, int j) const;                // positive root eps_i - eps_j
  int simple_index(int s) const { return index_ij(s, s + 1); }
  bool is_simple(int a) const { return positive_roots[a].height == 1; }
  int theta_index() const { return index_ij(0, n - 1); }
  std::string label(int a) const;                  // "a1+a2"
  int parse_root(const std::string& s) const;      // inverse of label
};

RootSystem build_root_system(int n);

Weight zero_weight(const RootSystem& rs);
Weight fundamental(const RootSystem& rs, int i);
Weight rho(const RootSystem& rs);
const Root& theta(const RootSystem& rs);
Weight root_weight(const RootSystem& rs, const Root& a);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Q& s, const Weight& a);

Q pairing(const RootSystem& rs, const Weight& l, const Root& a);  // <l, a^vee>
Q form_hstar(const RootSystem& rs, const Weight& a, const Weight& b);
std::vector<Q> to_root_coords(const RootSystem& rs, const Weight& w);
std::string weight_str(const Weight& w);  // "1/2*w1+w2"
Weight parse_weight(const RootSystem& rs, const std::string& s);

using QMat = std::vector<std::vector<Q>>;
QMat inverse(const QMat& m);

struct BilinearForm {
  std::string label;
  QMat gram_h;
  QMat gram_hstar;  // empty when degenerate
};

// labels: kappa0, kappa_g, kappa_c, kappa_cb, level (k*kappa0)
BilinearForm form(const RootSystem& rs, const std::string& label, const Q& k = 0);

struct WeylGroupElement {
  std::vector<int> perm;  // perm[i] = w(i) on epsilon indices
};

WeylGroupElement weyl_identity(const RootSystem& rs);
WeylGroupElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);  // 1-based s_i
WeylGroupElement compose(const WeylGroupElement& a, const WeylGroupElement& b);       // a after b
WeylGroupElement inverse(const WeylGroupElement& a);
std::vector<WeylGroupElement> weyl_group(const RootSystem& rs);
Weight weyl_act(const RootSystem& rs, const WeylGroupElement& w, const Weight& l);
Weight dot_action(const RootSystem& rs, const WeylGroupElement& w, const Weight& l);
// image of positive root a: returns (index, sign)
std::pair<int, int> weyl_act_root(const RootSystem& rs, const WeylGroupElement& w, int a);

bool is_dominant_for(const RootSystem& rs, const std::vector<int>& sigma, const Weight& l);

}  // namespace ffr
