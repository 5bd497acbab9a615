#pragma once
// Admissible levels and weights for sl_n, the sets Omega_k(p_Sigma),
// partitions and nilpotent orbits.
#include <optional>
#include <string>
#include <vector>

#include "ffr/root_data.hpp"

namespace ffr {

struct AdmissibleLevel {
  int n = 0;
  long p = 0, q = 0;
  Q k;
};

struct AdmissibleResult {
  std::optional<AdmissibleLevel> level;
  std::string reason;  // nonpositive | p_too_small when rejected
};
AdmissibleResult admissible_check(const Q& k, int n);
// throws NotAdmissible
AdmissibleLevel admissible_level(int n, long p, long q);

// dominant integral lambda with <lambda, theta^vee> <= p - n
std::vector<Weight> pr_k_integral(const AdmissibleLevel& lvl);

// lambda_bar + level Lambda_0 + delta_coeff delta
struct AffineWeight {
  Weight fin;
  Q level;
  Q delta;
  bool operator==(const AffineWeight& o) const {
    return fin == o.fin && level == o.level && delta == o.delta;
  }
};
AffineWeight t_translation(const RootSystem& rs, const Weight& mu, const AffineWeight& g);

// y = w t_{-eta}; eta a coweight in fundamental coordinates
struct AffineWeylElement {
  WeylGroupElement w;
  std::vector<long> eta;
};
AffineWeylElement affine_compose(const RootSystem& rs, const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeight affine_act(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& g);
AffineWeight affine_dot(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& g);
long eta_pair(const RootSystem& rs, const std::vector<long>& eta, int a);  // (eta, alpha_a)

bool y_is_admissible(const RootSystem& rs, const AffineWeylElement& y, long q);
// independent check: images of the simple roots alpha_i, -theta + q delta are positive real roots
bool y_is_admissible_roots(const RootSystem& rs, const AffineWeylElement& y, long q);

// finite part of y . (lambda + k Lambda_0)
Weight project_dot(const RootSystem& rs, const AdmissibleLevel& lvl, const AffineWeylElement& y, const Weight& l);

struct PrEntry {
  Weight lambda;
  AffineWeylElement y;  // first generating element found
};
// union over admissible w t_{-eta}, eta dominant with (eta, theta) <= theta_bound
// (default q - 1), deduplicated and sorted by weight
std::vector<PrEntry> pr_k_bar(const AdmissibleLevel& lvl, long theta_bound = -1);
std::vector<Weight> pr_k_bar_weights(const AdmissibleLevel& lvl);
std::vector<Weight> pr_k_bar_y(const AdmissibleLevel& lvl, const AffineWeylElement& y);
// [Pr_k]: classes under the finite dot action
std::vector<std::vector<Weight>> pr_k_bar_classes(const AdmissibleLevel& lvl);
// <lambda + rho_hat, alpha_hat^vee> not in -N_0 for positive real roots with delta-part < mmax
bool regular_dominant_affine(const RootSystem& rs, const AdmissibleLevel& lvl, const Weight& l, int mmax);

// Sigma: 1-based simple indices
std::vector<Weight> omega_theorem(const std::vector<int>& sigma, const AdmissibleLevel& lvl);
std::vector<Weight> omega_direct(const std::vector<int>& sigma, const AdmissibleLevel& lvl);
std::vector<int> nilradical_roots(const RootSystem& rs, const std::vector<int>& sigma);  // Delta_+^u
bool in_levi(const RootSystem& rs, const std::vector<int>& sigma, int a);

// cyclic element preserving {alpha_1, ..., alpha_{n-1}, -theta}, w_j(-theta) = alpha_j
WeylGroupElement w_cyclic(const RootSystem& rs, int j);

// partitions and orbits
using Partition = std::vector<int>;
std::vector<Partition> partitions(int n);  // dominance-compatible order, [n] first
Partition transpose(const Partition& p);
long orbit_dim(const Partition& p);
bool dominance_leq(const Partition& a, const Partition& b);  // throws SizeMismatch
Partition richardson(const std::vector<int>& sigma, int n);
Partition levi_blocks(const std::vector<int>& sigma, int n);
Partition orbit_q(int n, long q);
std::vector<std::string> orbit_labels(const Partition& p);
std::string partition_str(const Partition& p);  // [2,1,1]

struct OrbitRow {
  Partition partition;
  long dim = 0;
  std::vector<std::string> labels;
  std::vector<Partition> covers;  // orbits directly below in the closure order
};
std::vector<OrbitRow> orbit_table(int n);

}  // namespace ffr
