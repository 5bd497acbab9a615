#include <doctest.h>

#include <algorithm>
#include <set>

#include "ffr/root_data.hpp"

using namespace ffr;

TEST_CASE("positive roots are the eps_i - eps_j") {
  for (int n = 2; n <= 6; ++n) {
    RootSystem rs = build_root_system(n);
    CHECK(rs.npos() == n * (n - 1) / 2);
    CHECK(rs.rank == n - 1);
    CHECK(rs.h_dual == n);
    std::set<std::vector<int>> seen;
    int last_height = 0;
    for (auto& r : rs.positive_roots) {
      std::vector<int> c(n - 1, 0);
      for (int s = r.i; s < r.j; ++s) c[s] = 1;
      CHECK(r.coeffs == c);
      CHECK(r.height >= last_height);
      last_height = r.height;
      seen.insert(r.coeffs);
    }
    CHECK(static_cast<int>(seen.size()) == rs.npos());
    CHECK(theta(rs).height == n - 1);
  }
}

TEST_CASE("cartan matrix is the A_{n-1} tridiagonal") {
  RootSystem rs = build_root_system(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(rs.cartan[i][j] == (i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0)));
}

TEST_CASE("small ranks") {
  CHECK_THROWS_AS(build_root_system(1), Error);
  RootSystem r3 = build_root_system(3);
  CHECK(r3.label(r3.theta_index()) == "a1+a2");
  CHECK(r3.parse_root("a1+a2") == r3.theta_index());
  CHECK(r3.parse_root("a2") == r3.simple_index(1));
}

TEST_CASE("pairing and forms") {
  RootSystem rs = build_root_system(3);
  CHECK(pairing(rs, rho(rs), rs.positive_roots[rs.theta_index()]) == 2);
  CHECK(pairing(rs, fundamental(rs, 0), rs.simple_roots[0]) == 1);
  CHECK(pairing(rs, fundamental(rs, 0), rs.simple_roots[1]) == 0);
  Weight th = root_weight(rs, theta(rs));
  CHECK(form_hstar(rs, th, th) == 2);
  RootSystem r2 = build_root_system(2);
  Weight bad{{Q(1), Q(2)}};
  CHECK_THROWS_AS(pairing(r2, bad, r2.simple_roots[0]), Error);
  // kappa_g = 2 n kappa0 on h; kappa_c = -n kappa0
  BilinearForm k0 = form(rs, "kappa0"), kg = form(rs, "kappa_g"), kc = form(rs, "kappa_c");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(kg.gram_h[i][j] == 6 * k0.gram_h[i][j]);
      CHECK(kc.gram_h[i][j] == -3 * k0.gram_h[i][j]);
    }
  CHECK_THROWS_AS(form(rs, "nonsense"), Error);
}

TEST_CASE("weights round trip") {
  RootSystem rs = build_root_system(3);
  Weight w = parse_weight(rs, "1/2,-3");
  CHECK(weight_str(w) == "1/2*w1-3*w2");
  CHECK(parse_weight(rs, "0,0") == zero_weight(rs));
  CHECK_THROWS_AS(parse_weight(rs, "1"), Error);
  // root coordinates: theta = w1 + w2 in sl3
  auto c = to_root_coords(rs, root_weight(rs, theta(rs)));
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
}

TEST_CASE("Weyl group") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs = build_root_system(n);
    auto W = weyl_group(rs);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long>(W.size()) == fact);
    // W permutes the roots and preserves the form
    Weight l = parse_weight(rs, n == 2 ? "1/3" : (n == 3 ? "1/3,2" : "1/3,2,-1"));
    for (auto& w : W) {
      CHECK(form_hstar(rs, weyl_act(rs, w, l), weyl_act(rs, w, l)) == form_hstar(rs, l, l));
      CHECK(dot_action(rs, w, l) == weyl_act(rs, w, l + rho(rs)) - rho(rs));
    }
  }
  RootSystem rs = build_root_system(3);
  auto s1 = weyl_from_word(rs, {1});
  CHECK(weyl_act_root(rs, s1, rs.simple_index(0)) == std::pair<int, int>{rs.simple_index(0), -1});
  CHECK(weyl_act_root(rs, s1, rs.simple_index(1)).first == rs.theta_index());
  CHECK_THROWS_AS(weyl_from_word(rs, {3}), Error);
  // s1 s2 s1 = s2 s1 s2
  CHECK(weyl_from_word(rs, {1, 2, 1}).perm == weyl_from_word(rs, {2, 1, 2}).perm);
}

TEST_CASE("dominance for a subset of simple roots") {
  RootSystem rs = build_root_system(3);
  CHECK(is_dominant_for(rs, {0}, parse_weight(rs, "2,-1/2")));
  CHECK_FALSE(is_dominant_for(rs, {1}, parse_weight(rs, "2,-1/2")));
  CHECK(is_dominant_for(rs, {}, parse_weight(rs, "2,-1/2")));
}
