// ffr: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage or domain error.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ffr/admissible.hpp"
#include "ffr/affine_modes.hpp"
#include "ffr/relaxed.hpp"

using json = nlohmann::ordered_json;
using namespace ffr;

namespace {

struct Globals {
  int n = 2;
  std::string k, p, q;
  int D = -1;
  int window = 6;
  std::string format = "json";
};

struct Failure {
  int code;
};

json envelope(const std::string& cmd, const Globals& G) {
  json j;
  j["schema_version"] = 1;
  j["command"] = cmd;
  j["n"] = G.n;
  return j;
}

void emit(const Globals& G, const json& j, const std::string& text) {
  if (G.format == "text") std::cout << text << "\n";
  else std::cout << j.dump(2) << "\n";
}

Q level_of(const Globals& G) {
  if (!G.k.empty()) return parse_q(G.k);
  if (!G.p.empty() && !G.q.empty()) return parse_q(G.p) / parse_q(G.q) - G.n;
  throw Error("UsageError", "level required: -k or -p/-q");
}

std::vector<int> parse_sigma(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok[0] == 'a') tok = tok.substr(1);
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error("ParseError", "bad Sigma entry '" + tok + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight offset_weight(const RootSystem& rs, const Weight& l, const std::vector<int>& off) {
  Weight w = l;
  for (int i = 0; i < rs.rank; ++i) w = w + Q(off[i]) * root_weight(rs, rs.positive_roots[rs.simple_index(i)]);
  return w;
}

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (auto& w : ws) a.push_back(weight_str(w));
  return a;
}

TopKind parse_top(const std::string& s) {
  if (s == "verma") return TopKind::Verma;
  if (s == "gt") return TopKind::GT;
  throw Error("ParseError", "top must be verma or gt");
}

json level_json(const AdmissibleLevel& l) {
  return json{{"n", l.n}, {"p", l.p}, {"q", l.q}, {"k", qstr(l.k)}};
}

json comm_json(const CommReport& r) {
  json fails = json::array();
  for (auto& f : r.failures)
    fails.push_back({{"pair", f.a + "," + f.b}, {"m", f.m}, {"n", f.n}, {"vector", f.vector}, {"lhs", f.lhs},
                     {"rhs", f.rhs}, {"pass", false}});
  return json{{"checked", r.checked}, {"failures", fails}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-field realizations and admissible weights for sl_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("-n", G.n, "sl_n")->check(CLI::Range(2, 8));
  app.add_option("-k", G.k, "level as a rational a/b");
  app.add_option("-p", G.p, "numerator of k + n");
  app.add_option("-q", G.q, "denominator of k + n");
  app.add_option("-D", G.D, "degree or energy cutoff");
  app.add_option("--window", G.window, "weight window radius")->check(CLI::NonNegativeNumber);
  app.add_option("--format", G.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string symbol, gamma = "a1", alpha, lambda, offset, sigma, top = "verma";
  std::string expect;
  int trunc = 6;

  auto* pig = app.add_subcommand("pi-g", "image of a basis element under pi_g");
  pig->add_option("symbol", symbol, "e:a1, h:1, f:a1+a2")->required();

  auto* pq = app.add_subcommand("pq-polys", "polynomials p^gamma, q^gamma");
  pq->add_option("--gamma", gamma, "simple root label");

  auto* tw = app.add_subcommand("twist-char", "character of T_alpha M(lambda) in a window");
  tw->add_option("--alpha", alpha)->required();
  tw->add_option("--lambda", lambda, "weight c1,c2,...");
  tw->add_option("--trunc", trunc, "realization degree cap for non-simple alpha");

  auto* gm = app.add_subcommand("gamma-mult", "c_alpha eigenvalue counts on a weight slice");
  gm->add_option("--alpha", alpha)->required();
  gm->add_option("--lambda", lambda);
  gm->add_option("--offset", offset, "simple-root offset from lambda, c1,c2,...");

  auto* ff = app.add_subcommand("ff-field", "affine free-field image of a basis element");
  ff->add_option("symbol", symbol)->required();

  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->require_subcommand(1);
  ver->fallthrough();
  auto* v_pi = ver->add_subcommand("pi-hom", "pi_g on all basis brackets");
  auto* v_aff = ver->add_subcommand("affine-comm", "mode commutators of the realization");
  auto* v_zhu = ver->add_subcommand("zhu-diagram", "zero modes on the top component");
  auto* v_chr = ver->add_subcommand("characters", "relaxed Verma vs relaxed Wakimoto characters");
  auto* v_sing = ver->add_subcommand("singular", "singular vectors of the relaxed Verma module");
  for (auto* s : {v_aff, v_zhu, v_chr}) {
    s->add_option("--top", top)->check(CLI::IsMember({"verma", "gt"}));
    s->add_option("--alpha", alpha);
    s->add_option("--lambda", lambda);
  }
  v_sing->add_option("--lambda", lambda);
  v_sing->add_option("--expect", expect, "none or some")->check(CLI::IsMember({"none", "some"}));

  auto* om = app.add_subcommand("omega", "Omega_k(p_Sigma)");
  om->add_option("--sigma", sigma, "comma-separated simple indices");
  auto* pr = app.add_subcommand("prk", "Pr_{k,Z} and the projected admissible weights");
  auto* orb = app.add_subcommand("orbits", "nilpotent orbit table");
  auto* ric = app.add_subcommand("richardson", "Richardson orbit of p_Sigma");
  ric->add_option("--sigma", sigma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    LieAlgebra g(G.n);
    const RootSystem& rs = g.rs();
    auto lam = [&]() { return lambda.empty() ? zero_weight(rs) : parse_weight(rs, lambda); };
    auto alpha_idx = [&](bool required) {
      if (alpha.empty()) {
        if (required) throw Error("UsageError", "--alpha required");
        return -1;
      }
      return rs.parse_root(alpha);
    };

    if (*pig) {
      int b = g.parse_symbol(symbol);
      WeylElement w = pi_g(g, g.basis(b));
      std::string r = render(rs, w);
      json j = envelope("pi-g", G);
      j["element"] = symbol;
      j["image"] = r;
      emit(G, j, r);
      return 0;
    }
    if (*pq) {
      int s = rs.parse_root(gamma);
      if (!rs.is_simple(s)) throw Error("NotSimpleRoot", gamma + " is not simple");
      PQ P = pq_polynomials(g, s);
      json j = envelope("pq-polys", G);
      j["gamma"] = gamma;
      std::string text;
      json ps = json::object(), qs = json::object();
      for (int a = 0; a < g.npos(); ++a) {
        ps[rs.label(a)] = render_xpoly(rs, P.p[a]);
        qs[rs.label(a)] = render_xpoly(rs, P.q[a]);
        text += "p_" + rs.label(a) + " = " + render_xpoly(rs, P.p[a]) + "\n";
        text += "q_" + rs.label(a) + " = " + render_xpoly(rs, P.q[a]) + "\n";
      }
      j["p"] = ps;
      j["q"] = qs;
      text.pop_back();
      emit(G, j, text);
      return 0;
    }
    if (*tw) {
      int a = alpha_idx(true);
      Weight l = lam();
      WindowChar c = twist_character(g, a, G.window, trunc);
      json j = envelope("twist-char", G);
      j["alpha"] = rs.label(a);
      j["lambda"] = weight_str(l);
      j["window"] = G.window;
      json rows = json::array();
      std::string text;
      for (auto& [off, e] : c) {
        std::string w = weight_str(offset_weight(rs, l, off));
        json m = e.exact ? json(e.mult) : json("≥" + std::to_string(e.mult));
        rows.push_back({{"weight", w}, {"mult", m}});
        text += w + " : " + (e.exact ? "" : ">=") + std::to_string(e.mult) + "\n";
      }
      j["character"] = rows;
      if (!text.empty()) text.pop_back();
      emit(G, j, text);
      return 0;
    }
    if (*gm) {
      int a = alpha_idx(true);
      Weight l = lam();
      std::vector<int> off(rs.rank, 0);
      if (!offset.empty()) {
        Weight o = parse_weight(rs, offset);
        for (int i = 0; i < rs.rank; ++i) {
          if (!is_int(o.coords[i])) throw Error("ParseError", "offset must be integral");
          off[i] = static_cast<int>(to_long(o.coords[i]));
        }
      }
      int D = G.D < 0 ? 6 : G.D;
      PiTable pi(g);
      GammaMult r = gamma_alpha_multiplicity(g, pi, l, a, off, D);
      json j = envelope("gamma-mult", G);
      j["alpha"] = rs.label(a);
      j["lambda"] = weight_str(l);
      j["weight"] = weight_str(offset_weight(rs, l, off));
      j["D"] = D;
      j["dim"] = r.dim;
      json counts = json::array();
      std::string text = "dim " + std::to_string(r.dim);
      for (auto& [ev, c] : r.counts) {
        counts.push_back({{"eigenvalue", qstr(ev)}, {"count", c}});
        text += "\n" + qstr(ev) + " : " + std::to_string(c);
      }
      j["counts"] = counts;
      j["irrational"] = r.irrational;
      j["leak"] = r.leak;
      emit(G, j, text);
      return 0;
    }
    if (*ff) {
      int b = g.parse_symbol(symbol);
      Q k = level_of(G);
      FieldTable ft = build_fields(g, k);
      std::string r = render(g, ft.fields[b]);
      json j = envelope("ff-field", G);
      j["k"] = qstr(k);
      j["element"] = symbol;
      j["field"] = r;
      json cg = json::array();
      for (auto& c : ft.c_gamma) cg.push_back(qstr(c));
      j["c_gamma"] = cg;
      emit(G, j, r);
      return 0;
    }
    if (*ver) {
      json j = envelope("verify", G);
      bool pass = true;
      std::string text;
      if (*v_pi) {
        auto f = verify_pi_hom(g);
        j["suite"] = "pi-hom";
        j["checked"] = g.dim() * g.dim();
        j["failures"] = f;
        pass = f.empty();
        text = "pi-hom: " + std::to_string(g.dim() * g.dim()) + " pairs, " + std::to_string(f.size()) + " failures";
      } else if (*v_aff || *v_zhu || *v_chr) {
        Q k = level_of(G);
        TopKind tk = parse_top(top);
        int a = alpha_idx(false);
        if (tk == TopKind::GT && a < 0) a = rs.theta_index();
        Weight l = lam();
        FieldTable ft = build_fields(g, k);
        WakimotoSpace sp(g, tk, a, l, k);
        j["k"] = qstr(k);
        j["top"] = top;
        if (a >= 0) j["alpha"] = rs.label(a);
        j["lambda"] = weight_str(l);
        if (*v_aff) {
          int D = G.D < 0 ? 2 : G.D;
          int td = G.n == 2 ? 2 : 1;
          CommReport r = verify_affine_comm(g, ft, sp, D, td);
          j["suite"] = "affine-comm";
          j["D"] = D;
          j["report"] = comm_json(r);
          pass = r.failures.empty();
          text = "affine-comm: " + std::to_string(r.checked) + " checks, " + std::to_string(r.failures.size()) +
                 " failures";
        } else if (*v_zhu) {
          int td = G.D < 0 ? 3 : G.D;
          ZhuReport z = zhu_check(g, ft, sp, td);
          RelaxedVerma M(g, tk, a, l, k);
          TopReport t = top_component_check(M, td);
          j["suite"] = "zhu-diagram";
          j["checked"] = z.checked + t.checked;
          json f = z.failures;
          for (auto& s : t.failures) f.push_back("pbw: " + s);
          j["failures"] = f;
          pass = f.empty();
          text = "zhu-diagram: " + std::to_string(z.checked + t.checked) + " checks, " + std::to_string(f.size()) +
                 " failures";
        } else {
          int D = G.D < 0 ? 3 : G.D;
          int T = (tk == TopKind::GT && G.n > 2) ? 2 : complete_topdeg(g, tk, G.window, D);
          RelaxedVerma M(g, tk, a, l, k);
          AffineRealization R(g, ft, sp);
          Char3 prod = character_product(g, tk, a, D, T);
          Char3 pbw = character_pbw(M, D, T);
          Char3 wak = character_wakimoto(R, D, T);
          bool tw_ok = true;
          if (tk == TopKind::GT) tw_ok = twisted_prediction(g, a, D, T) == prod;
          j["suite"] = "characters";
          j["D"] = D;
          j["topdeg"] = T;
          j["pbw_equals_product"] = pbw == prod;
          j["wakimoto_equals_product"] = wak == prod;
          j["twisted_prediction"] = tw_ok;
          json rows = json::array();
          for (auto& [key, c] : project(wak, G.window)) {
            std::vector<int> off(key.begin(), key.end() - 1);
            rows.push_back({{"weight", weight_str(offset_weight(rs, l, off))}, {"energy", key.back()}, {"mult", c}});
          }
          j["character"] = rows;
          pass = pbw == prod && wak == prod && tw_ok;
          text = std::string("characters: ") + (pass ? "agree" : "DISAGREE") + " on " + std::to_string(prod.size()) +
                 " graded cells";
        }
      } else if (*v_sing) {
        Q k = level_of(G);
        Weight l = lam();
        int D = G.D < 0 ? 3 : G.D;
        RelaxedVerma M(g, TopKind::Verma, -1, l, k);
        auto sv = find_singular_vectors(M, D);
        j["suite"] = "singular";
        j["k"] = qstr(k);
        j["lambda"] = weight_str(l);
        j["D"] = D;
        json list = json::array();
        text = "singular vectors: " + std::to_string(sv.size());
        for (auto& s : sv) {
          std::string w = weight_str(offset_weight(rs, l, s.offset));
          list.push_back({{"weight", w}, {"energy", s.energy}, {"vector", M.render(s.v)}});
          text += "\n" + w + " energy " + std::to_string(s.energy) + ": " + M.render(s.v);
        }
        j["vectors"] = list;
        if (expect == "none") pass = sv.empty();
        if (expect == "some") pass = !sv.empty();
      }
      j["pass"] = pass;
      emit(G, j, text);
      return pass ? 0 : 1;
    }
    if (*om) {
      if (G.p.empty() || G.q.empty()) throw Error("UsageError", "omega needs -p and -q");
      AdmissibleLevel lvl = admissible_level(G.n, std::stol(G.p), std::stol(G.q));
      auto sg = parse_sigma(sigma);
      auto ws = omega_theorem(sg, lvl);
      json j = envelope("omega", G);
      j["level"] = level_json(lvl);
      j["sigma"] = sg;
      j["omega"] = weights_json(ws);
      json certs = json::array();
      for (auto& w : ws)
        for (int a : nilradical_roots(rs, sg)) certs.push_back({{"lambda", weight_str(w)}, {"alpha", rs.label(a)}});
      j["certificates"] = certs;
      std::string text;
      for (auto& w : ws) text += weight_str(w) + "\n";
      if (!text.empty()) text.pop_back();
      emit(G, j, text);
      return 0;
    }
    if (*pr) {
      if (G.p.empty() || G.q.empty()) throw Error("UsageError", "prk needs -p and -q");
      AdmissibleLevel lvl = admissible_level(G.n, std::stol(G.p), std::stol(G.q));
      auto ints = pr_k_integral(lvl);
      auto bar = pr_k_bar(lvl);
      json j = envelope("prk", G);
      j["level"] = level_json(lvl);
      j["integral"] = weights_json(ints);
      json rows = json::array();
      std::string text = "Pr_{k,Z}: " + std::to_string(ints.size()) + "\nPr_k bar: " + std::to_string(bar.size());
      for (auto& e : bar) {
        json perm = json::array();
        for (int x : e.y.w.perm) perm.push_back(x + 1);
        rows.push_back({{"lambda", weight_str(e.lambda)}, {"w", perm}, {"eta", e.y.eta}});
        text += "\n" + weight_str(e.lambda);
      }
      j["bar"] = rows;
      json cls = json::array();
      for (auto& c : pr_k_bar_classes(lvl)) cls.push_back(weights_json(c));
      j["classes"] = cls;
      emit(G, j, text);
      return 0;
    }
    if (*orb) {
      json j = envelope("orbits", G);
      json rows = json::array();
      std::string text;
      for (auto& r : orbit_table(G.n)) {
        json cov = json::array();
        for (auto& c : r.covers) cov.push_back(c);
        rows.push_back({{"partition", r.partition}, {"dim", r.dim}, {"labels", r.labels}, {"covers", cov}});
        text += partition_str(r.partition) + " " + std::to_string(r.dim);
        for (auto& l : r.labels) text += " " + l;
        text += "\n";
      }
      j["rows"] = rows;
      text.pop_back();
      emit(G, j, text);
      return 0;
    }
    if (*ric) {
      auto sg = parse_sigma(sigma);
      Partition p = richardson(sg, G.n);
      json j = envelope("richardson", G);
      j["sigma"] = sg;
      j["blocks"] = levi_blocks(sg, G.n);
      j["partition"] = p;
      j["dim"] = orbit_dim(p);
      j["nilradical_roots"] = nilradical_roots(rs, sg).size();
      emit(G, j, partition_str(p) + " " + std::to_string(orbit_dim(p)));
      return 0;
    }
  } catch (const Error& e) {
    json j{{"schema_version", 1}, {"error", e.kind}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json j{{"schema_version", 1}, {"error", "UsageError"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 2;
  }
  return 2;
}
