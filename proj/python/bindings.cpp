// Python bindings. Rationals cross the boundary as strings ("-1/2").
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffr/admissible.hpp"
#include "ffr/relaxed.hpp"

namespace py = pybind11;
using namespace ffr;

namespace {
PyObject* ffr_error = nullptr;

std::vector<std::string> weight_strs(const std::vector<Weight>& ws) {
  std::vector<std::string> out;
  for (auto& w : ws) out.push_back(weight_str(w));
  return out;
}

Weight weight_or_zero(const RootSystem& rs, const std::string& s) {
  return s.empty() ? zero_weight(rs) : parse_weight(rs, s);
}

TopKind top_kind(const std::string& s) {
  if (s == "verma") return TopKind::Verma;
  if (s == "gt") return TopKind::GT;
  throw Error("ParseError", "top must be verma or gt");
}
}  // namespace

PYBIND11_MODULE(_ffr, m) {
  m.doc() = "free-field realizations of sl_n and admissible-level combinatorics";

  ffr_error = PyErr_NewException("ffr.FfrError", PyExc_ValueError, nullptr);
  m.attr("FfrError") = py::handle(ffr_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(ffr_error)(e.what());
      err.attr("kind") = e.kind;
      PyErr_SetObject(ffr_error, err.ptr());
    }
  });

  m.def("pi_g", [](int n, const std::string& symbol) {
    LieAlgebra g(n);
    return render(g.rs(), pi_g(g, g.basis(g.parse_symbol(symbol))));
  }, py::arg("n"), py::arg("symbol"));

  m.def("verify_pi_hom", [](int n) { return verify_pi_hom(LieAlgebra(n)); }, py::arg("n"));

  m.def("ff_field", [](int n, const std::string& k, const std::string& symbol) {
    LieAlgebra g(n);
    FieldTable ft = build_fields(g, parse_q(k));
    return render(g, ft.fields[g.parse_symbol(symbol)]);
  }, py::arg("n"), py::arg("k"), py::arg("symbol"));

  m.def("c_gamma", [](int n, const std::string& k) {
    std::vector<std::string> out;
    for (auto& c : build_fields(LieAlgebra(n), parse_q(k)).c_gamma) out.push_back(qstr(c));
    return out;
  }, py::arg("n"), py::arg("k"));

  m.def("verify_affine_comm",
        [](int n, const std::string& k, int D, const std::string& top, const std::string& alpha,
           const std::string& lam, int topdeg) {
          LieAlgebra g(n);
          Q kq = parse_q(k);
          TopKind tk = top_kind(top);
          int a = alpha.empty() ? (tk == TopKind::GT ? g.rs().theta_index() : -1) : g.rs().parse_root(alpha);
          FieldTable ft = build_fields(g, kq);
          WakimotoSpace sp(g, tk, a, weight_or_zero(g.rs(), lam), kq);
          CommReport r = verify_affine_comm(g, ft, sp, D, topdeg);
          return py::dict(py::arg("checked") = r.checked, py::arg("failures") = r.failures.size());
        },
        py::arg("n"), py::arg("k"), py::arg("D") = 2, py::arg("top") = "verma", py::arg("alpha") = "",
        py::arg("lam") = "", py::arg("topdeg") = 1);

  m.def("admissible_level", [](int n, long p, long q) {
    AdmissibleLevel l = admissible_level(n, p, q);
    return py::dict(py::arg("n") = l.n, py::arg("p") = l.p, py::arg("q") = l.q, py::arg("k") = qstr(l.k));
  }, py::arg("n"), py::arg("p"), py::arg("q"));

  m.def("prk", [](int n, long p, long q) { return weight_strs(pr_k_bar_weights(admissible_level(n, p, q))); },
        py::arg("n"), py::arg("p"), py::arg("q"));

  m.def("omega", [](int n, long p, long q, const std::vector<int>& sigma) {
    return weight_strs(omega_theorem(sigma, admissible_level(n, p, q)));
  }, py::arg("n"), py::arg("p"), py::arg("q"), py::arg("sigma"));

  m.def("omega_direct", [](int n, long p, long q, const std::vector<int>& sigma) {
    return weight_strs(omega_direct(sigma, admissible_level(n, p, q)));
  }, py::arg("n"), py::arg("p"), py::arg("q"), py::arg("sigma"));

  m.def("orbit_table", [](int n) {
    py::list rows;
    for (auto& r : orbit_table(n))
      rows.append(py::dict(py::arg("partition") = r.partition, py::arg("dim") = r.dim,
                           py::arg("labels") = r.labels, py::arg("covers") = r.covers));
    return rows;
  }, py::arg("n"));

  m.def("richardson", &richardson, py::arg("sigma"), py::arg("n"));
  m.def("orbit_dim", &orbit_dim, py::arg("partition"));
}
