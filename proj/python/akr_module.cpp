#include "akr/asymptotics.hpp"
#include "akr/bounds.hpp"
#include "akr/core.hpp"
#include "akr/iterates.hpp"
#include "akr/moduli.hpp"
#include "akr/operators.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

akr::FunctionHandle make_handle(const std::string& id, std::function<double(double)> eval,
                                std::function<double(double)> d1,
                                std::function<double(double)> d2, const std::string& smoothness) {
    akr::FunctionHandle f;
    f.id = id;
    f.eval = std::move(eval);
    f.d1 = std::move(d1);
    f.d2 = std::move(d2);
    if (smoothness == "C0") f.smoothness = akr::Smoothness::C0;
    else if (smoothness == "C1") f.smoothness = akr::Smoothness::C1;
    else if (smoothness == "C2") f.smoothness = akr::Smoothness::C2;
    else if (smoothness == "Analytic") f.smoothness = akr::Smoothness::Analytic;
    else throw std::invalid_argument("smoothness must be C0, C1, C2 or Analytic");
    akr::validate_derivatives(f);
    return f;
}

}  // namespace

PYBIND11_MODULE(akrpy, m) {
    m.doc() = "Bernstein-type operator toolbox: AKR operator B_{n,0,j}, King and "
              "tau-modified operators, moduli of smoothness, direct estimates, "
              "iterates and Voronovskaya traces";

    py::class_<akr::FunctionHandle>(m, "FunctionHandle")
        .def(py::init(&make_handle), py::arg("id"), py::arg("eval"), py::arg("d1") = nullptr,
             py::arg("d2") = nullptr, py::arg("smoothness") = "C0")
        .def_readonly("id", &akr::FunctionHandle::id)
        .def("__call__", [](const akr::FunctionHandle& f, double x) { return f.eval(x); })
        .def_property_readonly("smoothness", [](const akr::FunctionHandle& f) {
            return akr::to_string(f.smoothness);
        });

    py::class_<akr::BernsteinForm>(m, "BernsteinForm")
        .def_readonly("degree", &akr::BernsteinForm::degree)
        .def_readonly("coeffs", &akr::BernsteinForm::coeffs)
        .def("__call__", [](const akr::BernsteinForm& b, double x) {
            return akr::eval_bernstein_form(b, x);
        });

    py::class_<akr::GridSpec>(m, "GridSpec")
        .def(py::init<std::vector<double>>())
        .def_static("uniform", &akr::GridSpec::uniform)
        .def_readonly("points", &akr::GridSpec::points);

    py::class_<akr::ModulusResult>(m, "ModulusResult")
        .def_readonly("value", &akr::ModulusResult::value)
        .def_readonly("witness_x", &akr::ModulusResult::witness_x)
        .def_readonly("witness_h", &akr::ModulusResult::witness_h)
        .def_readonly("witness_a", &akr::ModulusResult::witness_a);

    py::class_<akr::BoundReport>(m, "BoundReport")
        .def_property_readonly("bound_id", [](const akr::BoundReport& r) {
            return akr::to_string(r.bound_id);
        })
        .def_readonly("f_id", &akr::BoundReport::f_id)
        .def_readonly("n", &akr::BoundReport::n)
        .def_readonly("j", &akr::BoundReport::j)
        .def_readonly("max_lhs", &akr::BoundReport::max_lhs)
        .def_readonly("min_margin", &akr::BoundReport::min_margin)
        .def_readonly("witness_x", &akr::BoundReport::witness_x)
        .def_readonly("holds", &akr::BoundReport::holds)
        .def_readonly("informational", &akr::BoundReport::informational)
        .def_readonly("vacuous", &akr::BoundReport::vacuous);

    py::class_<akr::VoronovskayaTrace>(m, "VoronovskayaTrace")
        .def_readonly("f_id", &akr::VoronovskayaTrace::f_id)
        .def_readonly("j", &akr::VoronovskayaTrace::j)
        .def_readonly("x", &akr::VoronovskayaTrace::x)
        .def_readonly("n_list", &akr::VoronovskayaTrace::n_list)
        .def_readonly("scaled_errors", &akr::VoronovskayaTrace::scaled_errors)
        .def_readonly("extrapolated", &akr::VoronovskayaTrace::extrapolated)
        .def_readonly("target", &akr::VoronovskayaTrace::target);

    m.def("builtin_corpus", [] { return akr::builtin_corpus(); });
    m.def("corpus_function", &akr::corpus_function, py::arg("id"),
          py::return_value_policy::copy);
    m.def("monomial", &akr::monomial, py::arg("j"));

    m.def("bernstein_basis", &akr::bernstein_basis, py::arg("n"), py::arg("k"), py::arg("x"));
    m.def("akr_nodes", [](int n, int j) { return akr::akr_nodes(n, j).nodes; }, py::arg("n"),
          py::arg("j"));
    m.def("apply_akr", &akr::apply_akr, py::arg("f"), py::arg("n"), py::arg("j"));
    m.def("apply_bernstein", &akr::apply_bernstein, py::arg("f"), py::arg("n"));
    m.def("apply_akr_at", &akr::apply_akr_at, py::arg("f"), py::arg("n"), py::arg("j"),
          py::arg("x"));
    m.def("akr_error_at", &akr::akr_error_at, py::arg("f"), py::arg("n"), py::arg("j"),
          py::arg("x"));
    m.def("king_rn", &akr::king_rn, py::arg("n"), py::arg("x"));
    m.def("apply_king", &akr::apply_king, py::arg("f"), py::arg("n"), py::arg("x"));
    m.def("apply_tau",
          [](const akr::FunctionHandle& f, std::function<double(double)> tau,
             std::function<double(double)> tau_inverse, int n, double x) {
              return akr::apply_tau(f, akr::TauSpec(std::move(tau), std::move(tau_inverse)), n, x);
          },
          py::arg("f"), py::arg("tau"), py::arg("tau_inverse"), py::arg("n"), py::arg("x"));
    m.def("akr_first_moment", &akr::akr_first_moment, py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("akr_second_moment", &akr::akr_second_moment, py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("d_n_profile", &akr::d_n_profile, py::arg("n"), py::arg("x"));

    m.def("omega1", &akr::omega1, py::arg("f"), py::arg("delta"), py::arg("grid"));
    m.def("omega2", &akr::omega2, py::arg("f"), py::arg("delta"), py::arg("grid"));
    m.def("omega_j_star", &akr::omega_j_star, py::arg("f"), py::arg("j"), py::arg("delta"),
          py::arg("grid"));
    m.def("omega_phi_1", &akr::omega_phi_1, py::arg("f"), py::arg("delta"), py::arg("grid"));
    m.def("omega_inf_combined", &akr::omega_inf_combined, py::arg("f"), py::arg("j"),
          py::arg("delta2"), py::arg("delta1"), py::arg("grid"));

    m.def("sikkema_constant", &akr::sikkema_constant);
    m.def("verify_bound",
          [](const std::string& bound, const akr::FunctionHandle& f, int n, int j,
             const akr::GridSpec& grid, std::optional<double> delta) {
              return akr::verify_bound(akr::bound_from_string(bound), f, n, j, grid, delta);
          },
          py::arg("bound"), py::arg("f"), py::arg("n"), py::arg("j"), py::arg("grid"),
          py::arg("delta") = std::nullopt);

    m.def("iterate_akr", &akr::iterate_akr, py::arg("f"), py::arg("n"), py::arg("j"),
          py::arg("m"));
    m.def("iterate_limit", &akr::iterate_limit, py::arg("f"), py::arg("j"));
    m.def("contraction_report", &akr::contraction_report, py::arg("f"), py::arg("g"),
          py::arg("n"), py::arg("j"), py::arg("m_max"));

    m.def("voronovskaya_target", &akr::voronovskaya_target, py::arg("f"), py::arg("j"),
          py::arg("x"));
    m.def("voronovskaya_trace", &akr::voronovskaya_trace, py::arg("f"), py::arg("j"),
          py::arg("x"), py::arg("n_list"));
    m.def("pre_voronovskaya_residual", &akr::pre_voronovskaya_residual, py::arg("f"),
          py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("estimate_finta_constant", &akr::estimate_finta_constant, py::arg("f_set"),
          py::arg("j"), py::arg("n_list"), py::arg("x_grid"), py::arg("modulus_grid"));
}
