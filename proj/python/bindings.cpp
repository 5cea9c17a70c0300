// Python bindings for the Hartmann SUSY solver core.  The surface mirrors
// the C++ modules: parameters and quantum numbers, the exact radial-function
// algebra, the half-line ladder construction, the full-line Morse partner
// map and the finite-difference oracle.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hartmann/model.hpp"
#include "hartmann/oracle.hpp"
#include "hartmann/radial_function.hpp"
#include "hartmann/susy_fullline.hpp"
#include "hartmann/susy_halfline.hpp"

namespace py = pybind11;
using namespace hartmann;

namespace {

std::string radial_repr(const RadialFunction& f) {
    std::ostringstream out;
    if (f.is_zero()) return "RadialFunction(0)";
    out << "RadialFunction(s=" << f.s << ", kappa=" << f.kappa << ", poly=[";
    for (int k = 0; k <= f.poly.degree(); ++k) {
        if (k) out << ", ";
        out << f.poly.coeff(k);
    }
    out << "])";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SUSY quantum mechanics solver for the ring-shaped Hartmann "
              "potential (atomic units)";

    // --- model -------------------------------------------------------------
    py::class_<HartmannParams>(m, "HartmannParams")
        .def(py::init<double, double>(), py::arg("eta"), py::arg("sigma"))
        .def_readonly("eta", &HartmannParams::eta)
        .def_readonly("sigma", &HartmannParams::sigma)
        .def_property_readonly("gamma", &HartmannParams::gamma)
        .def_property_readonly("lambda_scale", &HartmannParams::lambda_scale);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def_static("from_labels", &QuantumNumbers::from_labels, py::arg("m"),
                    py::arg("params"), py::arg("nu_prime"), py::arg("n_prime"))
        .def_readonly("m", &QuantumNumbers::m)
        .def_readonly("capital_m", &QuantumNumbers::capital_m)
        .def_readonly("nu_prime", &QuantumNumbers::nu_prime)
        .def_readonly("l", &QuantumNumbers::l)
        .def_readonly("n_prime", &QuantumNumbers::n_prime)
        .def_readonly("n", &QuantumNumbers::n);

    m.def("magnetic_to_capital_m", &magnetic_to_capital_m, py::arg("m"),
          py::arg("params"));
    m.def("energy_scaled", &energy_scaled, py::arg("n"), py::arg("gamma"));
    m.def("energy_physical", &energy_physical, py::arg("n"), py::arg("params"));
    m.def("kappa", &kappa, py::arg("l"), py::arg("gamma"));
    m.def("allowed_l_values", &allowed_l_values, py::arg("n"),
          py::arg("capital_m"));

    // --- radial function algebra -------------------------------------------
    py::enum_<Ladder>(m, "Ladder")
        .value("plus", Ladder::plus)
        .value("minus", Ladder::minus);

    py::class_<RadialFunction>(m, "RadialFunction")
        .def(py::init([](double s, double kappa, const std::vector<double>& c) {
                 return RadialFunction(s, kappa, Polynomial(c));
             }),
             py::arg("s"), py::arg("kappa"), py::arg("coefficients"))
        .def_readonly("s", &RadialFunction::s)
        .def_readonly("kappa", &RadialFunction::kappa)
        .def_property_readonly("coefficients",
                               [](const RadialFunction& f) {
                                   return f.poly.coefficients();
                               })
        .def("is_zero", &RadialFunction::is_zero)
        .def("evaluate", &RadialFunction::evaluate, py::arg("r"))
        .def("__call__", &RadialFunction::evaluate, py::arg("r"))
        .def("__repr__", &radial_repr);

    m.def("differentiate", &differentiate, py::arg("f"));
    m.def("apply_ladder", &apply_ladder, py::arg("l"), py::arg("gamma"),
          py::arg("sign"), py::arg("f"));
    m.def("apply_radial_hamiltonian", &apply_radial_hamiltonian, py::arg("l"),
          py::arg("gamma"), py::arg("f"));
    m.def("linear_combination", &linear_combination, py::arg("a"), py::arg("f"),
          py::arg("b"), py::arg("g"));
    m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"));
    m.def("norm", &norm, py::arg("f"));
    m.def("normalize", &normalize, py::arg("f"));
    m.def("log_gamma", &log_gamma, py::arg("x"));

    // --- half-line formulation ----------------------------------------------
    m.def("superpotential", &superpotential, py::arg("l"), py::arg("gamma"),
          py::arg("r"));
    m.def("effective_potential", &effective_potential, py::arg("l"),
          py::arg("gamma"), py::arg("r"));
    m.def("ricatti_residual", &ricatti_residual, py::arg("l"), py::arg("gamma"),
          py::arg("r"));
    m.def("partner_potential", &partner_potential, py::arg("l"), py::arg("gamma"),
          py::arg("r"));
    m.def("level_shift", &level_shift, py::arg("l"), py::arg("gamma"));

    py::class_<HierarchyLevel>(m, "HierarchyLevel")
        .def_readonly("l", &HierarchyLevel::l)
        .def_readonly("gamma", &HierarchyLevel::gamma)
        .def_readonly("shift", &HierarchyLevel::shift)
        .def_readonly("ground_state", &HierarchyLevel::ground_state);
    m.def("hierarchy_level", &hierarchy_level, py::arg("l"), py::arg("gamma"));

    m.def("ground_state", &ground_state, py::arg("l"), py::arg("gamma"));
    m.def("build_eigenfunction", &build_eigenfunction, py::arg("n"), py::arg("l"),
          py::arg("gamma"));
    m.def("radial_wavefunction", &radial_wavefunction, py::arg("n"), py::arg("l"),
          py::arg("gamma"));

    py::class_<SpectrumRow>(m, "SpectrumRow")
        .def_readonly("n", &SpectrumRow::n)
        .def_readonly("l", &SpectrumRow::l)
        .def_readonly("energy_analytic", &SpectrumRow::energy_analytic)
        .def_readonly("energy_oracle", &SpectrumRow::energy_oracle)
        .def_readonly("builder_trace", &SpectrumRow::builder_trace);
    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("capital_m", &SpectrumReport::capital_m)
        .def_readonly("gamma", &SpectrumReport::gamma)
        .def_readonly("rows", &SpectrumReport::rows);
    m.def("spectrum", &spectrum, py::arg("capital_m"), py::arg("n_levels"),
          py::arg("gamma"));

    py::class_<AlgebraReport>(m, "AlgebraReport")
        .def_readonly("n_points", &AlgebraReport::n_points)
        .def_readonly("h", &AlgebraReport::h)
        .def_readonly("q_squared_norm", &AlgebraReport::q_squared_norm)
        .def_readonly("qdag_squared_norm", &AlgebraReport::qdag_squared_norm)
        .def_readonly("anticommutator_residual",
                      &AlgebraReport::anticommutator_residual)
        .def_readonly("commutator_rel_residual",
                      &AlgebraReport::commutator_rel_residual)
        .def_readonly("hss_norm", &AlgebraReport::hss_norm)
        .def_readonly("factorization_err", &AlgebraReport::factorization_err)
        .def_readonly("factorization_err_refined",
                      &AlgebraReport::factorization_err_refined)
        .def_readonly("factorization_order", &AlgebraReport::factorization_order)
        .def_property_readonly("passed",
                               [](const AlgebraReport& r) { return r.pass; });
    m.def("verify_susy_algebra", &verify_susy_algebra, py::arg("l"),
          py::arg("gamma"), py::arg("grid"));

    // --- full-line formulation ----------------------------------------------
    py::enum_<Sector>(m, "Sector")
        .value("bose", Sector::bose)
        .value("fermi", Sector::fermi);

    py::class_<MorseProblem>(m, "MorseProblem")
        .def(py::init<double, double, Sector>(), py::arg("n_label"),
             py::arg("delta"), py::arg("sector"))
        .def_readonly("n_label", &MorseProblem::n_label)
        .def_readonly("delta", &MorseProblem::delta)
        .def_readonly("sector", &MorseProblem::sector)
        .def_property_readonly("shift", &MorseProblem::shift)
        .def("potential", &MorseProblem::potential, py::arg("x"));

    m.def("to_morse_coordinates", &to_morse_coordinates, py::arg("gamma"),
          py::arg("r"));

    py::class_<LineFunction>(m, "LineFunction")
        .def_readonly("u", &LineFunction::u)
        .def_readonly("gamma", &LineFunction::gamma)
        .def("radius_at", &LineFunction::radius_at, py::arg("x"))
        .def("__call__", &LineFunction::operator(), py::arg("x"));
    m.def("transform_eigenfunction", &transform_eigenfunction, py::arg("u"),
          py::arg("gamma"));
    m.def("line_norm_squared", &line_norm_squared, py::arg("u"), py::arg("gamma"));

    m.def("susy_eigenvalue", &susy_eigenvalue, py::arg("n"), py::arg("l"));
    m.def("morse_superpotential", &morse_superpotential, py::arg("n"),
          py::arg("x"));
    m.def("morse_ricatti_residual", &morse_ricatti_residual, py::arg("n"),
          py::arg("x"));

    py::class_<MorsePartnerPotentials>(m, "MorsePartnerPotentials")
        .def_readonly("n_label", &MorsePartnerPotentials::n_label)
        .def("v1", &MorsePartnerPotentials::v1, py::arg("x"))
        .def("v2", &MorsePartnerPotentials::v2, py::arg("x"));
    m.def("morse_partner_potentials", &morse_partner_potentials, py::arg("n"));

    py::class_<PartnerMapResult>(m, "PartnerMapResult")
        .def_readonly("n_prime", &PartnerMapResult::n_prime)
        .def_readonly("delta_prime", &PartnerMapResult::delta_prime)
        .def_readonly("energy_check", &PartnerMapResult::energy_check);
    m.def("partner_map", &partner_map, py::arg("n"), py::arg("delta"));

    py::class_<IsospectralityReport>(m, "IsospectralityReport")
        .def_readonly("n_label", &IsospectralityReport::n_label)
        .def_readonly("bose_eigenvalues", &IsospectralityReport::bose_eigenvalues)
        .def_readonly("fermi_eigenvalues",
                      &IsospectralityReport::fermi_eigenvalues)
        .def_readonly("reference_eigenvalues",
                      &IsospectralityReport::reference_eigenvalues)
        .def_readonly("matched", &IsospectralityReport::matched)
        .def_readonly("missing_ground", &IsospectralityReport::missing_ground)
        .def_readonly("max_abs_mismatch", &IsospectralityReport::max_abs_mismatch)
        .def_readonly("max_reference_error",
                      &IsospectralityReport::max_reference_error)
        .def_readonly("tol", &IsospectralityReport::tol)
        .def_property_readonly(
            "passed", [](const IsospectralityReport& r) { return r.pass; });
    m.def("verify_partner_spectra", &verify_partner_spectra, py::arg("n"),
          py::arg("grid"), py::arg("tol") = 1e-3);

    // --- oracle --------------------------------------------------------------
    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"),
             py::arg("n_points"))
        .def_readonly("x_min", &Grid::x_min)
        .def_readonly("x_max", &Grid::x_max)
        .def_readonly("n_points", &Grid::n_points)
        .def_property_readonly("spacing", &Grid::spacing)
        .def("point", &Grid::point, py::arg("i"))
        .def("refined", &Grid::refined);

    py::class_<EigenResult>(m, "EigenResult")
        .def_readonly("eigenvalues", &EigenResult::eigenvalues)
        .def_readonly("eigenvectors", &EigenResult::eigenvectors)
        .def_readonly("convergence_estimate", &EigenResult::convergence_estimate)
        .def_readonly("truncated", &EigenResult::truncated);

    m.def("default_radial_grid", &default_radial_grid, py::arg("n"),
          py::arg("gamma"));
    m.def("default_morse_grid", &default_morse_grid, py::arg("n_label"));
    m.def("solve_radial", &solve_radial, py::arg("l"), py::arg("gamma"),
          py::arg("grid"), py::arg("k"), py::arg("tol") = 1e-4);
    m.def("solve_fullline", &solve_fullline, py::arg("potential"), py::arg("grid"),
          py::arg("k"),
          py::arg("bound_threshold") = std::numeric_limits<double>::infinity(),
          py::arg("tol") = 1e-3);
    m.def("quadrature", &quadrature, py::arg("f"), py::arg("a"), py::arg("b"));

    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("pairs", &MatchReport::pairs)
        .def_readonly("max_abs_mismatch", &MatchReport::max_abs_mismatch)
        .def_readonly("tol", &MatchReport::tol)
        .def_property_readonly("passed",
                               [](const MatchReport& r) { return r.pass; });
    m.def("compare_spectra", &compare_spectra, py::arg("a"), py::arg("b"),
          py::arg("drop_ground"), py::arg("tol"));
}
