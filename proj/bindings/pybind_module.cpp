// Copyright 2026 the greedylab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greedylab/condest.hpp"
#include "greedylab/gauge.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/suites.hpp"

namespace py = pybind11;
using namespace greedylab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "sequence-space norms, block gauges, and conditionality constants";

  py::class_<Weight>(m, "Weight")
      .def_static("power", &Weight::power, py::arg("exponent"))
      .def_static("lorentz_classical", &Weight::lorentz_classical, py::arg("p"),
                  py::arg("q"))
      .def_static("explicit_list", &Weight::explicit_list, py::arg("entries"))
      .def("at", &Weight::at, py::arg("m"))
      .def("partial_sum", &Weight::partial_sum, py::arg("m"))
      .def("__repr__", &Weight::describe);

  py::class_<SymSpace>(m, "SymSpace")
      .def_static("lp", &SymSpace::lp, py::arg("p"))
      .def_static("c0", &SymSpace::c0)
      .def_static("lorentz", &SymSpace::lorentz, py::arg("q"), py::arg("weight"))
      .def_static("weak_lorentz", &SymSpace::weak_lorentz, py::arg("weight"))
      .def_static("variation", &SymSpace::variation)
      .def("norm", &SymSpace::norm, py::arg("f"))
      .def("subsymmetric", &SymSpace::subsymmetric)
      .def("fundamental_lambda", &SymSpace::lambda, py::arg("m"))
      .def("lambda_star", &SymSpace::lambda_star, py::arg("m"))
      .def("__repr__", &SymSpace::describe);

  py::class_<BasisRep>(m, "BasisRep")
      .def_readonly("name", &BasisRep::name)
      .def("norm", &BasisRep::norm, py::arg("coeffs"))
      .def("vector_norm",
           [](const BasisRep& b, std::size_t j) { return b.vector_norm(j); },
           py::arg("j"))
      .def("coeff_functional_bound",
           [](const BasisRep& b, std::size_t dim) {
             return b.coeff_functional_bound(dim);
           },
           py::arg("dim"));

  m.def("unit_vector_basis", &unit_vector_basis, py::arg("space"));
  m.def("summing_basis", &summing_basis);
  m.def("difference_basis", &difference_basis);
  m.def("direct_sum", &direct_sum, py::arg("b0"), py::arg("b1"));
  m.def("block_repeat", &block_repeat, py::arg("b0"), py::arg("copies"),
        py::arg("p"));
  m.def("repeat_schedule_ratio", &repeat_schedule_ratio, py::arg("copies"));

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<std::size_t>>(), py::arg("block_sizes"))
      .def_static("dyadic", &Partition::dyadic, py::arg("blocks"))
      .def("blocks", &Partition::blocks)
      .def("total", &Partition::total)
      .def("cumulative", &Partition::cumulative, py::arg("r"))
      .def("c_sigma", &Partition::c_sigma)
      .def("c_sigma_shift", &Partition::c_sigma_shift)
      .def("log_growth", &Partition::log_growth)
      .def("__repr__", &Partition::describe);

  m.def("rearrange_nonincreasing", &rearrange_nonincreasing, py::arg("f"));
  m.def("avg_projection", &avg_projection, py::arg("f"), py::arg("partition"));
  m.def("q_projection", &q_projection, py::arg("f"), py::arg("partition"));
  m.def("lifting_L", &lifting_L, py::arg("f"));
  m.def("retraction_T", &retraction_T, py::arg("f"));

  py::class_<DualBound>(m, "DualBound")
      .def_readonly("value", &DualBound::value)
      .def_readonly("exact", &DualBound::exact)
      .def_readonly("witness", &DualBound::witness);
  m.def("dual_norm_lb", &dual_norm_lb, py::arg("space"), py::arg("g"),
        py::arg("budget") = 128, py::arg("seed") = 1);

  m.def(
      "check_lrp",
      [](const std::function<double(std::size_t)>& lam, unsigned b_max,
         std::size_t m_max) { return check_lrp(lam, b_max, m_max); },
      py::arg("lam"), py::arg("b_max") = 64, py::arg("m_max") = 10000);
  m.def(
      "check_urp",
      [](const std::function<double(std::size_t)>& lam, unsigned b_max,
         std::size_t m_max) { return check_urp(lam, b_max, m_max); },
      py::arg("lam"), py::arg("b_max") = 64, py::arg("m_max") = 10000);
  m.def(
      "dini_constant",
      [](const std::function<double(std::size_t)>& lam, std::size_t m_max) {
        return dini_constant(lam, m_max);
      },
      py::arg("lam"), py::arg("m_max") = 10000);

  py::class_<EmbeddingCheck>(m, "EmbeddingCheck")
      .def_readonly("lower_ok", &EmbeddingCheck::lower_ok)
      .def_readonly("upper_ok", &EmbeddingCheck::upper_ok)
      .def_readonly("w_upper_ok", &EmbeddingCheck::w_upper_ok)
      .def_readonly("w_upper_checked", &EmbeddingCheck::w_upper_checked)
      .def_readonly("weak_lorentz_norm", &EmbeddingCheck::weak_lorentz_norm)
      .def_readonly("lorentz_wprime_norm", &EmbeddingCheck::lorentz_wprime_norm)
      .def_readonly("lorentz_w_norm", &EmbeddingCheck::lorentz_w_norm)
      .def_readonly("gauge_norm", &EmbeddingCheck::gauge_norm)
      .def_readonly("lower_slack", &EmbeddingCheck::lower_slack)
      .def_readonly("upper_slack", &EmbeddingCheck::upper_slack)
      .def_readonly("w_upper_slack", &EmbeddingCheck::w_upper_slack);

  py::class_<GaugeConstants>(m, "GaugeConstants")
      .def_readonly("c1", &GaugeConstants::c1)
      .def_readonly("c2", &GaugeConstants::c2)
      .def_readonly("c3", &GaugeConstants::c3)
      .def_readonly("c4", &GaugeConstants::c4)
      .def_readonly("kappa", &GaugeConstants::kappa)
      .def_readonly("nu_max", &GaugeConstants::nu_max)
      .def_readonly("nu_min", &GaugeConstants::nu_min)
      .def_readonly("c_a", &GaugeConstants::c_a)
      .def_readonly("l1_route", &GaugeConstants::l1_route)
      .def_readonly("applicable", &GaugeConstants::applicable)
      .def_readonly("has_lrp", &GaugeConstants::has_lrp)
      .def_readonly("c_d", &GaugeConstants::c_d)
      .def_readonly("note", &GaugeConstants::note);

  py::class_<TailProjectionCheck>(m, "TailProjectionCheck")
      .def_readonly("bound_ok", &TailProjectionCheck::bound_ok)
      .def_readonly("per_block_ok", &TailProjectionCheck::per_block_ok)
      .def_readonly("q_estimate_ok", &TailProjectionCheck::q_estimate_ok)
      .def_readonly("l1_block_ok", &TailProjectionCheck::l1_block_ok)
      .def_readonly("ratio", &TailProjectionCheck::ratio)
      .def_readonly("c_a", &TailProjectionCheck::c_a)
      .def_readonly("worst_slack", &TailProjectionCheck::worst_slack);

  py::class_<GaugeSpace>(m, "GaugeSpace")
      .def(py::init<BasisRep, SymSpace, Partition>(), py::arg("basis"),
           py::arg("space"), py::arg("partition"))
      .def("dim", &GaugeSpace::dim)
      .def("norm", &GaugeSpace::norm, py::arg("f"))
      .def("v_coeffs", &GaugeSpace::v_coeffs, py::arg("f"))
      .def("unit_block_vector", &GaugeSpace::unit_block_vector, py::arg("r"))
      .def("h_map", &GaugeSpace::h_map, py::arg("f"))
      .def("g_map", &GaugeSpace::g_map, py::arg("g"), py::arg("h"))
      .def("commuting_defect", &GaugeSpace::commuting_defect, py::arg("f"),
           py::arg("block_ids"))
      .def("embedding_check", &GaugeSpace::embedding_check, py::arg("f"))
      .def("constants", &GaugeSpace::constants)
      .def("tail_projection_check", &GaugeSpace::tail_projection_check,
           py::arg("f"), py::arg("a"))
      .def("partition", &GaugeSpace::partition,
           py::return_value_policy::reference_internal)
      .def("space", &GaugeSpace::space,
           py::return_value_policy::reference_internal)
      .def("__repr__", &GaugeSpace::describe);

  py::class_<SearchBudget>(m, "SearchBudget")
      .def(py::init<>())
      .def_readwrite("random_sets", &SearchBudget::random_sets)
      .def_readwrite("starts", &SearchBudget::starts)
      .def_readwrite("sweeps", &SearchBudget::sweeps)
      .def_readwrite("line_evals", &SearchBudget::line_evals);

  py::class_<ProjNormResult>(m, "ProjNormResult")
      .def_readonly("value", &ProjNormResult::value)
      .def_readonly("exact", &ProjNormResult::exact)
      .def_readonly("witness_f", &ProjNormResult::witness_f)
      .def_readonly("witness_set", &ProjNormResult::witness_set);

  m.def("proj_operator_norm", &proj_operator_norm, py::arg("basis"),
        py::arg("a"), py::arg("dim"), py::arg("budget") = SearchBudget{},
        py::arg("seed") = 1);
  m.def("compute_L_m", &compute_L_m, py::arg("basis"), py::arg("m"),
        py::arg("exact"), py::arg("budget") = SearchBudget{},
        py::arg("seed") = 1,
        py::arg("extra") = std::vector<WitnessCandidate>{});
  m.def("compute_k_m", &compute_k_m, py::arg("basis"), py::arg("m"),
        py::arg("dim"), py::arg("exact"), py::arg("budget") = SearchBudget{},
        py::arg("seed") = 1);
  m.def("gauge_unit_basis", &gauge_unit_basis, py::arg("y"),
        py::keep_alive<0, 1>());
  m.def("gauge_witness_lower_bound", &gauge_witness_lower_bound, py::arg("y"),
        py::arg("r"), py::arg("budget") = SearchBudget{}, py::arg("seed") = 1);
  m.def("block_witness_vector", &block_witness_vector, py::arg("y"),
        py::arg("seed_coeffs"));

  py::class_<GrowthFit>(m, "GrowthFit")
      .def_readonly("slope", &GrowthFit::slope)
      .def_readonly("intercept", &GrowthFit::intercept)
      .def_readonly("residual", &GrowthFit::residual);
  m.def("log_growth_fit", &log_growth_fit, py::arg("table"),
        py::arg("log_power") = 1.0);

  m.def("greedy_set", &greedy_set, py::arg("f"), py::arg("m"));

  py::class_<QgEstimate>(m, "QgEstimate")
      .def_readonly("max_residual_ratio", &QgEstimate::max_residual_ratio)
      .def_readonly("max_projection_ratio", &QgEstimate::max_projection_ratio)
      .def_readonly("max_partial_sum_ratio", &QgEstimate::max_partial_sum_ratio);
  py::class_<PhiResult>(m, "PhiResult")
      .def_readonly("value", &PhiResult::value)
      .def_readonly("exact", &PhiResult::exact)
      .def_readonly("upper_bound", &PhiResult::upper_bound)
      .def_readonly("witness_set", &PhiResult::witness_set);
  py::class_<SuperDemocracyResult>(m, "SuperDemocracyResult")
      .def_readonly("ratio", &SuperDemocracyResult::ratio)
      .def_readonly("exact", &SuperDemocracyResult::exact)
      .def_readonly("cap", &SuperDemocracyResult::cap);

  m.def("qg_ratio_estimate",
        [](const SymSpace& s, std::size_t dim, std::size_t trials,
           std::uint64_t seed) {
          return qg_ratio_estimate(NormHandle::of(s), dim, trials, seed);
        },
        py::arg("normer"), py::arg("dim"), py::arg("trials"), py::arg("seed") = 1);
  m.def("qg_ratio_estimate_gauge",
        [](const GaugeSpace& y, std::size_t dim, std::size_t trials,
           std::uint64_t seed) {
          return qg_ratio_estimate(NormHandle::of(y), dim, trials, seed);
        },
        py::arg("normer"), py::arg("dim"), py::arg("trials"), py::arg("seed") = 1);
  m.def("fundamental_phi",
        [](const SymSpace& s, std::size_t mm, std::size_t dim, bool exact,
           std::size_t budget, std::uint64_t seed) {
          return fundamental_phi(NormHandle::of(s), mm, dim, exact, budget, seed);
        },
        py::arg("normer"), py::arg("m"), py::arg("dim"), py::arg("exact") = false,
        py::arg("budget") = 64, py::arg("seed") = 1);
  m.def("fundamental_phi_gauge",
        [](const GaugeSpace& y, std::size_t mm, std::size_t dim, bool exact,
           std::size_t budget, std::uint64_t seed) {
          return fundamental_phi(NormHandle::of(y), mm, dim, exact, budget, seed);
        },
        py::arg("normer"), py::arg("m"), py::arg("dim"), py::arg("exact") = false,
        py::arg("budget") = 64, py::arg("seed") = 1);
  m.def("superdemocracy_ratio",
        [](const SymSpace& s, std::size_t mm, std::size_t dim,
           std::size_t trials, std::uint64_t seed) {
          return superdemocracy_ratio(NormHandle::of(s), mm, dim, trials, seed);
        },
        py::arg("normer"), py::arg("m"), py::arg("dim"), py::arg("trials"),
        py::arg("seed") = 1);
  m.def("superdemocracy_ratio_gauge",
        [](const GaugeSpace& y, std::size_t mm, std::size_t dim,
           std::size_t trials, std::uint64_t seed) {
          return superdemocracy_ratio(NormHandle::of(y), mm, dim, trials, seed);
        },
        py::arg("normer"), py::arg("m"), py::arg("dim"), py::arg("trials"),
        py::arg("seed") = 1);
  m.def("almost_greedy_ratio_smallcase",
        [](const SymSpace& s, std::size_t dim, std::size_t trials,
           std::uint64_t seed) {
          return almost_greedy_ratio_smallcase(NormHandle::of(s), dim, trials, seed);
        },
        py::arg("normer"), py::arg("dim"), py::arg("trials"), py::arg("seed") = 1);
  m.def("almost_greedy_ratio_smallcase_gauge",
        [](const GaugeSpace& y, std::size_t dim, std::size_t trials,
           std::uint64_t seed) {
          return almost_greedy_ratio_smallcase(NormHandle::of(y), dim, trials, seed);
        },
        py::arg("normer"), py::arg("dim"), py::arg("trials"), py::arg("seed") = 1);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("samples", &SweepResult::samples)
      .def_readonly("violations", &SweepResult::violations)
      .def_readonly("worst_slack", &SweepResult::worst_slack)
      .def_readonly("max_ratio", &SweepResult::max_ratio);
  m.def("averaging_projection_sweep", &averaging_projection_sweep,
        py::arg("space"), py::arg("partition"), py::arg("dim"),
        py::arg("trials"), py::arg("seed") = 1);
  m.def("sandwich_sweep", &sandwich_sweep, py::arg("y"), py::arg("trials"),
        py::arg("seed") = 1);
  m.def("embedding_sweep", &embedding_sweep, py::arg("y"), py::arg("trials"),
        py::arg("seed") = 1);
  m.def("commuting_sweep", &commuting_sweep, py::arg("y"), py::arg("trials"),
        py::arg("seed") = 1, py::arg("tol") = 1e-12);
  m.def("roundtrip_sweep", &roundtrip_sweep, py::arg("y"), py::arg("trials"),
        py::arg("seed") = 1, py::arg("tol") = 1e-12);
  m.def("tail_projection_sweep", &tail_projection_sweep, py::arg("y"),
        py::arg("trials"), py::arg("seed") = 1);
}
