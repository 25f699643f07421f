// Copyright 2026 The fermicompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermicompress/circuits.hpp"
#include "fermicompress/cli.hpp"
#include "fermicompress/errors.hpp"
#include "fermicompress/gaussian.hpp"
#include "fermicompress/models.hpp"
#include "fermicompress/pauli.hpp"
#include "fermicompress/planner.hpp"
#include "fermicompress/simulator.hpp"
#include "fermicompress/vqe.hpp"

namespace py = pybind11;
namespace fc = fermicompress;

namespace {

fc::ObjectiveConfig objective_config(const std::string& mode, const std::string& ansatz, std::uint64_t shots,
                                     std::uint64_t seed, bool parity_flip) {
  fc::ObjectiveConfig c;
  c.mode = fc::parse_objective_mode(mode);
  c.ansatz = fc::parse_ansatz_kind(ansatz);
  c.shots = shots;
  c.base_seed = seed;
  c.parity_flip = parity_flip;
  return c;
}

}  // namespace

PYBIND11_MODULE(_fermicompress, m) {
  m.doc() = "Compressed simulation of free-fermion Hamiltonians on log(n) + 1 qubits.";
  py::register_exception<fc::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<fc::QuadraticHamiltonian>(m, "QuadraticHamiltonian")
      .def(py::init<Eigen::MatrixXd>(), py::arg("h"))
      .def_property_readonly("coefficients", &fc::QuadraticHamiltonian::coefficients)
      .def_property_readonly("num_orbitals", &fc::QuadraticHamiltonian::num_orbitals)
      .def_property_readonly("num_qubits", &fc::QuadraticHamiltonian::num_qubits);

  m.def(
      "build_model",
      [](const std::string& kind, fc::Index n, fc::Index rows, fc::Index cols, const std::string& boundary, bool pad,
         const std::map<std::string, double>& couplings) {
        fc::ModelSpec spec;
        spec.kind = fc::parse_model_kind(kind);
        spec.num_orbitals = n;
        spec.rows = rows;
        spec.cols = cols;
        spec.boundary = fc::parse_boundary(boundary);
        spec.pad_to_power_of_two = pad;
        spec.couplings = couplings;
        return fc::build_model(spec);
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("rows") = 0, py::arg("cols") = 0, py::arg("boundary") = "open",
      py::arg("pad") = false, py::arg("couplings") = std::map<std::string, double>{});

  m.def(
      "spectral_ground_energy",
      [](const fc::QuadraticHamiltonian& h) {
        const auto r = fc::spectral_ground_energy(h);
        return py::make_tuple(r.energy, r.mode_energies);
      },
      py::arg("hamiltonian"), "Returns (energy, mode_energies).");
  m.def(
      "brute_force_ground_energy",
      [](const fc::QuadraticHamiltonian& h, fc::Index max_orbitals) {
        return fc::brute_force_ground_energy(h, max_orbitals);
      },
      py::arg("hamiltonian"), py::arg("max_orbitals") = fc::kDefaultBruteForceMaxOrbitals);
  m.def("vacuum_energy", &fc::brute_force_vacuum_energy, py::arg("hamiltonian"));

  m.def(
      "commuting_sets",
      [](int num_qubits) {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& set : fc::enumerate_commuting_sets(num_qubits)) {
          std::vector<std::string> words;
          for (const auto& w : set.words) words.push_back(w.str());
          out.emplace_back(set.pattern.str(), std::move(words));
        }
        return out;
      },
      py::arg("num_qubits"), "List of (pattern, words) for every commuting set.");

  m.def(
      "diagonalizer",
      [](const std::string& pattern) { return fc::diagonalizer(fc::AxisPattern::parse(pattern)).dump(); },
      py::arg("pattern"), "Text dump of the diagonalizing circuit.");

  m.def(
      "plan_json",
      [](const fc::QuadraticHamiltonian& h) { return fc::plan_to_json(fc::build_plan(h)).dump(); },
      py::arg("hamiltonian"));

  m.def(
      "evaluate",
      [](const fc::QuadraticHamiltonian& h, const std::vector<double>& params, const std::string& mode,
         const std::string& ansatz, std::uint64_t shots, std::uint64_t seed, bool parity_flip) {
        const auto v = fc::evaluate_objective(h, params, objective_config(mode, ansatz, shots, seed, parity_flip));
        return py::make_tuple(v.energy, v.std_error);
      },
      py::arg("hamiltonian"), py::arg("params"), py::arg("mode") = "matrix", py::arg("ansatz") = "full",
      py::arg("shots") = 10000, py::arg("seed") = 0, py::arg("parity_flip") = false,
      "Returns (energy, standard_error).");

  m.def(
      "num_parameters",
      [](const fc::QuadraticHamiltonian& h, const std::string& ansatz) {
        return fc::Objective(h, objective_config("matrix", ansatz, 1, 0, false)).num_parameters();
      },
      py::arg("hamiltonian"), py::arg("ansatz") = "full");

  m.def(
      "optimize",
      [](const fc::QuadraticHamiltonian& h, const std::string& mode, const std::string& ansatz,
         const std::string& optimizer, std::uint64_t budget, std::uint64_t shots, std::uint64_t seed,
         const std::string& parity) {
        fc::OptimizerConfig opt;
        opt.kind = fc::parse_optimizer_kind(optimizer);
        opt.budget = budget;
        opt.parity = fc::parse_parity_choice(parity);
        const auto r = fc::optimize(h, objective_config(mode, ansatz, shots, seed, false), opt);
        py::dict out;
        out["energy"] = r.best_energy;
        out["stderr"] = r.best_std_error;
        out["params"] = r.best_params;
        out["parity_flip"] = r.parity_flip;
        out["evaluations"] = r.evaluations;
        out["budget_exhausted"] = r.budget_exhausted;
        return out;
      },
      py::arg("hamiltonian"), py::arg("mode") = "matrix", py::arg("ansatz") = "full",
      py::arg("optimizer") = "coordinate_descent", py::arg("budget") = fc::OptimizerConfig{}.budget, py::arg("shots") = 10000,
      py::arg("seed") = 0, py::arg("parity") = "auto");

  m.def(
      "sample",
      [](const std::vector<double>& probabilities, std::uint64_t shots, std::uint64_t seed) {
        return fc::sample(probabilities, shots, seed).counts;
      },
      py::arg("probabilities"), py::arg("shots"), py::arg("seed"), "Outcome index -> count.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"fermicompress"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = fc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
