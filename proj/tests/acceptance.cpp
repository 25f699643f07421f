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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fermicompress/circuits.hpp"
#include "fermicompress/cli.hpp"
#include "fermicompress/gaussian.hpp"
#include "fermicompress/models.hpp"
#include "fermicompress/pauli.hpp"
#include "fermicompress/planner.hpp"
#include "fermicompress/rng.hpp"
#include "fermicompress/simulator.hpp"
#include "fermicompress/sogroup.hpp"
#include "fermicompress/vqe.hpp"
#include "oracles.hpp"

using namespace fermicompress;
using Complex = std::complex<double>;

namespace {

// Pinned tolerances.
constexpr double kDiagonalizerTol = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr double kZeroModeTol = 1e-9;
constexpr double kCompressionTol = 1e-10;
constexpr double kPrepTol = 1e-12;
constexpr double kAnsatzTol = 1e-10;
constexpr double kRyTol = 1e-12;
constexpr double kVqeTol = 1e-6;
constexpr double kSampleSigmas = 5.0;
constexpr double kSlope = -0.5;
constexpr double kSlopeTol = 0.1;
constexpr double kScaleCrossCheckTol = 1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failed: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

QuadraticHamiltonian model_1d(ModelKind kind, Index n, Boundary b, std::map<std::string, double> couplings) {
  ModelSpec s;
  s.kind = kind;
  s.num_orbitals = n;
  s.boundary = b;
  s.couplings = std::move(couplings);
  return build_model(s);
}

QuadraticHamiltonian model_2d(Index rows, Index cols, Boundary b, std::map<std::string, double> couplings) {
  ModelSpec s;
  s.kind = ModelKind::TightBinding2D;
  s.rows = rows;
  s.cols = cols;
  s.boundary = b;
  s.couplings = std::move(couplings);
  return build_model(s);
}

struct Named {
  std::string name;
  QuadraticHamiltonian h;
};

// Benchmark models with n <= 8.
std::vector<Named> benchmark_models() {
  std::vector<Named> out;
  for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
    const std::string tag = b == Boundary::Open ? "open" : "periodic";
    for (Index n : {2, 4, 8}) {
      out.push_back({"tb1d n=" + std::to_string(n) + " " + tag,
                     model_1d(ModelKind::TightBinding1D, n, b, {{"t", 1.0}, {"mu", 0.5}, {"phase", 0.3}})});
    }
    out.push_back({"tb2d 2x2 " + tag, model_2d(2, 2, b, {{"t", 1.0}, {"mu", 0.2}})});
    out.push_back({"tb2d 2x4 " + tag, model_2d(2, 4, b, {{"t", 1.0}, {"mu", -0.4}, {"phase", 0.1}})});
    out.push_back({"kitaev n=8 " + tag,
                   model_1d(ModelKind::KitaevWire, 8, b, {{"t", 1.0}, {"delta", 0.6}, {"mu", 0.7}})});
    out.push_back({"ising n=8 " + tag, model_1d(ModelKind::TransverseIsing, 8, b, {{"J", 1.0}, {"g", 0.7}})});
  }
  out.push_back({"tb1d n=4 real", model_1d(ModelKind::TightBinding1D, 4, Boundary::Open, {{"t", 1.0}})});
  out.push_back({"kitaev n=4 sweet spot",
                 model_1d(ModelKind::KitaevWire, 4, Boundary::Open, {{"t", 1.0}, {"delta", 1.0}, {"mu", 0.0}})});
  out.push_back({"kitaev n=8 sweet spot",
                 model_1d(ModelKind::KitaevWire, 8, Boundary::Open, {{"t", 1.0}, {"delta", 1.0}, {"mu", 0.0}})});
  out.push_back({"ising n=4 anisotropic", model_1d(ModelKind::TransverseIsing, 4, Boundary::Open,
                                                   {{"J", 0.8}, {"g", 1.3}, {"anisotropy", 0.5}})});
  return out;
}

std::vector<std::string> all_words(int m) {
  std::vector<std::string> out{""};
  for (int q = 0; q < m; ++q) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

// 1. Commuting sets.
Outcome commuting_sets() {
  Check c;
  for (int m = 1; m <= 4; ++m) {
    const auto sets = enumerate_commuting_sets(m);
    const std::size_t n = std::size_t{1} << (m - 1);
    c.require(sets.size() == (std::size_t{1} << m) - 1, "set count at m=" + std::to_string(m));
    std::set<std::string> covered;
    for (const auto& set : sets) {
      c.require(set.words.size() == n, "set size " + set.pattern.str());
      std::vector<Eigen::MatrixXcd> mats;
      for (const auto& w : set.words) {
        mats.push_back(oracle::word_kron(w.str()));
        c.require(covered.insert(w.str()).second, "word in two sets: " + w.str());
        c.require(mats.back().transpose() == -mats.back(), "word not antisymmetric: " + w.str());
      }
      for (std::size_t a = 0; a < mats.size(); ++a) {
        for (std::size_t b = a + 1; b < mats.size(); ++b) {
          c.require(mats[a] * mats[b] == mats[b] * mats[a],
                    set.words[a].str() + " and " + set.words[b].str() + " do not commute");
        }
      }
    }
    std::set<std::string> odd_y;
    for (const auto& w : all_words(m)) {
      if (std::count(w.begin(), w.end(), 'Y') % 2 == 1) odd_y.insert(w);
    }
    c.require(covered == odd_y, "union differs from the odd-Y words at m=" + std::to_string(m));
  }
  return c.outcome("m=1..4: 2^m-1 sets of 2^(m-1) pairwise commuting words, union = all odd-Y words");
}

// 2. Element <-> set bijection.
Outcome element_set_bijection() {
  Check c;
  std::size_t pairs = 0;
  for (int m = 1; m <= 4; ++m) {
    const Index dim = Index{1} << m;
    std::set<std::pair<Index, Index>> seen;
    for (const auto& set : enumerate_commuting_sets(m)) {
      // Positions spanned by the words, from their dense matrices.
      std::set<std::pair<Index, Index>> nonzero;
      for (const auto& w : set.words) {
        const Eigen::MatrixXcd mat = oracle::word_kron(w.str());
        for (Index k = 0; k < dim; ++k) {
          for (Index l = k + 1; l < dim; ++l) {
            if (mat(k, l) != Complex(0, 0)) nonzero.insert({k, l});
          }
        }
      }
      const auto support = support_of_set(set.pattern);
      c.require(std::set<std::pair<Index, Index>>(support.begin(), support.end()) == nonzero,
                "support of " + set.pattern.str());
      for (const auto& kl : support) {
        c.require(set_of_element(kl.first, kl.second, m) == set.pattern, "round trip " + set.pattern.str());
        c.require(seen.insert(kl).second, "pair in two sets");
      }
    }
    c.require(static_cast<Index>(seen.size()) == dim * (dim - 1) / 2, "coverage at m=" + std::to_string(m));
    for (Index k = 0; k < dim; ++k) {
      for (Index l = k + 1; l < dim; ++l) {
        const auto s = support_of_set(set_of_element(k, l, m));
        c.require(std::find(s.begin(), s.end(), std::make_pair(k, l)) != s.end(), "element not in its set");
        ++pairs;
      }
    }
  }
  return c.outcome(std::to_string(pairs) + " pairs round-trip for m<=4");
}

// 3. Diagonalizer theorem with the signs stored in the plan.
Outcome diagonalizer_theorem() {
  Check c;
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    const Index dim = Index{1} << m;
    const MeasurementPlan plan = build_plan(oracle::random_hamiltonian(dim / 2, 7));
    c.require(plan.groups.size() == static_cast<std::size_t>(dim - 1), "dense plan size");
    for (const auto& group : plan.groups) {
      const Eigen::MatrixXcd v = oracle::circuit_matrix(group.circuit);
      for (const auto& e : group.entries) {
        const Eigen::MatrixXcd lhs = v * (oracle::unit(dim, e.l, e.k) - oracle::unit(dim, e.k, e.l)) * v.adjoint();
        const Eigen::MatrixXcd rhs = Complex(0, e.sign) * (oracle::unit(dim, e.l, e.l) - oracle::unit(dim, e.k, e.k));
        const double err = (lhs - rhs).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        c.require(err < kDiagonalizerTol, "element (" + std::to_string(e.k) + "," + std::to_string(e.l) + ")");
      }
      for (const auto& w : words_of_set(group.pattern)) {
        Eigen::MatrixXcd d = v * oracle::word_kron(w.str()) * v.adjoint();
        d.diagonal().setZero();
        const double err = d.cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        c.require(err < kDiagonalizerTol, "word " + w.str() + " not diagonalized");
      }
    }
  }
  return c.outcome(fmt("all patterns m<=4, max residual %.2e", worst));
}

// 4. Spectral oracle vs brute force.
Outcome oracle_cross_validation() {
  Check c;
  double worst = 0.0;
  auto compare = [&](const std::string& name, const QuadraticHamiltonian& h) {
    const double spectral = spectral_ground_energy(h).energy;
    const double brute = brute_force_ground_energy(h);
    const double dense = oracle::many_body_ground_energy(h.coefficients());
    const double err = std::max(std::abs(spectral - brute), std::abs(spectral - dense));
    worst = std::max(worst, err);
    c.require(err < kOracleTol, name);
  };
  std::size_t count = 0;
  for (const auto& m : benchmark_models()) {
    compare(m.name, m.h);
    ++count;
  }
  for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
    for (Index n : {2, 4}) {
      compare("ising", model_1d(ModelKind::TransverseIsing, n, b, {{"J", 1.0}, {"g", 0.4}}));
      compare("kitaev", model_1d(ModelKind::KitaevWire, n, b, {{"t", 0.9}, {"delta", 0.2}, {"mu", -0.5}}));
      count += 2;
    }
  }
  for (const auto& n : {4, 8}) {
    const auto spec = spectral_ground_energy(
        model_1d(ModelKind::KitaevWire, n, Boundary::Open, {{"t", 1.0}, {"delta", 1.0}, {"mu", 0.0}}));
    c.require(spec.mode_energies.front() < kZeroModeTol, "sweet-spot zero mode missing");
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Index n = Index{1} << (seed % 4);
    compare("random seed " + std::to_string(seed), oracle::random_hamiltonian(n, 1000 + seed));
    ++count;
  }
  return c.outcome(std::to_string(count) + " models incl. 50 random h, max |delta| " + fmt("%.2e", worst) +
                   ", sweet-spot zero modes present");
}

// 5. Matrix mode vs circuit-exact mode, and the vacuum energy.
Outcome compression_correctness() {
  Check c;
  double worst = 0.0;
  const std::vector<QuadraticHamiltonian> models{
      model_1d(ModelKind::TightBinding1D, 8, Boundary::Periodic, {{"t", 1.0}, {"mu", 0.5}, {"phase", 0.3}}),
      model_2d(2, 4, Boundary::Open, {{"t", 1.0}, {"mu", 0.2}}),
      model_1d(ModelKind::KitaevWire, 8, Boundary::Open, {{"t", 1.0}, {"delta", 0.6}, {"mu", 0.7}}),
      model_1d(ModelKind::TransverseIsing, 4, Boundary::Periodic, {{"J", 1.0}, {"g", 0.6}}),
      oracle::random_hamiltonian(8, 42),
  };
  for (std::size_t i = 0; i < models.size(); ++i) {
    ObjectiveConfig cm;
    ObjectiveConfig ce;
    ce.mode = ObjectiveMode::CircuitExact;
    for (int trial = 0; trial < 20; ++trial) {
      cm.parity_flip = ce.parity_flip = trial % 5 == 4;
      const Objective om(models[i], cm);
      const Objective oe(models[i], ce);
      const auto params = oracle::random_angles(om.num_parameters(), 100 * i + trial);
      const double err = std::abs(om.evaluate(params).energy - oe.evaluate(params).energy);
      worst = std::max(worst, err);
      c.require(err < kCompressionTol, "model " + std::to_string(i) + " trial " + std::to_string(trial));
    }
  }
  double vac_worst = 0.0;
  for (const auto& m : benchmark_models()) {
    const double expected = oracle::many_body_vacuum_energy(m.h.coefficients());
    for (ObjectiveMode mode : {ObjectiveMode::Matrix, ObjectiveMode::CircuitExact}) {
      ObjectiveConfig cfg;
      cfg.mode = mode;
      const Objective obj(m.h, cfg);
      const double err = std::abs(obj.evaluate(std::vector<double>(obj.num_parameters(), 0.0)).energy - expected);
      vac_worst = std::max(vac_worst, err);
      c.require(err < kCompressionTol, "vacuum energy " + m.name);
    }
  }
  return c.outcome(fmt("5 models x 20 parameter vectors, max |matrix - circuit| %.2e; vacuum max error %.2e", worst,
                       vac_worst));
}

// 6. Purified vacuum preparation.
Outcome state_prep() {
  Check c;
  double worst = 0.0;
  Eigen::MatrixXcd plus_y(2, 2);
  plus_y << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
  for (int m = 1; m <= 5; ++m) {
    const Index n = Index{1} << (m - 1);
    // Partial trace over the ancillas of the dense state vector.
    const Eigen::MatrixXcd u = oracle::circuit_matrix(prep_purified_vacuum(m));
    const Eigen::VectorXcd psi = u.col(0);
    const Index sys = Index{1} << m;
    const Index anc = Index{1} << (m - 1);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(sys, sys);
    for (Index a = 0; a < sys; ++a) {
      for (Index b = 0; b < sys; ++b) {
        for (Index e = 0; e < anc; ++e) rho(a, b) += psi(a * anc + e) * std::conj(psi(b * anc + e));
      }
    }
    const Eigen::MatrixXcd expected = oracle::kron(Eigen::MatrixXcd::Identity(n, n), plus_y) / static_cast<double>(n);
    const double d = oracle::trace_distance(rho, expected);
    worst = std::max(worst, d);
    c.require(d < kPrepTol, "m=" + std::to_string(m));
  }
  return c.outcome(fmt("m=1..5, max trace distance %.2e", worst));
}

// 7. Ansatz compilation and the RY identity.
Outcome ansatz_compilation() {
  Check c;
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    const Index dim = Index{1} << m;
    const auto layout = full_parameter_layout(m);
    for (int trial = 0; trial < 3; ++trial) {
      const bool flip = trial == 2;
      const RotationPlan plan = plan_from_layout(layout, oracle::random_angles(layout.size(), 70 + trial + 10 * m), flip);
      const Eigen::MatrixXcd u = oracle::circuit_matrix(compile_ansatz(plan, m));
      const Eigen::MatrixXd expected = oracle::givens_product(plan.rotations, dim);
      const Eigen::MatrixXd improper = flip ? Eigen::MatrixXd(parity_flip_matrix(dim) * expected) : expected;
      const double err = (u - improper.cast<Complex>()).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
      c.require(err < kAnsatzTol, "full layout m=" + std::to_string(m));
      c.require(std::abs(u.determinant() - Complex(flip ? -1.0 : 1.0, 0.0)) < 1e-9, "determinant");
    }
    // Every pair individually, covering all multi-bit differences.
    for (Index i = 0; i < dim; ++i) {
      for (Index j = i + 1; j < dim; ++j) {
        const RotationPlan single{{{i, j, 0.3 + 0.1 * static_cast<double>(i + j)}}, false};
        const Eigen::MatrixXcd u = oracle::circuit_matrix(compile_ansatz(single, m));
        const double err = (u - oracle::givens_product(single.rotations, dim).cast<Complex>()).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        c.require(err < kAnsatzTol, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  double ry_worst = 0.0;
  for (int m = 1; m <= 5; ++m) {
    for (int k = 0; k < m; ++k) {
      for (double theta : oracle::random_angles(10, 300 + 10 * m + k)) {
        const auto factors = ry_givens_decomposition(k, m, theta);
        c.require(factors.size() == (std::size_t{1} << (m - 1)), "factor count");
        const double err = (oracle::givens_product(factors, Index{1} << m) - oracle::rotation_on_qubit(k, m, theta))
                               .cwiseAbs()
                               .maxCoeff();
        ry_worst = std::max(ry_worst, err);
        c.require(err < kRyTol, "RY identity m=" + std::to_string(m));
      }
    }
  }
  return c.outcome(fmt("compiled vs Givens max %.2e (incl. parity flip, det -1); RY identity max %.2e", worst,
                       ry_worst));
}

// 8. Measurement-group counts.
Outcome measurement_counts() {
  Check c;
  int checked = 0;
  for (Index n = 4; n <= 256; n *= 2) {
    int m = 1;
    while ((Index{1} << (m - 1)) < n) ++m;
    const std::size_t bound = static_cast<std::size_t>(2 * (m - 1) + 1);
    for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
      const auto generic =
          build_plan(model_1d(ModelKind::TightBinding1D, n, b, {{"t", 1.0}, {"mu", 0.5}, {"phase", 0.3}}));
      c.require(generic.groups.size() == bound, "1D n=" + std::to_string(n) + " with mu and phase");
      const auto kitaev = build_plan(model_1d(ModelKind::KitaevWire, n, b, {{"t", 1.0}, {"delta", 0.5}, {"mu", 0.2}}));
      c.require(kitaev.groups.size() <= bound, "kitaev n=" + std::to_string(n));
      const auto real = build_plan(model_1d(ModelKind::TightBinding1D, n, b, {{"t", 1.0}}));
      c.require(real.groups.size() <= bound, "real 1D n=" + std::to_string(n));
      const auto ising = build_plan(model_1d(ModelKind::TransverseIsing, n, b, {{"J", 1.0}, {"g", 0.5}}));
      c.require(ising.groups.size() <= bound, "ising n=" + std::to_string(n));
      checked += 4;
    }
  }
  for (Index rows : {2, 4, 8, 16}) {
    for (Index cols : {2, 4, 8, 16}) {
      int log_n = 0;
      while ((Index{1} << log_n) < rows * cols) ++log_n;
      for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
        const auto plan = build_plan(model_2d(rows, cols, b, {{"t", 1.0}, {"mu", 0.3}, {"phase", 0.2}}));
        c.require(plan.groups.size() <= static_cast<std::size_t>(2 * log_n + 1),
                  "2D " + std::to_string(rows) + "x" + std::to_string(cols));
        ++checked;
      }
    }
  }
  for (int m = 1; m <= 6; ++m) {
    const Index n = Index{1} << (m - 1);
    c.require(build_plan(oracle::random_hamiltonian(n, 5)).groups.size() == static_cast<std::size_t>(2 * n - 1),
              "dense m=" + std::to_string(m));
    ++checked;
  }
  return c.outcome(std::to_string(checked) + " plans: 1D <= 2(m-1)+1 (equal with mu and phase), 2D <= 2log2(n)+1, "
                   "dense = 2n-1");
}

// 9. Variational ground states.
Outcome vqe_ground_states() {
  Check c;
  double worst = 0.0;
  std::string restricted;
  for (const auto& m : benchmark_models()) {
    const double oracle_energy = spectral_ground_energy(m.h).energy;
    const auto r = optimize(m.h, ObjectiveConfig{}, OptimizerConfig{});
    const double gap = std::abs(r.best_energy - oracle_energy);
    worst = std::max(worst, gap);
    c.require(gap < kVqeTol, m.name + fmt(" gap %.2e", gap));
    ObjectiveConfig rc;
    rc.ansatz = AnsatzKind::Restricted;
    const auto rr = optimize(m.h, rc, OptimizerConfig{});
    std::printf("      restricted ansatz %-22s energy % .8f oracle % .8f gap %.3e\n", m.name.c_str(), rr.best_energy,
                oracle_energy, rr.best_energy - oracle_energy);
  }
  return c.outcome(fmt("full ansatz within %.1e of the spectral oracle on every benchmark model (max gap %.2e)", kVqeTol,
                       worst));
}

// 10. Sampling statistics.
Outcome sampling_statistics() {
  Check c;
  const auto h = model_1d(ModelKind::KitaevWire, 8, Boundary::Open, {{"t", 1.0}, {"delta", 1.0}, {"mu", 0.0}});
  ObjectiveConfig exact_cfg;
  exact_cfg.mode = ObjectiveMode::CircuitExact;
  const Objective exact(h, exact_cfg);
  const auto params = oracle::random_angles(exact.num_parameters(), 2024, 0.5);
  const double e0 = exact.evaluate(params).energy;

  ObjectiveConfig cfg;
  cfg.mode = ObjectiveMode::CircuitSampled;
  cfg.shots = 100000;
  const ObjectiveValue one = Objective(h, cfg).evaluate(params, 99);
  const double z = std::abs(one.energy - e0) / one.std_error;
  c.require(z < kSampleSigmas, fmt("1e5 shots off by %.2f standard errors", z));

  std::vector<double> xs, ys;
  for (std::uint64_t shots : {1000, 10000, 100000}) {
    cfg.shots = shots;
    const Objective obj(h, cfg);
    const auto probs = obj.group_probabilities(params);
    const std::vector<std::uint64_t> alloc = allocate_shots(obj.plan(), shots, cfg.allocation);
    double sq = 0.0;
    for (std::uint64_t s = 0; s < 30; ++s) {
      std::vector<ShotCounts> counts;
      for (std::size_t g = 0; g < probs.size(); ++g) counts.push_back(sample(probs[g], alloc[g], derive_seed(s, g)));
      const double err = estimate_energy(obj.plan(), counts).energy - e0;
      sq += err * err;
    }
    xs.push_back(std::log(static_cast<double>(shots)));
    ys.push_back(std::log(std::sqrt(sq / 30.0)));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3.0;
  const double my = (ys[0] + ys[1] + ys[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  c.require(std::abs(slope - kSlope) <= kSlopeTol, fmt("slope %.3f", slope));
  return c.outcome(fmt("1e5 shots within %.2f standard errors; RMS-error slope %.3f over 30 seeds", z, slope));
}

// 11. Scale demonstration at n = 1024.
Outcome scale_demonstration() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto h =
      model_1d(ModelKind::TightBinding1D, 1024, Boundary::Periodic, {{"t", 1.0}, {"mu", 0.5}, {"phase", 0.3}});
  ObjectiveConfig cfg;
  cfg.mode = ObjectiveMode::CircuitExact;
  cfg.ansatz = AnsatzKind::Restricted;
  OptimizerConfig opt;
  opt.budget = 300;
  opt.parity = ParityChoice::Even;
  opt.restarts = 0;
  const Objective objective(h, cfg);
  const std::size_t groups = objective.plan().groups.size();
  c.require(groups <= 21, "uses " + std::to_string(groups) + " groups");
  c.require(prep_purified_vacuum(h.num_qubits()).width() == 21, "purified width");
  const auto r = optimize(h, cfg, opt);
  ObjectiveConfig matrix_cfg = cfg;
  matrix_cfg.mode = ObjectiveMode::Matrix;
  const double matrix = Objective(h, matrix_cfg).evaluate(r.best_params).energy;
  c.require(std::abs(matrix - r.best_energy) < kScaleCrossCheckTol, fmt("circuit %.12f vs matrix %.12f", r.best_energy, matrix));
  const double vac = objective.evaluate(std::vector<double>(objective.num_parameters(), 0.0)).energy;
  c.require(r.best_energy <= vac, "optimizer ended above the vacuum");
  const double oracle_energy = spectral_ground_energy(h).energy;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c.outcome("n=1024, width 21, " + std::to_string(groups) + " groups, " + std::to_string(r.evaluations) +
                   " evaluations" + fmt(", restricted energy %.6f (vacuum %.6f) vs oracle %.6f", r.best_energy, vac,
                                        oracle_energy) +
                   fmt(", %.1f s", seconds));
}

// 12. Determinism.
Outcome determinism() {
  Check c;
  auto config = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  const std::string sampled =
      "[model]\nkind = kitaev_wire\nn = 8\n[couplings]\nt = 1\ndelta = 1\n"
      "[objective]\nmode = circuit_sampled\nansatz = restricted\nshots = 5000\nseed = 17\n"
      "[optimizer]\nname = spsa\nbudget = 60\n";
  const std::string exact = "[model]\nkind = tight_binding_1d\nn = 4\n[couplings]\nmu = 0.3\nphase = 0.2\n"
                            "[objective]\nmode = circuit_exact\nseed = 5\n[optimizer]\nbudget = 3000\n";
  auto strip = [](nlohmann::json j) {
    j.erase("wall_time_ms");
    return j.dump();
  };
  for (const auto& text : {sampled, exact}) {
    RunConfig cfg = config(text);
    const auto first = cmd_solve(cfg);
    const auto second = cmd_solve(cfg);
    c.require(strip(first) == strip(second), "solve output differs between runs");
    cfg.objective.base_seed = first["seed"].get<std::uint64_t>();
    c.require(strip(cmd_solve(cfg)) == strip(first), "re-run from the embedded seed differs");
  }
  RunConfig cfg = config(sampled);
  cfg.params = {0.2, -0.1, 0.4, 0.05};
  c.require(cmd_sample(cfg).dump() == cmd_sample(cfg).dump(), "sample counts differ between runs");
  cfg.objective.base_seed = 18;
  const auto other = cmd_sample(cfg).dump();
  cfg.objective.base_seed = 17;
  c.require(other != cmd_sample(cfg).dump(), "seed has no effect on counts");
  return c.outcome("solve JSON (modulo wall_time_ms) and sample counts byte-identical across runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"commuting-set theorem", commuting_sets},
      {"element-set bijection", element_set_bijection},
      {"diagonalizer theorem", diagonalizer_theorem},
      {"oracle cross-validation", oracle_cross_validation},
      {"compression correctness", compression_correctness},
      {"purified state preparation", state_prep},
      {"ansatz compilation", ansatz_compilation},
      {"measurement-group counts", measurement_counts},
      {"variational ground states", vqe_ground_states},
      {"sampling statistics", sampling_statistics},
      {"scale demonstration n=1024", scale_demonstration},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%2zu] %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
