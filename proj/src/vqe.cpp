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

#include "fermicompress/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fermicompress/rng.hpp"

namespace fermicompress {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

Gate full_parity_flip(int num_qubits) {
  if (num_qubits == 1) return Gate::x(0);
  std::vector<int> controls(num_qubits - 1);
  std::iota(controls.begin(), controls.end(), 0);
  return Gate::mcx(std::move(controls), num_qubits - 1);
}

bool is_zero(const QuadraticHamiltonian& h) { return h.coefficients().isZero(0.0); }

struct BudgetExhausted {};

// Counts evaluations against the budget and remembers the best point seen.
class Evaluator {
 public:
  Evaluator(const Objective& objective, std::uint64_t budget, std::uint64_t seed)
      : objective_(objective), budget_(budget), seed_(seed) {}

  ObjectiveValue operator()(const std::vector<double>& x) {
    if (used_ >= budget_) throw BudgetExhausted{};
    const ObjectiveValue v = objective_.evaluate(x, derive_seed(seed_, used_));
    ++used_;
    if (v.energy < best_.energy || best_x_.empty()) {
      best_ = v;
      best_x_ = x;
    }
    return v;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return budget_ - used_; }
  const ObjectiveValue& best() const { return best_; }
  const std::vector<double>& best_x() const { return best_x_; }

 private:
  const Objective& objective_;
  std::uint64_t budget_;
  std::uint64_t seed_;
  std::uint64_t used_ = 0;
  ObjectiveValue best_{std::numeric_limits<double>::infinity(), 0.0};
  std::vector<double> best_x_;
};

struct RunState {
  Evaluator& eval;
  std::vector<TracePoint>& trace;
  std::uint64_t& iteration;
  bool sampled;

  void record(const ObjectiveValue& current, double step) {
    const ObjectiveValue& v = sampled ? current : eval.best();
    trace.push_back({iteration++, v.energy, v.std_error, step});
  }
};

// Minimizes f along coordinate i of x, starting from the known value fx.
double line_search(RunState& run, std::vector<double>& x, std::size_t i, double fx, const OptimizerConfig& opt) {
  const double origin = x[i];
  auto f = [&](double t) {
    x[i] = t;
    return run.eval(x).energy;
  };
  const int points = std::max(opt.grid_points, 3);
  const double spacing = 2.0 * kPi / points;
  // Grid over [origin - pi, origin + pi); offset 0 is the current point.
  std::vector<double> grid(points);
  std::size_t best = 0;
  for (int j = 0; j < points; ++j) {
    const int offset = j - points / 2;
    grid[j] = offset == 0 ? fx : f(origin + offset * spacing);
    if (grid[j] < grid[best]) best = j;
  }
  double best_t = origin + (static_cast<int>(best) - points / 2) * spacing;
  double best_f = grid[best];
  double a = best_t - spacing;
  double b = best_t + spacing;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > opt.angle_tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best_f) {
    best_f = fc;
    best_t = c;
  }
  if (fd < best_f) {
    best_f = fd;
    best_t = d;
  }
  if (best_f < fx) {
    x[i] = best_t;
    return best_f;
  }
  x[i] = origin;
  return fx;
}

void coordinate_descent(RunState& run, std::vector<double> x, const OptimizerConfig& opt) {
  double fx = run.eval(x).energy;
  run.record({fx, 0.0}, 0.0);
  for (;;) {
    const double start = fx;
    const std::vector<double> before = x;
    for (std::size_t i = 0; i < x.size(); ++i) fx = line_search(run, x, i, fx, opt);
    double step = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) step = std::max(step, std::abs(x[i] - before[i]));
    run.record({fx, 0.0}, step);
    if (start - fx < opt.tolerance) return;
  }
}

void spsa(RunState& run, std::vector<double> x, const OptimizerConfig& opt, std::uint64_t seed,
          std::vector<double>& final_x) {
  Rng rng(seed);
  const std::size_t p = x.size();
  std::vector<double> delta(p), plus(p), minus(p);
  for (std::uint64_t k = 0; run.eval.remaining() >= 2; ++k) {
    const double ak = opt.spsa_a / std::pow(static_cast<double>(k) + 1.0 + opt.spsa_big_a, 0.602);
    const double ck = opt.spsa_c / std::pow(static_cast<double>(k) + 1.0, 0.101);
    for (std::size_t i = 0; i < p; ++i) {
      delta[i] = (rng.next() >> 63) ? 1.0 : -1.0;
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const ObjectiveValue fp = run.eval(plus);
    const ObjectiveValue fm = run.eval(minus);
    const double slope = (fp.energy - fm.energy) / (2.0 * ck);
    double step = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      const double move = ak * slope / delta[i];
      x[i] -= move;
      step = std::max(step, std::abs(move));
    }
    const double se = 0.5 * std::hypot(fp.std_error, fm.std_error);
    run.record({0.5 * (fp.energy + fm.energy), se}, step);
    final_x = x;
  }
  final_x = x;
}

void nelder_mead(RunState& run, std::vector<double> x, const OptimizerConfig& opt) {
  const std::size_t p = x.size();
  std::vector<std::vector<double>> simplex(p + 1, x);
  std::vector<double> f(p + 1);
  f[0] = run.eval(x).energy;
  for (std::size_t i = 0; i < p; ++i) {
    simplex[i + 1][i] += opt.simplex_step;
    f[i + 1] = run.eval(simplex[i + 1]).energy;
  }
  std::vector<std::size_t> order(p + 1);
  std::vector<double> centroid(p), trial(p), trial2(p);
  auto blend = [&](double t, const std::vector<double>& from, std::vector<double>& out) {
    for (std::size_t j = 0; j < p; ++j) out[j] = centroid[j] + t * (from[j] - centroid[j]);
  };
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&f](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[p - 1];
    double diameter = 0.0;
    for (std::size_t v = 0; v <= p; ++v) {
      for (std::size_t j = 0; j < p; ++j) diameter = std::max(diameter, std::abs(simplex[v][j] - simplex[best][j]));
    }
    run.record({f[best], 0.0}, diameter);
    if (f[worst] - f[best] < opt.tolerance && diameter < opt.angle_tolerance) return;
    if (diameter < opt.angle_tolerance) return;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v <= p; ++v) {
      if (v == worst) continue;
      for (std::size_t j = 0; j < p; ++j) centroid[j] += simplex[v][j] / static_cast<double>(p);
    }
    blend(-1.0, simplex[worst], trial);
    const double fr = run.eval(trial).energy;
    if (fr < f[best]) {
      blend(-2.0, simplex[worst], trial2);
      const double fe = run.eval(trial2).energy;
      if (fe < fr) {
        simplex[worst] = trial2;
        f[worst] = fe;
      } else {
        simplex[worst] = trial;
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      simplex[worst] = trial;
      f[worst] = fr;
    } else {
      const bool outside = fr < f[worst];
      blend(outside ? -0.5 : 0.5, simplex[worst], trial2);
      const double fc = run.eval(trial2).energy;
      if (fc < std::min(fr, f[worst])) {
        simplex[worst] = trial2;
        f[worst] = fc;
      } else {
        for (std::size_t v = 0; v <= p; ++v) {
          if (v == best) continue;
          for (std::size_t j = 0; j < p; ++j) simplex[v][j] = simplex[best][j] + 0.5 * (simplex[v][j] - simplex[best][j]);
          f[v] = run.eval(simplex[v]).energy;
        }
      }
    }
  }
}

struct SectorResult {
  std::vector<double> params;
  ObjectiveValue value;
  std::uint64_t evaluations = 0;
  bool exhausted = false;
};

SectorResult optimize_sector(const Objective& objective, const OptimizerConfig& opt, std::uint64_t budget,
                             std::uint64_t seed, std::vector<TracePoint>& trace, std::uint64_t& iteration) {
  const bool sampled = objective.config().mode == ObjectiveMode::CircuitSampled;
  const std::size_t p = objective.num_parameters();
  std::vector<double> start = opt.initial_params;
  if (start.empty()) start.assign(p, 0.0);
  if (start.size() != p) {
    throw std::invalid_argument("initial_params has " + std::to_string(start.size()) + " entries, ansatz needs " +
                                std::to_string(p));
  }
  // SPSA keeps one evaluation back to score its final iterate.
  const std::uint64_t reserve = opt.kind == OptimizerKind::Spsa ? 1 : 0;
  if (budget <= reserve) throw std::invalid_argument("optimizer budget too small");
  Evaluator eval(objective, budget - reserve, derive_seed(seed, 0));
  RunState run{eval, trace, iteration, sampled};
  Rng jitter_rng(derive_seed(seed, 1));
  // Evaluations one SPSA iteration needs.
  const std::uint64_t min_step = opt.kind == OptimizerKind::Spsa ? 2 : 1;
  std::vector<double> spsa_x = start;
  bool exhausted = false;
  try {
    for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
      std::vector<double> x = start;
      if (attempt > 0) {
        x = sampled ? spsa_x : eval.best_x();
        for (double& v : x) v += jitter_rng.uniform(-opt.jitter, opt.jitter);
      }
      switch (opt.kind) {
        case OptimizerKind::CoordinateDescent: coordinate_descent(run, x, opt); break;
        case OptimizerKind::NelderMead: nelder_mead(run, x, opt); break;
        case OptimizerKind::Spsa:
          spsa(run, x, opt, derive_seed(seed, 2 + static_cast<std::uint64_t>(attempt)), spsa_x);
          break;
      }
      if (eval.remaining() < min_step) break;
    }
  } catch (const BudgetExhausted&) {
    exhausted = true;
  }
  SectorResult out;
  out.exhausted = exhausted || eval.remaining() < min_step;
  if (opt.kind == OptimizerKind::Spsa) {
    // Score the final iterate with a fresh seed, outside the search budget.
    out.params = spsa_x;
    out.value = objective.evaluate(spsa_x, derive_seed(seed, 0xF1A1));
    out.evaluations = eval.used() + 1;
    if (!sampled && eval.best().energy < out.value.energy) {
      out.params = eval.best_x();
      out.value = eval.best();
    }
  } else {
    out.params = eval.best_x();
    out.value = eval.best();
    out.evaluations = eval.used();
  }
  return out;
}

}  // namespace

std::string to_string(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::Matrix: return "matrix";
    case ObjectiveMode::CircuitExact: return "circuit_exact";
    case ObjectiveMode::CircuitSampled: return "circuit_sampled";
  }
  return "?";
}

ObjectiveMode parse_objective_mode(const std::string& text) {
  if (text == "matrix") return ObjectiveMode::Matrix;
  if (text == "circuit_exact") return ObjectiveMode::CircuitExact;
  if (text == "circuit_sampled") return ObjectiveMode::CircuitSampled;
  throw std::invalid_argument("unknown mode '" + text + "' (expected matrix, circuit_exact or circuit_sampled)");
}

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::Full: return "full";
    case AnsatzKind::Restricted: return "restricted";
    case AnsatzKind::Custom: return "custom";
  }
  return "?";
}

AnsatzKind parse_ansatz_kind(const std::string& text) {
  if (text == "full") return AnsatzKind::Full;
  if (text == "restricted") return AnsatzKind::Restricted;
  if (text == "custom") return AnsatzKind::Custom;
  throw std::invalid_argument("unknown ansatz '" + text + "' (expected full, restricted or custom)");
}

std::string to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::CoordinateDescent: return "coordinate_descent";
    case OptimizerKind::Spsa: return "spsa";
    case OptimizerKind::NelderMead: return "nelder_mead";
  }
  return "?";
}

OptimizerKind parse_optimizer_kind(const std::string& text) {
  if (text == "coordinate_descent") return OptimizerKind::CoordinateDescent;
  if (text == "spsa") return OptimizerKind::Spsa;
  if (text == "nelder_mead") return OptimizerKind::NelderMead;
  throw std::invalid_argument("unknown optimizer '" + text + "' (expected coordinate_descent, spsa or nelder_mead)");
}

std::string to_string(ParityChoice parity) {
  switch (parity) {
    case ParityChoice::Even: return "even";
    case ParityChoice::Odd: return "odd";
    case ParityChoice::Auto: return "auto";
  }
  return "?";
}

ParityChoice parse_parity_choice(const std::string& text) {
  if (text == "even") return ParityChoice::Even;
  if (text == "odd") return ParityChoice::Odd;
  if (text == "auto") return ParityChoice::Auto;
  throw std::invalid_argument("unknown parity '" + text + "' (expected even, odd or auto)");
}

std::size_t RestrictedAnsatz::num_givens() const {
  return static_cast<std::size_t>(num_qubits) << (num_qubits - 1);
}

RotationPlan RestrictedAnsatz::expand(std::span<const double> angles, bool parity_flip) const {
  if (angles.size() != num_parameters()) {
    throw std::invalid_argument("restricted ansatz takes " + std::to_string(num_qubits) + " angles, got " +
                                std::to_string(angles.size()));
  }
  RotationPlan plan;
  plan.parity_flip = parity_flip;
  plan.rotations.reserve(num_givens());
  for (int k = 0; k < num_qubits; ++k) {
    const auto factors = ry_givens_decomposition(k, num_qubits, angles[k]);
    plan.rotations.insert(plan.rotations.end(), factors.begin(), factors.end());
  }
  return plan;
}

RestrictedAnsatz build_restricted_ansatz(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("restricted ansatz needs m >= 1");
  return RestrictedAnsatz{num_qubits};
}

Objective::Objective(QuadraticHamiltonian hamiltonian, ObjectiveConfig config)
    : hamiltonian_(std::move(hamiltonian)), config_(std::move(config)), num_qubits_(hamiltonian_.num_qubits()) {
  switch (config_.ansatz) {
    case AnsatzKind::Full: layout_ = full_parameter_layout(num_qubits_); break;
    case AnsatzKind::Restricted: break;
    case AnsatzKind::Custom: {
      const Index dim = hamiltonian_.dimension();
      for (const auto& [i, j] : config_.custom_layout) {
        if (i < 0 || i >= j || j >= dim) {
          throw std::invalid_argument("custom layout pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") is not a valid axis pair for dimension " + std::to_string(dim));
        }
      }
      layout_ = config_.custom_layout;
      break;
    }
  }
  if (config_.mode == ObjectiveMode::Matrix) return;

  if (config_.mode == ObjectiveMode::CircuitSampled && config_.shots == 0) {
    throw std::invalid_argument("sampled mode needs shots >= 1");
  }
  const Circuit prep = prep_purified_vacuum(num_qubits_);
  check_width(prep.width(), config_.purified_max_width);
  plan_ = build_plan(hamiltonian_);
  if (config_.mode == ObjectiveMode::CircuitSampled) shots_ = allocate_shots(plan_, config_.shots, config_.allocation);
  vacuum_ = std::make_shared<const StateVector>(run(prep, config_.purified_max_width));
}

std::size_t Objective::num_parameters() const {
  return config_.ansatz == AnsatzKind::Restricted ? static_cast<std::size_t>(num_qubits_) : layout_.size();
}

void Objective::check_params(std::span<const double> params) const {
  if (params.size() != num_parameters()) {
    throw std::invalid_argument("ansatz takes " + std::to_string(num_parameters()) + " parameters, got " +
                                std::to_string(params.size()));
  }
}

RotationPlan Objective::rotation_plan(std::span<const double> params) const {
  check_params(params);
  if (config_.ansatz == AnsatzKind::Restricted) {
    return build_restricted_ansatz(num_qubits_).expand(params, config_.parity_flip);
  }
  return plan_from_layout(layout_, std::vector<double>(params.begin(), params.end()), config_.parity_flip);
}

Circuit Objective::ansatz_circuit(std::span<const double> params) const {
  check_params(params);
  if (config_.ansatz != AnsatzKind::Restricted) return compile_ansatz(rotation_plan(params), num_qubits_);
  Circuit c = compile_restricted_ansatz(params, num_qubits_);
  if (config_.parity_flip) c.append(full_parity_flip(num_qubits_));
  return c;
}

StateVector Objective::prepared_state(std::span<const double> params) const {
  if (!vacuum_) throw std::logic_error("prepared_state: objective is in matrix mode");
  return run(ansatz_circuit(params), *vacuum_, config_.purified_max_width);
}

std::vector<std::vector<double>> Objective::group_probabilities(std::span<const double> params) const {
  const StateVector state = prepared_state(params);
  std::vector<std::vector<double>> probs;
  probs.reserve(plan_.groups.size());
  for (const auto& g : plan_.groups) probs.push_back(pattern_probabilities(state, g.pattern));
  return probs;
}

std::vector<ShotCounts> Objective::sample_groups(std::span<const double> params, std::uint64_t seed) const {
  const auto probs = group_probabilities(params);
  const std::vector<std::uint64_t> shots =
      shots_.empty() ? allocate_shots(plan_, std::max<std::uint64_t>(config_.shots, 1), config_.allocation) : shots_;
  std::vector<ShotCounts> counts;
  counts.reserve(probs.size());
  for (std::size_t g = 0; g < probs.size(); ++g) counts.push_back(sample(probs[g], shots[g], derive_seed(seed, g)));
  return counts;
}

ObjectiveValue Objective::evaluate(std::span<const double> params, std::uint64_t seed) const {
  check_params(params);
  switch (config_.mode) {
    case ObjectiveMode::Matrix: {
      const CovarianceMatrix gamma = rotate_covariance(vacuum_covariance(hamiltonian_.num_orbitals()), rotation_plan(params));
      return {energy_from_covariance(hamiltonian_, gamma), 0.0};
    }
    case ObjectiveMode::CircuitExact: {
      const auto probs = group_probabilities(params);
      return {estimate_energy(plan_, probs).energy, 0.0};
    }
    case ObjectiveMode::CircuitSampled: {
      const auto counts = sample_groups(params, seed);
      const EnergyEstimate e = estimate_energy(plan_, counts);
      return {e.energy, e.std_error};
    }
  }
  return {};
}

ObjectiveValue evaluate_objective(const QuadraticHamiltonian& hamiltonian, std::span<const double> params,
                                  const ObjectiveConfig& config) {
  return Objective(hamiltonian, config).evaluate(params);
}

OptimizationResult optimize(const QuadraticHamiltonian& hamiltonian, const ObjectiveConfig& config,
                            const OptimizerConfig& optimizer) {
  if (optimizer.budget < 1) throw std::invalid_argument("optimizer budget must be >= 1");
  OptimizationResult result;
  std::uint64_t iteration = 0;

  std::vector<bool> sectors;
  switch (optimizer.parity) {
    case ParityChoice::Even: sectors = {false}; break;
    case ParityChoice::Odd: sectors = {true}; break;
    case ParityChoice::Auto: sectors = {false, true}; break;
  }

  if (is_zero(hamiltonian)) {
    ObjectiveConfig c = config;
    c.parity_flip = sectors.front();
    const Objective objective(hamiltonian, c);
    result.best_params.assign(objective.num_parameters(), 0.0);
    result.parity_flip = c.parity_flip;
    const ObjectiveValue v = objective.evaluate(result.best_params);
    result.best_energy = v.energy;
    result.best_std_error = v.std_error;
    result.evaluations = 1;
    result.trace.push_back({0, v.energy, v.std_error, 0.0});
    return result;
  }

  std::uint64_t spent = 0;
  bool have = false;
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    ObjectiveConfig c = config;
    c.parity_flip = sectors[s];
    const Objective objective(hamiltonian, c);
    const std::uint64_t budget = s + 1 == sectors.size() ? optimizer.budget - spent : optimizer.budget / sectors.size();
    const SectorResult r = optimize_sector(objective, optimizer, budget, derive_seed(config.base_seed, s),
                                           result.trace, iteration);
    spent += r.evaluations;
    result.budget_exhausted = result.budget_exhausted || r.exhausted;
    if (!have || r.value.energy < result.best_energy) {
      have = true;
      result.best_energy = r.value.energy;
      result.best_std_error = r.value.std_error;
      result.best_params = r.params;
      result.parity_flip = sectors[s];
    }
  }
  result.evaluations = spent;
  return result;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  out << "iteration,energy,stderr,step\n";
  const auto precision = out.precision(17);
  for (const auto& t : trace) out << t.iteration << ',' << t.energy << ',' << t.std_error << ',' << t.step << '\n';
  out.precision(precision);
}

}  // namespace fermicompress
