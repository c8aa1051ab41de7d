// Copyright 2026 The bellgames Authors
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

#include "bellgames/seesaw.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>
#include <utility>

#include "bellgames/errors.hpp"
#include "bellgames/rng.hpp"

namespace bellgames {

namespace {

// Measurements may have more outcomes than the functional scores (dim > na);
// the surplus outcomes simply carry coefficient zero.
struct PaddedCoeff {
  const BellFunctional& f;

  double at(int x, int y, int a, int b) const {
    if (a >= f.na || b >= f.nb) return 0.0;
    return to_double(f.coeff[f.index(x, y, a, b)]);
  }
};

double objective(const BellFunctional& f, const QuantumStrategy& qs) {
  const Behavior beh = behavior_from_quantum(qs);
  const PaddedCoeff coeff{f};
  double value = to_double(f.constant_offset);
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      for (int a = 0; a < f.na; ++a) {
        for (int b = 0; b < f.nb; ++b) {
          value += coeff.at(x, y, a, b) * beh.at(x, y, a, b);
        }
      }
    }
  }
  if (!std::isfinite(value)) throw IntegrityError("see-saw objective is not finite");
  return value;
}

void check_pairing(const BellFunctional& f, const QuantumStrategy& qs) {
  if (static_cast<int>(qs.alice.size()) != f.nx ||
      static_cast<int>(qs.bob.size()) != f.ny) {
    throw ValidationError("strategy measurement counts do not match functional '" +
                          f.name + "'");
  }
  if (qs.state.dim_a < f.na || qs.state.dim_b < f.nb) {
    throw ValidationError("functional '" + f.name +
                          "' needs local dimension >= its outcome counts");
  }
  if (qs.state.dim_a != qs.state.dim_b) {
    throw ValidationError("see-saw assumes equal local dimensions");
  }
}

// Effective operator for one outcome of one input of one player: the
// Hermitian matrix F with  sum_a basis[a]^dag F_a basis[a]  equal to that
// input's share of the objective, for the state and the other player fixed.
// Alice, input x: F^x_a = sum_{y,b} c(x,y,a,b) v v^dag, v = Phi conj(beta^y_b).
// Bob, input y:   F^y_b = sum_{x,a} c(x,y,a,b) t t^dag, t = Phi^T conj(alpha^x_a).
std::vector<ComplexMatrix> effective_operators(const BellFunctional& f,
                                               const QuantumStrategy& qs,
                                               Player player, int input) {
  const PaddedCoeff coeff{f};
  const StateVector& st = qs.state;
  const int da = st.dim_a;
  const int db = st.dim_b;
  const int dim = player == Player::alice ? da : db;
  std::vector<ComplexMatrix> ops(static_cast<std::size_t>(dim), ComplexMatrix(dim, dim));

  if (player == Player::alice) {
    for (int y = 0; y < f.ny; ++y) {
      const ProjectiveMeasurement& bm = qs.bob[static_cast<std::size_t>(y)];
      for (int b = 0; b < db; ++b) {
        ComplexVector v(static_cast<std::size_t>(da), Complex(0.0, 0.0));
        for (int i = 0; i < da; ++i) {
          Complex sum(0.0, 0.0);
          for (int j = 0; j < db; ++j) {
            sum += st.amp[static_cast<std::size_t>(i) * db + j] *
                   std::conj(bm.basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
          }
          v[static_cast<std::size_t>(i)] = sum;
        }
        const ComplexMatrix proj = outer(v);
        for (int a = 0; a < dim; ++a) {
          const double c = coeff.at(input, y, a, b);
          if (c != 0.0) {
            ComplexMatrix scaled = proj;
            scaled *= Complex(c, 0.0);
            ops[static_cast<std::size_t>(a)] += scaled;
          }
        }
      }
    }
  } else {
    for (int x = 0; x < f.nx; ++x) {
      const ProjectiveMeasurement& am = qs.alice[static_cast<std::size_t>(x)];
      for (int a = 0; a < da; ++a) {
        ComplexVector t(static_cast<std::size_t>(db), Complex(0.0, 0.0));
        for (int j = 0; j < db; ++j) {
          Complex sum(0.0, 0.0);
          for (int i = 0; i < da; ++i) {
            sum += st.amp[static_cast<std::size_t>(i) * db + j] *
                   std::conj(am.basis[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
          }
          t[static_cast<std::size_t>(j)] = sum;
        }
        const ComplexMatrix proj = outer(t);
        for (int b = 0; b < dim; ++b) {
          const double c = coeff.at(x, input, a, b);
          if (c != 0.0) {
            ComplexMatrix scaled = proj;
            scaled *= Complex(c, 0.0);
            ops[static_cast<std::size_t>(b)] += scaled;
          }
        }
      }
    }
  }
  return ops;
}

double basis_score(const std::vector<ComplexMatrix>& ops,
                   const std::vector<ComplexVector>& basis) {
  double score = 0.0;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    score += inner(basis[a], matvec(ops[a], basis[a])).real();
  }
  return score;
}

// Exact two-outcome optimum: the score is tr(F1) + v^dag (F0 - F1) v, so the
// best first vector is the principal eigenvector of F0 - F1 and the second is
// its orthogonal complement.
std::vector<ComplexVector> split_two_outcomes(const std::vector<ComplexMatrix>& ops) {
  ComplexMatrix diff = ops[0];
  diff -= ops[1];
  const HermitianEigensystem eigen = hermitian_eigensystem(diff);
  const int n = diff.rows();
  std::vector<ComplexVector> basis(2, ComplexVector(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    basis[0][static_cast<std::size_t>(i)] = eigen.vectors.at(i, n - 1);
    basis[1][static_cast<std::size_t>(i)] = eigen.vectors.at(i, n - 2);
  }
  return basis;
}

// Local search over pairs: within span{basis[p], basis[q]} the score is
// tr(B) + c^dag (A - B) c for 2x2 restrictions A, B of F_p, F_q, so each pair
// step is an exact 2x2 eigenproblem and never decreases the score.
std::vector<ComplexVector> rotate_pairs_to_fixed_point(
    const std::vector<ComplexMatrix>& ops, std::vector<ComplexVector> basis) {
  const int outcomes = static_cast<int>(ops.size());
  constexpr int kMaxCycles = 64;
  double score = basis_score(ops, basis);
  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    const double score_before = score;
    for (int p = 0; p < outcomes; ++p) {
      for (int q = p + 1; q < outcomes; ++q) {
        ComplexMatrix diff = ops[static_cast<std::size_t>(p)];
        diff -= ops[static_cast<std::size_t>(q)];
        const ComplexVector dp = matvec(diff, basis[static_cast<std::size_t>(p)]);
        const ComplexVector dq = matvec(diff, basis[static_cast<std::size_t>(q)]);
        ComplexMatrix restricted(2, 2);
        restricted.at(0, 0) = inner(basis[static_cast<std::size_t>(p)], dp);
        restricted.at(0, 1) = inner(basis[static_cast<std::size_t>(p)], dq);
        restricted.at(1, 0) = inner(basis[static_cast<std::size_t>(q)], dp);
        restricted.at(1, 1) = inner(basis[static_cast<std::size_t>(q)], dq);
        // Hermitize rounding residue before the exact 2x2 solve.
        const Complex off = 0.5 * (restricted.at(0, 1) + std::conj(restricted.at(1, 0)));
        restricted.at(0, 1) = off;
        restricted.at(1, 0) = std::conj(off);
        restricted.at(0, 0) = Complex(restricted.at(0, 0).real(), 0.0);
        restricted.at(1, 1) = Complex(restricted.at(1, 1).real(), 0.0);
        const HermitianEigensystem eigen = hermitian_eigensystem(restricted);
        const Complex c0 = eigen.vectors.at(0, 1);
        const Complex c1 = eigen.vectors.at(1, 1);
        // Skip no-ops to keep fixed points exactly fixed.
        if (std::abs(c1) < 1e-13 || eigen.values[1] - restricted.at(0, 0).real() < 1e-13) {
          continue;
        }
        ComplexVector new_p(basis[static_cast<std::size_t>(p)].size());
        ComplexVector new_q(basis[static_cast<std::size_t>(p)].size());
        for (std::size_t i = 0; i < new_p.size(); ++i) {
          const Complex vp = basis[static_cast<std::size_t>(p)][i];
          const Complex vq = basis[static_cast<std::size_t>(q)][i];
          new_p[i] = c0 * vp + c1 * vq;
          new_q[i] = -std::conj(c1) * vp + std::conj(c0) * vq;
        }
        basis[static_cast<std::size_t>(p)] = std::move(new_p);
        basis[static_cast<std::size_t>(q)] = std::move(new_q);
      }
    }
    score = basis_score(ops, basis);
    if (score - score_before <= 1e-14 * std::max(1.0, std::abs(score))) break;
  }
  return basis;
}

ComplexVector random_unit_vector(SplitMix64& rng, int n) {
  ComplexVector v(static_cast<std::size_t>(n));
  double vnorm = 0.0;
  while (vnorm < 1e-6) {
    for (Complex& e : v) e = Complex(rng.next_gaussian(), rng.next_gaussian());
    vnorm = norm(v);
  }
  for (Complex& e : v) e /= vnorm;
  return v;
}

ProjectiveMeasurement random_measurement(SplitMix64& rng, int dim) {
  std::vector<ComplexVector> basis;
  while (static_cast<int>(basis.size()) < dim) {
    ComplexVector v = random_unit_vector(rng, dim);
    for (const ComplexVector& u : basis) {
      const Complex overlap = inner(u, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * u[i];
    }
    const double residual = norm(v);
    if (residual < 1e-6) continue;  // nearly dependent draw; try again
    for (Complex& e : v) e /= residual;
    basis.push_back(std::move(v));
  }
  return ProjectiveMeasurement(std::move(basis));
}

StateVector random_state(SplitMix64& rng, int dim) {
  return StateVector(dim, dim, random_unit_vector(rng, dim * dim));
}

// No default constructor (QuantumStrategy has none); slots that have not run
// yet are held as empty optionals.
struct RestartOutcome {
  double value;
  QuantumStrategy strategy;
  std::vector<double> trace;
  bool converged;
};

RestartOutcome run_restart(const BellFunctional& f, const SeesawConfig& cfg,
                           int restart) {
  SplitMix64 rng(split_stream(cfg.seed, static_cast<std::uint64_t>(restart)));
  QuantumStrategy qs{restart % 2 == 0 ? max_entangled_state(cfg.dim)
                                      : random_state(rng, cfg.dim),
                     {}, {}};
  for (int x = 0; x < f.nx; ++x) qs.alice.push_back(random_measurement(rng, cfg.dim));
  for (int y = 0; y < f.ny; ++y) qs.bob.push_back(random_measurement(rng, cfg.dim));

  std::vector<double> trace;
  bool converged = false;
  double current = objective(f, qs);
  trace.push_back(current);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    for (int x = 0; x < f.nx; ++x) {
      qs.alice[static_cast<std::size_t>(x)] =
          measurement_update(f, qs, Player::alice, x);
    }
    for (int y = 0; y < f.ny; ++y) {
      qs.bob[static_cast<std::size_t>(y)] = measurement_update(f, qs, Player::bob, y);
    }
    qs.state = state_update(f, qs);
    const double next = objective(f, qs);
    trace.push_back(next);
    if (next - current < cfg.tol) {
      current = std::max(current, next);
      converged = true;
      break;
    }
    current = next;
  }
  return RestartOutcome{current, std::move(qs), std::move(trace), converged};
}

}  // namespace

ProjectiveMeasurement measurement_update(const BellFunctional& f,
                                         const QuantumStrategy& strategy,
                                         Player player, int input) {
  check_pairing(f, strategy);
  const int inputs = player == Player::alice ? f.nx : f.ny;
  if (input < 0 || input >= inputs) {
    throw ValidationError("measurement update input index out of range");
  }
  const std::vector<ComplexMatrix> ops = effective_operators(f, strategy, player, input);
  const std::vector<ComplexVector>& current =
      (player == Player::alice ? strategy.alice : strategy.bob)[static_cast<std::size_t>(
                                                                    input)]
          .basis;

  std::vector<ComplexVector> best = current;
  double best_score = basis_score(ops, best);
  if (ops.size() == 2) {
    std::vector<ComplexVector> split = split_two_outcomes(ops);
    const double split_score = basis_score(ops, split);
    if (split_score > best_score) {
      best = std::move(split);
      best_score = split_score;
    }
  } else {
    std::vector<ComplexVector> rotated = rotate_pairs_to_fixed_point(ops, current);
    const double rotated_score = basis_score(ops, rotated);
    if (rotated_score > best_score) {
      best = std::move(rotated);
      best_score = rotated_score;
    }
  }
  return ProjectiveMeasurement(std::move(best));
}

StateVector state_update(const BellFunctional& f, const QuantumStrategy& strategy) {
  check_pairing(f, strategy);
  const PaddedCoeff coeff{f};
  const int da = strategy.state.dim_a;
  const int db = strategy.state.dim_b;
  ComplexMatrix g(da * db, da * db);
  for (int x = 0; x < f.nx; ++x) {
    for (int a = 0; a < da; ++a) {
      bool used = false;
      for (int y = 0; y < f.ny && !used; ++y) {
        for (int b = 0; b < db && !used; ++b) used = coeff.at(x, y, a, b) != 0.0;
      }
      if (!used) continue;
      const ComplexMatrix proj_a =
          outer(strategy.alice[static_cast<std::size_t>(x)].basis[static_cast<std::size_t>(a)]);
      for (int y = 0; y < f.ny; ++y) {
        for (int b = 0; b < db; ++b) {
          const double c = coeff.at(x, y, a, b);
          if (c == 0.0) continue;
          const ComplexMatrix proj_b = outer(
              strategy.bob[static_cast<std::size_t>(y)].basis[static_cast<std::size_t>(b)]);
          ComplexMatrix term = kron(proj_a, proj_b);
          term *= Complex(c, 0.0);
          g += term;
        }
      }
    }
  }
  if (g.frobenius_norm() == 0.0) return strategy.state;  // nothing to optimize
  const PrincipalEigenpair top = hermitian_principal_eigenvector(g);
  return StateVector(da, db, top.vector);
}

SeesawResult seesaw(const BellFunctional& f, const SeesawConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim > 4) {
    throw ValidationError("see-saw local dimension must be between 2 and 4");
  }
  if (f.na > cfg.dim || f.nb > cfg.dim) {
    throw ValidationError("functional '" + f.name +
                          "' has more outcomes than the local dimension");
  }
  if (cfg.restarts < 1) throw ValidationError("see-saw needs at least one restart");
  if (cfg.max_iters < 1) throw ValidationError("see-saw needs at least one iteration");
  if (!(cfg.tol > 0.0)) throw ValidationError("see-saw tolerance must be positive");
  if (cfg.jobs < 1) throw ValidationError("see-saw needs at least one worker");

  std::vector<std::optional<RestartOutcome>> outcomes(
      static_cast<std::size_t>(cfg.restarts));
  const int workers = std::min(cfg.jobs, cfg.restarts);
  if (workers == 1) {
    for (int r = 0; r < cfg.restarts; ++r) {
      outcomes[static_cast<std::size_t>(r)] = run_restart(f, cfg, r);
    }
  } else {
    std::atomic<int> next_restart{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const int r = next_restart.fetch_add(1);
          if (r >= cfg.restarts) return;
          outcomes[static_cast<std::size_t>(r)] = run_restart(f, cfg, r);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r) {
    if (outcomes[static_cast<std::size_t>(r)]->value >
        outcomes[static_cast<std::size_t>(best)]->value) {
      best = r;
    }
  }
  RestartOutcome& winner = *outcomes[static_cast<std::size_t>(best)];
  SeesawResult result{winner.value, std::move(winner.strategy),
                      std::move(winner.trace), winner.converged, {}};
  result.restart_values.reserve(outcomes.size());
  for (const auto& o : outcomes) result.restart_values.push_back(o->value);
  return result;
}

double best_response_gap(const GameSpec& game, const QuantumStrategy& strategy,
                         Player player) {
  const BellFunctional own = functional_from_game(
      game, Rational(player == Player::alice ? 1 : 0),
      Rational(player == Player::bob ? 1 : 0));
  check_pairing(own, strategy);
  const double current = objective(own, strategy);

  QuantumStrategy work = strategy;
  double value = current;
  constexpr int kMaxPasses = 200;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    const int inputs = player == Player::alice ? own.nx : own.ny;
    for (int i = 0; i < inputs; ++i) {
      ProjectiveMeasurement updated = measurement_update(own, work, player, i);
      (player == Player::alice ? work.alice : work.bob)[static_cast<std::size_t>(i)] =
          std::move(updated);
    }
    const double next = objective(own, work);
    if (next - value < 1e-12) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }
  return value - current;
}

}  // namespace bellgames
