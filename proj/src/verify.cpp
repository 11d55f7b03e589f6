#include "eckart/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "eckart/spectra.hpp"
#include "eckart/specfun.hpp"

namespace eckart {

namespace {

constexpr auto kHyp = Signature::Hyperbolic;
constexpr auto kTrig = Signature::Trigonometric;
constexpr int kConjugationSamples = 20;
constexpr unsigned kConjugationSeed = 20240611;

using Reports = std::vector<VerifyReport>;
using Task = std::function<Reports()>;

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

std::string exact_witness(const SurfaceExpression& residual) {
  return residual.is_zero() ? "0" : to_string(residual);
}

VerifyReport make_report(std::string identity, std::string params, std::vector<double> key) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(params);
  r.sort_key = std::move(key);
  return r;
}

std::string state_params(int l, int m_tilde, const Rational& b) {
  return "l=" + std::to_string(l) + " mt=" + std::to_string(m_tilde) + " b=" + to_string(b);
}

// Runs `body` and turns any exception into a failed report with the message as witness.
Task guarded(std::string identity, std::string params, std::vector<double> key,
             std::function<void(VerifyReport&)> body) {
  return [identity = std::move(identity), params = std::move(params), key = std::move(key),
          body = std::move(body)]() {
    VerifyReport r = make_report(identity, params, key);
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = std::string("error: ") + e.what();
    }
    return Reports{r};
  };
}

BPoly rational_poly(const Rational& v) { return BPoly(Gaussian(v)); }

void add_recurrences(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int l = 1; l <= o.l_max; ++l) {
    for (int m = 0; m < l; ++m) {
      tasks.push_back(guarded("raising-constant", "l=" + std::to_string(l) + " m=" + std::to_string(m),
                              {double(l), double(m)}, [l, m](VerifyReport& r) {
                                try {
                                  r.witness = "c=" + to_string(recurrence_constant(l, m));
                                  r.pass = true;
                                } catch (const identity_failure& e) {
                                  r.witness = e.what();
                                }
                              }));
    }
  }
}

void add_eigen(std::vector<Task>& tasks, const VerifyOptions& o) {
  const GridSpec grid = o.hyperbolic_grid.value_or(default_grid(kHyp));
  for (int l = 0; l <= o.l_max; ++l) {
    tasks.push_back(guarded("lowest-order-annihilation", "l=" + std::to_string(l), {double(l)},
                            [l](VerifyReport& r) {
                              const SurfaceExpression image = apply_exact(Dl{l}, legendre_hyp_exact({l, l}));
                              r.witness = exact_witness(image);
                              r.pass = image.is_zero();
                            }));
    for (int m = 0; m < l; ++m) {
      tasks.push_back(guarded("raising-expansion", "l=" + std::to_string(l) + " m=" + std::to_string(m),
                              {double(l), double(m)}, [l, m](VerifyReport& r) {
                                // s^2 D_l P_l^m must equal the returned combination of P_l^k.
                                const auto weights = raising_expansion(l, m);
                                SurfaceExpression lhs =
                                    SurfaceExpression::monomial(kHyp, 0, 2) *
                                    apply_exact(Dl{l}, legendre_hyp_exact({l, m}));
                                for (int k = 0; k <= l; ++k) {
                                  if (weights[k] != 0) {
                                    lhs = lhs - legendre_hyp_exact({l, k}).scaled(rational_poly(weights[k]));
                                  }
                                }
                                r.witness = exact_witness(lhs);
                                r.pass = lhs.is_zero();
                              }));
    }
    for (int mt = 0; mt <= l; ++mt) {
      tasks.push_back(guarded("coefficient-condition", "l=" + std::to_string(l) + " mt=" + std::to_string(mt),
                              {double(l), double(mt)}, [l, mt](VerifyReport& r) {
                                const auto defect = coefficient_condition_defect(l, mt, coeff_matrix(l).entries[mt]);
                                r.witness = exact_witness(defect);
                                r.pass = defect.is_zero();
                              }));
    }
    for (const Rational& b : o.couplings) {
      const double bd = to_double(b);
      const CoeffMatrix a = coeff_matrix(l, b);
      for (int mt = -l; mt <= l; ++mt) {
        tasks.push_back([a, mt] { return Reports{eigen_exact_check(a, mt)}; });
        if (o.numeric && mt >= 0) {
          tasks.push_back([a, mt, grid, tol = o.tol] { return Reports{eigen_grid_check(a, mt, grid, tol)}; });
        }
      }
      tasks.push_back(guarded("degeneracy", "l=" + std::to_string(l) + " b=" + to_string(b), {double(l), bd},
                              [l, b](VerifyReport& r) {
                                // Distinct azimuthal phases make the states independent, so
                                // counting verified eigenstates counts the multiplet.
                                const BPoly lambda(evaluate_at(eckart_eigenvalue(l), b));
                                int verified = 0;
                                for (const auto& state : eckart_multiplet(l, b)) {
                                  if (!state.expression.is_zero() &&
                                      exact_residual(EckartHam{BPoly(Gaussian(b))}, state.expression, lambda).is_zero()) {
                                    ++verified;
                                  }
                                }
                                r.witness = std::to_string(verified) + " of " + std::to_string(degeneracy(l));
                                r.pass = verified == degeneracy(l);
                              }));
      tasks.push_back(guarded("energy", "l=" + std::to_string(l) + " b=" + to_string(b), {double(l), bd},
                              [l, b](VerifyReport& r) {
                                const Rational h(2 * l + 1, 2);
                                const Rational closed = Rational(-l * (l + 1)) - b * b / (h * h);
                                const Rational eps = eckart_energy(l, b);
                                const Gaussian lambda = evaluate_at(eckart_eigenvalue(l), b);
                                r.witness = "epsilon=" + to_string(eps);
                                r.pass = eps == closed && lambda == Gaussian(-eps);
                              }));
    }
  }
  for (const Rational& b : o.couplings) {
    tasks.push_back(guarded("ground-state", "b=" + to_string(b), {to_double(b)}, [b](VerifyReport& r) {
      const BPoly bp{Gaussian(b)};
      const SurfaceExpression ground =
          SurfaceExpression::constant(kHyp, BPoly(1)).with_prefactor(bp.scaled(Gaussian(-2)), 0);
      const SurfaceExpression residual = exact_residual(EckartHam{bp}, ground, bp * bp.scaled(Gaussian(4)));
      r.witness = exact_witness(residual);
      r.pass = residual.is_zero();
    }));
    if (o.l_max >= 1) {
      tasks.push_back(guarded("coeff-matrix-closed-form", "l=1 b=" + to_string(b), {1.0, to_double(b)},
                              [b](VerifyReport& r) {
                                const CoeffMatrix a = coeff_matrix(1, b);
                                const Rational expect = -4 * b / 3;
                                r.witness = "a01=" + to_string(a(0, 1));
                                r.pass = a(0, 0) == 1 && a(0, 1) == expect && a(1, 0) == 0 && a(1, 1) == 1;
                              }));
    }
    if (o.l_max >= 2) {
      tasks.push_back(guarded("coeff-matrix-closed-form", "l=2 b=" + to_string(b), {2.0, to_double(b)},
                              [b](VerifyReport& r) {
                                const CoeffMatrix a = coeff_matrix(2, b);
                                r.witness = "a01=" + to_string(a(0, 1)) + " a02=" + to_string(a(0, 2)) +
                                            " a12=" + to_string(a(1, 2));
                                r.pass = a(0, 1) == -8 * b / 15 && a(0, 2) == 8 * b * b / 75 &&
                                         a(1, 2) == -4 * b / 15;
                              }));
    }
  }
  tasks.push_back(guarded("scaling-conjugation",
                          "samples=" + std::to_string(kConjugationSamples) + " seed=" + std::to_string(kConjugationSeed),
                          {}, [](VerifyReport& r) {
                            std::mt19937 rng(kConjugationSeed);
                            std::uniform_int_distribution<int> c_pow(0, 4), s_pow(-4, 4), phase(-3, 3),
                                num(-9, 9), den(1, 7), level(0, 5);
                            int failures = 0;
                            std::string first_failure;
                            for (int k = 0; k < kConjugationSamples; ++k) {
                              const int n = num(rng);
                              const Rational coeff(n == 0 ? 1 : n, den(rng));
                              const int cp = c_pow(rng);
                              const int sp = s_pow(rng);
                              const int ph = phase(rng);
                              const SurfaceExpression g =
                                  SurfaceExpression::from_terms(kHyp, {{{cp, sp}, BPoly(Gaussian(coeff))}})
                                      .with_prefactor(alpha_l(level(rng)).scaled(Gaussian(Rational(-1, 2))), ph);
                              const auto defect = scaling_conjugation_defect(g, alpha_l(level(rng)));
                              if (!defect.is_zero()) {
                                ++failures;
                                if (first_failure.empty()) first_failure = to_string(g) + ": " + to_string(defect);
                              }
                            }
                            r.witness = failures == 0 ? "0" : first_failure;
                            r.pass = failures == 0;
                          }));
}

void add_decompositions(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (int l = 0; l <= o.l_max; ++l) {
    for (int mt = 0; mt <= l; ++mt) {
      for (const Rational& b : o.couplings) {
        const std::vector<double> key{double(l), double(mt), to_double(b)};
        const std::string params = state_params(l, mt, b);
        auto record = [](VerifyReport& r, const DecompositionCheck& check) {
          r.witness = "scale=" + to_string(check.scale) + " residual=" + exact_witness(check.residual);
          r.pass = check.holds() && !check.scale.is_zero();
        };
        tasks.push_back(guarded("jacobi-decomposition", params, key, [=](VerifyReport& r) {
          record(r, jacobi_decomposition_check(l, mt, b));
        }));
        tasks.push_back(guarded("romanovski-decomposition-printed", params, key, [=](VerifyReport& r) {
          record(r, romanovski_decomposition_check(l, mt, b, RomanovskiBeta::AsPrinted));
        }));
        tasks.push_back(guarded("romanovski-decomposition-weight", params, key, [=](VerifyReport& r) {
          record(r, romanovski_decomposition_check(l, mt, b, RomanovskiBeta::WeightConsistent));
        }));
      }
    }
  }
}

std::vector<RomanovskiParams> romanovski_grid(const VerifyOptions& o) {
  std::vector<RomanovskiParams> grid{{Rational(2), Rational(-1)}, {Rational(0), Rational(1)}};
  for (int l = 0; l <= o.l_max; ++l) {
    for (const Rational& b : o.couplings) {
      grid.push_back(romanovski_solution_params(l, b, RomanovskiBeta::AsPrinted));
      grid.push_back(romanovski_solution_params(l, b, RomanovskiBeta::WeightConsistent));
    }
  }
  std::sort(grid.begin(), grid.end(), [](const auto& x, const auto& y) {
    return std::tie(x.alpha, x.beta) < std::tie(y.alpha, y.beta);
  });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](const auto& x, const auto& y) { return x.alpha == y.alpha && x.beta == y.beta; }),
             grid.end());
  return grid;
}

void add_romanovski(std::vector<Task>& tasks, const VerifyOptions& o) {
  for (const RomanovskiParams& p : romanovski_grid(o)) {
    for (int n = 0; n <= o.l_max; ++n) {
      const std::string params =
          "n=" + std::to_string(n) + " alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta);
      const std::vector<double> key{double(n), to_double(p.alpha), to_double(p.beta)};
      tasks.push_back(guarded("romanovski-ode", params, key, [n, p](VerifyReport& r) {
        const RationalPoly residual = romanovski_ode_residual(n, p);
        r.witness = residual.is_zero() ? "0" : to_string(residual);
        r.pass = residual.is_zero();
      }));
      tasks.push_back(guarded("romanovski-jacobi-printed", params, key, [n, p](VerifyReport& r) {
        const GaussianPoly diff = to_bpoly(romanovski_poly(n, p)) - romanovski_jacobi_image_as_printed(n, p);
        r.witness = diff.is_zero() ? "0" : to_string(diff, "x");
        r.pass = romanovski_jacobi_check(n, p);
      }));
      tasks.push_back(guarded("romanovski-jacobi-normalized", params, key, [n, p](VerifyReport& r) {
        const GaussianPoly diff = to_bpoly(romanovski_poly(n, p)) - romanovski_jacobi_image(n, p);
        r.witness = diff.is_zero() ? "0" : to_string(diff, "x");
        r.pass = romanovski_jacobi_check_normalized(n, p);
      }));
    }
  }
}

void add_complexify(std::vector<Task>& tasks, const VerifyOptions& o) {
  const GridSpec grid = o.trigonometric_grid.value_or(default_grid(kTrig));
  for (int l = 0; l <= o.l_max; ++l) {
    for (int mt = 0; mt <= l; ++mt) {
      tasks.push_back(guarded("complexify-intertwining", "l=" + std::to_string(l) + " mt=" + std::to_string(mt),
                              {double(l), double(mt)}, [l, mt](VerifyReport& r) {
                                // sigma(H_E X) = H_RM sigma(X) with b kept formal on both sides.
                                const SurfaceExpression x = eckart_eigenfunction(l, mt).expression;
                                const SurfaceExpression lhs = substitute_complexify(apply_exact(EckartHam{coupling()}, x));
                                const SurfaceExpression rhs = apply_exact(RosenMorseHam{coupling()}, substitute_complexify(x));
                                const SurfaceExpression diff = lhs - rhs;
                                r.witness = exact_witness(diff);
                                r.pass = diff.is_zero();
                              }));
      for (const Rational& b : o.couplings) {
        const std::vector<double> key{double(l), double(mt), to_double(b)};
        tasks.push_back(guarded("rosen-morse-eigen", state_params(l, mt, b), key, [=](VerifyReport& r) {
          const auto state = rosen_morse_eigenfunction(l, mt, b);
          const BPoly lambda(evaluate_at(rosen_morse_eigenvalue(l), b));
          const SurfaceExpression residual =
              exact_residual(RosenMorseHam{BPoly(Gaussian(b))}, state.expression, lambda);
          r.witness = exact_witness(residual);
          r.pass = residual.is_zero() && !state.expression.is_zero();
        }));
        if (o.numeric) {
          tasks.push_back(guarded("rosen-morse-grid", state_params(l, mt, b) + " grid=" + std::to_string(grid.n),
                                  key, [=, tol = o.tol](VerifyReport& r) {
                                    const auto state = rosen_morse_eigenfunction(l, mt, b);
                                    const double lambda = to_double(evaluate_at(rosen_morse_eigenvalue(l), b).re());
                                    const double res = eigen_residual(RosenMorseHam{BPoly(Gaussian(b))},
                                                                      sample(state.expression, grid), lambda);
                                    r.witness = format_double(res);
                                    r.pass = res < tol;
                                  }));
        }
      }
    }
  }
}

Reports run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<Reports> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Reports out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "recurrences") return Suite::Recurrences;
  if (name == "eigen") return Suite::Eigen;
  if (name == "decompositions") return Suite::Decompositions;
  if (name == "romanovski") return Suite::Romanovski;
  if (name == "complexify") return Suite::Complexify;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Recurrences: return "recurrences";
    case Suite::Eigen: return "eigen";
    case Suite::Decompositions: return "decompositions";
    case Suite::Romanovski: return "romanovski";
    case Suite::Complexify: return "complexify";
    case Suite::All: return "all";
  }
  return "unknown";
}

VerifyReport eigen_exact_check(const CoeffMatrix& a, int m_tilde) {
  VerifyReport r = make_report("eigen-exact", state_params(a.l, m_tilde, a.b),
                               {double(a.l), double(m_tilde), to_double(a.b)});
  try {
    const auto state = eckart_eigenfunction(a, m_tilde);
    const BPoly lambda(evaluate_at(eckart_eigenvalue(a.l), a.b));
    const SurfaceExpression residual = exact_residual(EckartHam{BPoly(Gaussian(a.b))}, state.expression, lambda);
    r.witness = exact_witness(residual);
    r.pass = residual.is_zero() && !state.expression.is_zero();
  } catch (const std::exception& e) {
    r.witness = std::string("error: ") + e.what();
  }
  return r;
}

VerifyReport eigen_grid_check(const CoeffMatrix& a, int m_tilde, const GridSpec& grid, double tol) {
  VerifyReport r = make_report("eigen-grid", state_params(a.l, m_tilde, a.b) + " grid=" + std::to_string(grid.n),
                               {double(a.l), double(m_tilde), to_double(a.b)});
  try {
    const auto state = eckart_eigenfunction(a, m_tilde);
    const double lambda = to_double(evaluate_at(eckart_eigenvalue(a.l), a.b).re());
    const double res = eigen_residual(EckartHam{BPoly(Gaussian(a.b))}, sample(state.expression, grid), lambda);
    r.witness = format_double(res);
    r.pass = res < tol;
  } catch (const std::exception& e) {
    r.witness = std::string("error: ") + e.what();
  }
  return r;
}

SurfaceExpression scaling_conjugation_defect(const SurfaceExpression& g, const BPoly& alpha) {
  const BPoly half = alpha.scaled(Gaussian(Rational(1, 2)));
  const SurfaceExpression formula =
      apply_exact(CasimirHyp{}, g) + g.scaled(half * half) +
      (differentiate(g) + SurfaceExpression::monomial(kHyp, 1, -1, BPoly(Gaussian(Rational(1, 2)))) * g)
          .scaled(alpha);
  const SurfaceExpression lowered = apply_exact(conjugate_by_scaling(CasimirHyp{}, alpha), g);
  if (lowered != formula) return lowered - formula;
  // Direct route: multiply by e^{alpha t/2}, apply C, divide again.
  SurfaceExpression direct = apply_exact(CasimirHyp{}, g.with_prefactor(g.exp_factor() + half, g.phase()));
  if (!direct.is_zero()) direct = direct.with_prefactor(g.exp_factor(), g.phase());
  return direct - formula;
}

SurfaceExpression coefficient_condition_defect(int l, int m_tilde, const std::vector<BPoly>& row) {
  if (l < 0 || m_tilde < 0 || m_tilde > l || static_cast<int>(row.size()) != l + 1) {
    throw std::invalid_argument("coefficient row does not match (l, mTilde)");
  }
  const SurfaceExpression inv_s2 = SurfaceExpression::monomial(kHyp, 0, -2);
  SurfaceExpression x(kHyp);
  SurfaceExpression rhs(kHyp);
  for (int m = m_tilde; m <= l; ++m) {
    if (row[m].is_zero()) continue;
    const SurfaceExpression term = legendre_hyp_exact({l, m}).scaled(row[m]);
    x = x + term;
    rhs = rhs - (inv_s2 * term).scaled(BPoly(m * m));
  }
  const SurfaceExpression lhs =
      (inv_s2 * x).scaled(BPoly(-m_tilde * m_tilde)) + apply_exact(Dl{l}, x).scaled(alpha_l(l));
  return lhs - rhs;
}

std::vector<VerifyReport> run_verify(const VerifyOptions& options) {
  if (options.l_max < 0) throw std::invalid_argument("lMax must be non-negative");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (options.hyperbolic_grid) validate(*options.hyperbolic_grid);
  if (options.trigonometric_grid) validate(*options.trigonometric_grid);
  std::vector<Task> tasks;
  const Suite s = options.suite;
  if (s == Suite::Recurrences || s == Suite::All) add_recurrences(tasks, options);
  if (s == Suite::Eigen || s == Suite::All) add_eigen(tasks, options);
  if (s == Suite::Decompositions || s == Suite::All) add_decompositions(tasks, options);
  if (s == Suite::Romanovski || s == Suite::All) add_romanovski(tasks, options);
  if (s == Suite::Complexify || s == Suite::All) add_complexify(tasks, options);

  Reports out = run_tasks(tasks, options.threads);
  std::sort(out.begin(), out.end(), [](const VerifyReport& a, const VerifyReport& b) {
    return std::tie(a.identity, a.sort_key, a.parameters) < std::tie(b.identity, b.sort_key, b.parameters);
  });
  return out;
}

bool all_pass(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::string reports_to_text(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.identity << " [" << r.parameters << "] " << r.witness << '\n';
  }
  return os.str();
}

std::string reports_to_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  os << "identity,status,parameters,witness\n";
  for (const auto& r : reports) {
    os << r.identity << ',' << (r.pass ? "pass" : "fail") << ',' << quoted(r.parameters) << ','
       << quoted(r.witness) << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  int passed = 0;
  for (const auto& r : reports) {
    j["reports"].push_back({{"identity", r.identity},
                            {"status", r.pass ? "pass" : "fail"},
                            {"witness", r.witness},
                            {"parameters", r.parameters}});
    passed += r.pass ? 1 : 0;
  }
  j["passed"] = passed;
  j["failed"] = static_cast<int>(reports.size()) - passed;
  return j.dump(2) + "\n";
}

}  // namespace eckart
