#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eckart/expansion.hpp"
#include "eckart/operators.hpp"
#include "eckart/rational.hpp"

namespace eckart {

enum class Suite { Recurrences, Eigen, Decompositions, Romanovski, Complexify, All };

Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct VerifyOptions {
  Suite suite = Suite::All;
  int l_max = 4;
  std::vector<Rational> couplings{Rational(1, 2), Rational(1), Rational(2)};
  /// Relative tolerance of the finite-difference checks. Exact checks use 0.
  double tol = 1e-7;
  /// Skip the finite-difference checks entirely.
  bool numeric = true;
  std::optional<GridSpec> hyperbolic_grid;
  std::optional<GridSpec> trigonometric_grid;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// One checked identity at one parameter tuple. `witness` is the exact
/// residual in canonical text ("0" when it vanishes) or a numeric norm.
struct VerifyReport {
  std::string identity;
  bool pass = false;
  std::string witness;
  std::string parameters;
  /// Numeric ordering key for the parameters (l, m~, b, ...).
  std::vector<double> sort_key;
};

/// Runs every check of the selected suite. Reports are sorted by identity,
/// then by parameters, independent of the execution order.
std::vector<VerifyReport> run_verify(const VerifyOptions& options);

bool all_pass(const std::vector<VerifyReport>& reports);

/// "PASS identity [parameters] witness" lines.
std::string reports_to_text(const std::vector<VerifyReport>& reports);
std::string reports_to_csv(const std::vector<VerifyReport>& reports);
/// {"reports": [{"identity", "status", "witness", "parameters"}...], "passed", "failed"}
std::string reports_to_json(const std::vector<VerifyReport>& reports);

/// Exact residual of (C + 2b coth) on the state built from `a` (row |m~|)
/// against l(l+1) + alpha_l^2/4.
VerifyReport eigen_exact_check(const CoeffMatrix& a, int m_tilde);
/// Relative finite-difference residual of the same pair on `grid`.
VerifyReport eigen_grid_check(const CoeffMatrix& a, int m_tilde, const GridSpec& grid, double tol);

/// Conjugation of the hyperbolic Casimir by e^{alpha t/2}, checked against the
/// closed form C + alpha^2/4 + alpha (d/dt + c/(2s)) on g. Returns the
/// difference, which vanishes identically.
SurfaceExpression scaling_conjugation_defect(const SurfaceExpression& g, const BPoly& alpha);

/// Left minus right side of the coefficient condition
///   [-m~^2/s^2 + alpha_l D_l] sum_m a_m P_l^m = -sum_m a_m (m^2/s^2) P_l^m
/// for row m~ of the given coefficient rows (symbolic b).
SurfaceExpression coefficient_condition_defect(int l, int m_tilde, const std::vector<BPoly>& row);

}  // namespace eckart
