#pragma once

#include <string>
#include <vector>

#include "eckart/polynomial.hpp"
#include "eckart/specfun.hpp"

namespace eckart {

// Closed-form spectral data in units hbar = 1, 2M = 1. `epsilon` is the
// Eckart eigenvalue in the convention (C + 2b coth eta) X = -epsilon X, so
// epsilon = -l(l+1) - b^2/(l+1/2)^2. The Rosen-Morse value is the eigenvalue
// of (L^2 - 2b cot theta).

/// 2b / (l + 1/2).
Rational alpha_l(int l, const Rational& b);
/// Same, with b the formal coupling.
BPoly alpha_l(int l);

Rational eckart_energy(int l, const Rational& b);
Rational rosen_morse_energy(int l, const Rational& b);

/// Eigenvalue of (C + 2b coth eta) on the level-l multiplet:
/// l(l+1) + alpha_l^2/4 = -epsilon.
BPoly eckart_eigenvalue(int l);
/// Eigenvalue of (L^2 - 2b cot theta): l(l+1) - alpha_l^2/4.
BPoly rosen_morse_eigenvalue(int l);

/// gamma_l = b/(l+1/2) - (l+1/2), delta_l = -b/(l+1/2) - (l+1/2).
JacobiParams jacobi_params(int l, const Rational& b);

/// l = mTilde + n.
int quantum_numbers(int n, int m_tilde);

/// (2l + 1).
int degeneracy(int l);

struct SpectrumEntry {
  int l = 0;
  Rational b;
  Rational alpha_l;
  Rational epsilon;
  Rational epsilon_rm;
  Rational gamma_l;
  Rational delta_l;
  int degeneracy = 1;
};

std::vector<SpectrumEntry> spectrum_table(int l_max, const Rational& b);

/// Header "l,b,alpha_l,epsilon,epsilon_rm,gamma,delta,degeneracy" plus one
/// row per entry, exact rationals as p/q.
std::string spectrum_to_csv(const std::vector<SpectrumEntry>& table);
std::string spectrum_to_json(const std::vector<SpectrumEntry>& table);

}  // namespace eckart
