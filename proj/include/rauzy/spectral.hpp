#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/types.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// Column j is the word vector of sigma([j]), so word vectors evolve by
// v_{n+1} = M v_n.
inline LatticeMat substitution_matrix(const Substitution& sigma) {
  const int d = sigma.alphabet_size();
  LatticeMat m(d, d);
  for (int j = 0; j < d; ++j) m.col(j) = word_vector(sigma.rule(j));
  return m;
}

struct SpectrumOptions {
  double power_tol = 1e-12;       // relative residual for power iteration
  int max_iterations = 100'000;
  double unit_margin = 1e-9;      // Pisot test requires |mu| < 1 - unit_margin
  bool enforce_unit_margin = true;
};

struct PisotSpectrum {
  double lambda = 0.0;
  RealVec v_inf;                       // unit, entrywise positive for Pisot input
  bool is_pisot = false;
  std::vector<double> other_root_moduli;  // moduli of the non-dominant eigenvalues
};

namespace detail {

// Moduli of the two remaining roots of the characteristic cubic after the
// dominant root lambda is divided out.
inline std::vector<double> residual_quadratic_moduli_3x3(const LatticeMat& m, double lambda) {
  const double trace = static_cast<double>(m.trace());
  const double minors = static_cast<double>(
      m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
      m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  // p(x) = x^3 - trace x^2 + minors x - det = (x - lambda)(x^2 + a x + b) + r
  const double a = lambda - trace;
  const double b = minors + lambda * a;
  const double disc = a * a - 4.0 * b;
  if (disc < 0.0) {
    const double mod = std::sqrt(b);  // complex pair, |mu|^2 = b
    return {mod, mod};
  }
  const double root = std::sqrt(disc);
  return {std::abs((-a + root) / 2.0), std::abs((-a - root) / 2.0)};
}

inline std::vector<double> eigensolver_moduli(const LatticeMat& m, double lambda) {
  Eigen::EigenSolver<RealMat> solver(m.cast<double>());
  std::vector<double> moduli;
  for (Index i = 0; i < m.rows(); ++i) moduli.push_back(std::abs(solver.eigenvalues()[i]));
  // drop the one eigenvalue matching the dominant root
  Index dominant = 0;
  for (Index i = 1; i < static_cast<Index>(moduli.size()); ++i) {
    if (std::abs(moduli[i] - lambda) < std::abs(moduli[dominant] - lambda)) dominant = i;
  }
  moduli.erase(moduli.begin() + dominant);
  return moduli;
}

}  // namespace detail

// Dominant eigenpair by power iteration from the all-ones vector, plus the
// Pisot test over the remaining eigenvalue moduli.
inline PisotSpectrum spectrum(const LatticeMat& m, const SpectrumOptions& opts = {}) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("spectrum: matrix must be square and nonempty");
  }
  const RealMat a = m.cast<double>();
  RealVec x = RealVec::Ones(m.rows()).normalized();
  double lambda = 0.0;
  bool converged = false;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const RealVec ax = a * x;
    lambda = x.dot(ax);
    if ((ax - lambda * x).norm() <= opts.power_tol * std::abs(lambda)) {
      converged = true;
      break;
    }
    const double n = ax.norm();
    if (n == 0.0) break;
    x = ax / n;
  }
  if (!converged) throw NonConvergentError("spectrum: power iteration did not converge");

  PisotSpectrum out;
  out.lambda = lambda;
  if (x.sum() < 0.0) x = -x;
  out.v_inf = x;
  out.other_root_moduli = m.rows() == 3 ? detail::residual_quadratic_moduli_3x3(m, lambda)
                                        : detail::eigensolver_moduli(m, lambda);
  const double bound = opts.enforce_unit_margin ? 1.0 - opts.unit_margin : 1.0;
  bool others_inside = true;
  for (double mod : out.other_root_moduli) others_inside = others_inside && mod < bound;
  out.is_pisot = lambda > 1.0 && others_inside;
  return out;
}

inline PisotSpectrum spectrum(const Substitution& sigma, const SpectrumOptions& opts = {}) {
  return spectrum(substitution_matrix(sigma), opts);
}

}  // namespace rauzy
