#pragma once

#include <map>
#include <vector>

#include "fgd/haar.hpp"

namespace fgd {

// Finitely supported Q(i)-valued function on arrows; the element type of
// the convolution algebra.
using AlgebraElement = ArrowFn;

// (f * g)(gamma) = sum over eta in G^{r(gamma)} of f(eta) g(eta^-1 gamma)
// nu(s(eta)), the convolution against a base-measure Haar system. Throws
// ProvenanceMismatch when the system does not carry its base measure.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g, const HaarSystem& h);

// f^*(gamma) = conj f(gamma^-1).
AlgebraElement involution(const AlgebraElement& f);

// Dense square matrix over Q(i).
class MatrixGR {
public:
  MatrixGR() = default;
  explicit MatrixGR(int n) : n_(n), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int dim() const { return n_; }
  GaussianRational& at(int row, int col) {
    return m_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(col)];
  }
  const GaussianRational& at(int row, int col) const {
    return m_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(col)];
  }

  bool is_zero() const;
  MatrixGR dagger() const;  // conjugate transpose

  MatrixGR& operator+=(const MatrixGR& o);
  friend MatrixGR operator*(const MatrixGR& a, const MatrixGR& b);
  friend bool operator==(const MatrixGR&, const MatrixGR&) = default;

private:
  int n_ = 0;
  std::vector<GaussianRational> m_;
};

// Finitely supported matrix-valued function on the isotropy group: the
// finite-rank realization of (group algebra) tensor (matrix units). Keys
// are loops at the base point; all-zero matrices are dropped.
class MatGroupElement {
public:
  explicit MatGroupElement(int dim = 0) : n_(dim) {}

  int dim() const { return n_; }
  const std::map<Arrow, MatrixGR>& entries() const { return coef_; }

  void add(const Arrow& loop, const MatrixGR& m);
  MatrixGR at(const Arrow& loop) const;

  // Group-algebra convolution with matrix multiplication.
  friend MatGroupElement star(const MatGroupElement& a, const MatGroupElement& b);
  MatGroupElement dagger() const;  // rho -> conj-transpose of the value at rho^-1

  friend bool operator==(const MatGroupElement&, const MatGroupElement&) = default;

private:
  int n_;
  std::map<Arrow, MatrixGR> coef_;
};

// Positive square-root weights: nu(u) = sigma(u)^2, so the trivialization
// below preserves the involution inside rational arithmetic.
struct SigmaWeights {
  std::vector<Rational> sigma;

  explicit SigmaWeights(std::vector<Rational> s);
  VertexMeasure nu() const;
};

enum class TrivializationWeights {
  sigma_symmetric,  // entry weight sigma(u) sigma(v); multiplicative and involutive
  nu_right,         // entry weight nu(v); multiplicative only
};

// The matrix-unit trivialization over a section:
//   Phi(f)(rho)_{u,v} = f(c_u^-1 rho c_v) * W(u, v).
MatGroupElement trivialize(const AlgebraElement& f, const Section& sec,
                           const std::vector<Rational>& weights, TrivializationWeights mode);

AlgebraElement trivialize_inverse(const MatGroupElement& m, const Section& sec,
                                  const std::vector<Rational>& weights,
                                  TrivializationWeights mode);

// Random-element verification that Phi is a *-isomorphism onto the matrix
// group algebra: multiplicative, involutive, linear, with two-sided inverse,
// plus associativity of the convolution itself.
CheckResult verify_algebra_iso(const MultiGraph& g, VertexId base, const SigmaWeights& sw,
                               int pair_trials, int triple_trials, int radius, Sampler& rng);

// Variant for a directly supplied base measure: Phi runs with nu(v) entry
// weights, so only multiplicativity (not the involution) is asserted.
CheckResult verify_algebra_mult(const MultiGraph& g, VertexId base, const VertexMeasure& nu,
                                int pair_trials, int triple_trials, int radius, Sampler& rng);

}  // namespace fgd
