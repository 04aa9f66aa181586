#include "fgd/convalg.hpp"

#include <algorithm>

namespace fgd {

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g, const HaarSystem& h) {
  if (h.provenance != HaarProvenance::from_base_measure || !h.base_measure)
    throw DomainError(Errc::provenance_mismatch,
                      "convolution needs a system built from a base measure");
  const VertexMeasure& nu = *h.base_measure;
  AlgebraElement out;
  for (const auto& [eta, fv] : f.entries()) {
    for (const auto& [zeta, gv] : g.entries()) {
      if (eta.source() != zeta.range()) continue;
      out.add(compose(eta, zeta), nu.at(eta.source()) * (fv * gv));
    }
  }
  return out;
}

AlgebraElement involution(const AlgebraElement& f) {
  AlgebraElement out;
  for (const auto& [gamma, v] : f.entries()) out.set(inverse(gamma), v.conj());
  return out;
}

bool MatrixGR::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

MatrixGR MatrixGR::dagger() const {
  MatrixGR out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

MatrixGR& MatrixGR::operator+=(const MatrixGR& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

MatrixGR operator*(const MatrixGR& a, const MatrixGR& b) {
  MatrixGR out(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

void MatGroupElement::add(const Arrow& loop, const MatrixGR& m) {
  auto it = coef_.find(loop);
  if (it == coef_.end()) {
    if (!m.is_zero()) coef_.emplace(loop, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) coef_.erase(it);
}

MatrixGR MatGroupElement::at(const Arrow& loop) const {
  auto it = coef_.find(loop);
  return it == coef_.end() ? MatrixGR(n_) : it->second;
}

MatGroupElement star(const MatGroupElement& a, const MatGroupElement& b) {
  MatGroupElement out(a.n_);
  for (const auto& [r1, m1] : a.coef_)
    for (const auto& [r2, m2] : b.coef_) out.add(compose(r1, r2), m1 * m2);
  return out;
}

MatGroupElement MatGroupElement::dagger() const {
  MatGroupElement out(n_);
  for (const auto& [rho, m] : coef_) out.add(inverse(rho), m.dagger());
  return out;
}

SigmaWeights::SigmaWeights(std::vector<Rational> s) : sigma(std::move(s)) {
  for (const Rational& x : sigma)
    if (x.sign() <= 0)
      throw DomainError(Errc::not_fully_supported, "sigma weights must be positive");
}

VertexMeasure SigmaWeights::nu() const {
  std::vector<Rational> w;
  w.reserve(sigma.size());
  for (const Rational& x : sigma) w.push_back(x * x);
  return VertexMeasure(std::move(w));
}

namespace {

Rational entry_weight(const std::vector<Rational>& weights, TrivializationWeights mode,
                      VertexId u, VertexId v) {
  if (mode == TrivializationWeights::sigma_symmetric)
    return weights.at(static_cast<std::size_t>(u)) * weights.at(static_cast<std::size_t>(v));
  return weights.at(static_cast<std::size_t>(v));
}

}  // namespace

MatGroupElement trivialize(const AlgebraElement& f, const Section& sec,
                           const std::vector<Rational>& weights, TrivializationWeights mode) {
  const int n = static_cast<int>(sec.to_base.size());
  MatGroupElement out(n);
  for (const auto& [gamma, value] : f.entries()) {
    const VertexId u = gamma.range();
    const VertexId v = gamma.source();
    const Arrow rho = compose(compose(sec.at(u), gamma), inverse(sec.at(v)));
    MatrixGR m(n);
    m.at(u, v) = entry_weight(weights, mode, u, v) * value;
    out.add(rho, m);
  }
  return out;
}

AlgebraElement trivialize_inverse(const MatGroupElement& m, const Section& sec,
                                  const std::vector<Rational>& weights,
                                  TrivializationWeights mode) {
  AlgebraElement out;
  const int n = m.dim();
  for (const auto& [rho, mat] : m.entries()) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        const GaussianRational& z = mat.at(u, v);
        if (z.is_zero()) continue;
        const Arrow gamma = compose(compose(inverse(sec.at(u)), rho), sec.at(v));
        const Rational w = entry_weight(weights, mode, u, v);
        out.add(gamma, GaussianRational(Rational(1) / w) * z);
      }
  }
  return out;
}

namespace {

CheckResult verify_algebra_impl(const MultiGraph& g, VertexId base,
                                const std::vector<Rational>& weights, const VertexMeasure& nu,
                                TrivializationWeights mode, bool check_involution,
                                int pair_trials, int triple_trials, int radius, Sampler& rng) {
  CheckResult r;
  r.name = "algebra_isomorphism";

  const Transversal t(g, base);
  const SpanningTree tree = spanning_tree(g, base);
  const Section sec = section(t, tree);
  const HaarSystem h = haar_from_base_measure(nu, t, sec);
  const std::vector<Arrow> ball = enumerate_ball(g, radius);

  auto random_element = [&]() {
    AlgebraElement f;
    const int terms = 1 + rng.below(4);
    for (int k = 0; k < terms; ++k) f.add(rng.pick(ball), rng.small_gaussian());
    return f;
  };
  auto phi = [&](const AlgebraElement& f) { return trivialize(f, sec, weights, mode); };

  for (int i = 0; i < pair_trials; ++i) {
    const AlgebraElement f = random_element();
    const AlgebraElement k = random_element();
    r.count(phi(convolve(f, k, h)) == star(phi(f), phi(k)),
            "Phi(f*g) != Phi(f) star Phi(g)");
    if (check_involution)
      r.count(phi(involution(f)) == phi(f).dagger(), "Phi(f^*) != Phi(f) dagger");
    r.count(trivialize_inverse(phi(f), sec, weights, mode) == f,
            "Phi is not inverted by the back substitution");
    AlgebraElement sum = f;
    sum += k;
    MatGroupElement msum = phi(f);
    const MatGroupElement pk = phi(k);
    for (const auto& [rho, m] : pk.entries()) msum.add(rho, m);
    r.count(phi(sum) == msum, "Phi is not additive");
  }

  for (int i = 0; i < triple_trials; ++i) {
    const AlgebraElement a = random_element();
    const AlgebraElement b = random_element();
    const AlgebraElement c = random_element();
    r.count(convolve(convolve(a, b, h), c, h) == convolve(a, convolve(b, c, h), h),
            "convolution is not associative");
    r.count(involution(convolve(a, b, h)) == convolve(involution(b), involution(a), h),
            "involution is not an anti-homomorphism");
  }
  return r;
}

}  // namespace

CheckResult verify_algebra_iso(const MultiGraph& g, VertexId base, const SigmaWeights& sw,
                               int pair_trials, int triple_trials, int radius, Sampler& rng) {
  return verify_algebra_impl(g, base, sw.sigma, sw.nu(),
                             TrivializationWeights::sigma_symmetric, true, pair_trials,
                             triple_trials, radius, rng);
}

CheckResult verify_algebra_mult(const MultiGraph& g, VertexId base, const VertexMeasure& nu,
                                int pair_trials, int triple_trials, int radius, Sampler& rng) {
  nu.require_fully_supported();
  return verify_algebra_impl(g, base, nu.weights(), nu, TrivializationWeights::nu_right, false,
                             pair_trials, triple_trials, radius, rng);
}

}  // namespace fgd
