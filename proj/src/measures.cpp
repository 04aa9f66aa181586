#include "fgd/measures.hpp"

#include <algorithm>
#include <utility>

namespace fgd {

VertexMeasure::VertexMeasure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const Rational& w : weights_)
    if (w.sign() < 0)
      throw DomainError(Errc::not_fully_supported, "negative weight in a vertex measure");
}

VertexMeasure VertexMeasure::uniform(VertexId vertex_count, const Rational& value) {
  return VertexMeasure(std::vector<Rational>(static_cast<std::size_t>(vertex_count), value));
}

bool VertexMeasure::fully_supported() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w.sign() > 0; });
}

void VertexMeasure::require_fully_supported() const {
  for (std::size_t u = 0; u < weights_.size(); ++u)
    if (weights_[u].sign() <= 0)
      throw DomainError(Errc::not_fully_supported,
                        "vertex " + std::to_string(u) + " has zero weight");
}

VertexMeasure VertexMeasure::scaled(const Rational& c) const {
  std::vector<Rational> w = weights_;
  for (Rational& x : w) x *= c;
  return VertexMeasure(std::move(w));
}

GaussianRational integrate(const ArrowMeasure& m, const ArrowFn& f) {
  GaussianRational total;
  for (const auto& [gamma, value] : f.entries()) {
    if (!m.in_ambient(gamma))
      throw DomainError(Errc::ambient_mismatch,
                        to_string(gamma) + " is outside " + m.ambient_desc());
    total += m.weight(gamma) * value;
  }
  return total;
}

MeasureFamily counting_family(const Transversal& t) {
  const VertexId base = t.base();
  MeasureFamily mu;
  mu.base = base;
  mu.at = [base](VertexId u) {
    return ArrowMeasure(
        [base, u](const Arrow& a) {
          return Rational(a.range() == base && a.source() == u ? 1 : 0);
        },
        [base](const Arrow& a) { return a.range() == base; },
        "the cover over vertex " + std::to_string(base));
  };
  return mu;
}

VertexFn apply_family(const MeasureFamily& mu, const ArrowFn& f) {
  VertexFn out;
  std::map<VertexId, bool> touched;
  for (const auto& [gamma, value] : f.entries()) touched[gamma.source()] = true;
  for (const auto& [u, ignored] : touched) {
    (void)ignored;
    out.set(u, integrate(mu.at(u), f));
  }
  return out;
}

ArrowMeasure compose_family(const VertexMeasure& nu, const MeasureFamily& mu,
                            const Transversal& t) {
  nu.require_fully_supported();
  if (nu.size() != t.graph().vertex_count)
    throw DomainError(Errc::ambient_mismatch, "base measure size != vertex count");
  const VertexId base = t.base();
  const VertexId n = nu.size();
  return ArrowMeasure(
      [nu, mu, n](const Arrow& a) {
        // lambda(f) = sum_u nu(u) mu_u(f), evaluated at an indicator.
        Rational w(0);
        for (VertexId u = 0; u < n; ++u) w += nu.at(u) * mu.at(u).weight(a);
        return w;
      },
      [base](const Arrow& a) { return a.range() == base; },
      "the cover over vertex " + std::to_string(base));
}

ArrowMeasure pullback(const ArrowBijection& phi, const ArrowMeasure& m,
                      std::span<const Arrow> check_on) {
  for (const Arrow& a : check_on) {
    if (phi.inv(phi.fwd(a)) != a)
      throw DomainError(Errc::not_invertible,
                        "map fails to round-trip at " + to_string(a));
  }
  return ArrowMeasure([phi, m](const Arrow& a) { return m.weight(phi.fwd(a)); }, nullptr,
                      "pullback ambient");
}

ArrowMeasure translate_measure(const Arrow& eta, const ArrowMeasure& lam, VertexId base) {
  if (eta.range() != base)
    throw DomainError(Errc::bad_translator,
                      "translator " + to_string(eta) + " does not end at the base point");
  const VertexId w = eta.source();
  return ArrowMeasure(
      [eta, lam](const Arrow& delta) { return lam.weight(compose(eta, delta)); },
      [w](const Arrow& delta) { return delta.range() == w; },
      "the transversal over vertex " + std::to_string(w));
}

ArrowFn left_translate_fn(const Arrow& rho, const ArrowFn& f) {
  ArrowFn out;
  for (const auto& [gamma, value] : f.entries()) out.set(compose(rho, gamma), value);
  return out;
}

VertexFn averaging_family(const DeckAction& deck, const ArrowFn& f) {
  VertexFn out;
  for (const auto& [gamma, value] : f.entries()) {
    if (gamma.range() != deck.base)
      throw DomainError(Errc::ambient_mismatch, to_string(gamma) + " is not on the cover");
    out.add(gamma.source(), value);
  }
  return out;
}

ArrowFn mu_surjectivity_witness(const VertexFn& F, const Section& sec) {
  ArrowFn g;
  for (const auto& [u, value] : F.entries()) g.set(sec.at(u), value);
  return g;
}

CutoffFn::CutoffFn(std::map<Arrow, Rational> values) : val_(std::move(values)) {
  for (auto it = val_.begin(); it != val_.end();) {
    if (it->second.sign() < 0)
      throw DomainError(Errc::not_cutoff, "cutoff values must be nonnegative");
    it = it->second.is_zero() ? val_.erase(it) : std::next(it);
  }
}

Rational CutoffFn::at(const Arrow& a) const {
  auto it = val_.find(a);
  return it == val_.end() ? Rational(0) : it->second;
}

CutoffFn cutoff(const Section& sec) {
  std::map<Arrow, Rational> values;
  for (const Arrow& c : sec.to_base) values[c] = Rational(1);
  return CutoffFn(std::move(values));
}

namespace {

std::vector<Rational> fiber_sums(const CutoffFn& e, VertexId vertex_count) {
  std::vector<Rational> sums(static_cast<std::size_t>(vertex_count), Rational(0));
  for (const auto& [gamma, value] : e.values()) {
    if (!(gamma.source() >= 0 && gamma.source() < vertex_count))
      throw DomainError(Errc::ambient_mismatch, "cutoff entry outside the graph");
    sums[static_cast<std::size_t>(gamma.source())] += value;
  }
  return sums;
}

}  // namespace

CutoffFn normalize_cutoff(const CutoffFn& e, VertexId vertex_count) {
  const std::vector<Rational> sums = fiber_sums(e, vertex_count);
  for (VertexId u = 0; u < vertex_count; ++u)
    if (sums[static_cast<std::size_t>(u)].is_zero())
      throw DomainError(Errc::not_cutoff,
                        "fiber over vertex " + std::to_string(u) + " misses the cutoff");
  std::map<Arrow, Rational> values;
  for (const auto& [gamma, value] : e.values())
    values[gamma] = value / sums[static_cast<std::size_t>(gamma.source())];
  return CutoffFn(std::move(values));
}

VertexMeasure recover_base_measure(const ArrowMeasure& lam, const CutoffFn& h,
                                   VertexId vertex_count) {
  const std::vector<Rational> sums = fiber_sums(h, vertex_count);
  for (VertexId u = 0; u < vertex_count; ++u)
    if (sums[static_cast<std::size_t>(u)] != Rational(1))
      throw DomainError(Errc::not_cutoff, "cutoff is not normalized over vertex " +
                                              std::to_string(u));
  std::vector<Rational> nu(static_cast<std::size_t>(vertex_count), Rational(0));
  for (const auto& [gamma, value] : h.values())
    nu[static_cast<std::size_t>(gamma.source())] += value * lam.weight(gamma);
  return VertexMeasure(std::move(nu));
}

CheckResult check_equivariance(const MeasureFamily& family, const DeckAction& deck,
                               const Transversal& t, int radius, int trials, Sampler& rng) {
  CheckResult r;
  r.name = "family_equivariance";

  const std::vector<Arrow> cover = t.ball(radius);
  std::vector<Arrow> translators{Arrow::unit(t.base())};
  for (const Arrow& g : deck.generators) {
    translators.push_back(g);
    translators.push_back(inverse(g));
  }

  auto check_one = [&](const Arrow& rho, const ArrowFn& f) {
    // The deck action fixes the index (orbits are the fibers), so the two
    // sides of the equivariance identity integrate against the same index.
    VertexFn lhs = apply_family(family, f);
    VertexFn rhs = apply_family(family, left_translate_fn(rho, f));
    std::map<VertexId, bool> indices;
    for (const auto& [u, v] : lhs.entries()) indices[u] = true;
    for (const auto& [u, v] : rhs.entries()) indices[u] = true;
    for (const auto& [u, ignored] : indices) {
      (void)ignored;
      r.count(lhs.at(u) == rhs.at(u),
              "equivariance fails at vertex " + std::to_string(u) + " under " + to_string(rho));
    }
    if (indices.empty()) r.count(true, "");
  };

  // Exhaustive: generators against every ball indicator.
  for (const Arrow& rho : translators)
    for (const Arrow& y : cover) check_one(rho, ArrowFn::indicator(y));

  // Sampled: longer deck words against random small functions.
  if (!cover.empty()) {
    for (int i = 0; i < trials; ++i) {
      Arrow rho = Arrow::unit(t.base());
      const int hops = 1 + rng.below(3);
      for (int k = 0; k < hops; ++k) rho = compose(rho, rng.pick(translators));
      ArrowFn f;
      const int terms = 1 + rng.below(3);
      for (int k = 0; k < terms; ++k) f.add(rng.pick(cover), rng.small_gaussian());
      check_one(rho, f);
    }
  }
  return r;
}

}  // namespace fgd
