#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fgd/cover.hpp"
#include "fgd/rational.hpp"
#include "fgd/report.hpp"
#include "fgd/sampler.hpp"

namespace fgd {

// Finitely supported function with values in Q(i); entries that become zero
// are dropped, so support() is exact. The discrete stand-in for C_c.
template <typename K>
class FinSuppFn {
public:
  FinSuppFn() = default;

  static FinSuppFn indicator(const K& k) {
    FinSuppFn f;
    f.set(k, GaussianRational(Rational(1)));
    return f;
  }

  void set(const K& k, GaussianRational v) {
    if (v.is_zero())
      coef_.erase(k);
    else
      coef_[k] = std::move(v);
  }
  void add(const K& k, const GaussianRational& v) {
    auto it = coef_.find(k);
    if (it == coef_.end()) {
      if (!v.is_zero()) coef_.emplace(k, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) coef_.erase(it);
  }

  GaussianRational at(const K& k) const {
    auto it = coef_.find(k);
    return it == coef_.end() ? GaussianRational() : it->second;
  }

  bool empty() const { return coef_.empty(); }
  std::size_t size() const { return coef_.size(); }
  const std::map<K, GaussianRational>& entries() const { return coef_; }

  FinSuppFn& operator+=(const FinSuppFn& o) {
    for (const auto& [k, v] : o.coef_) add(k, v);
    return *this;
  }
  FinSuppFn scaled(const GaussianRational& c) const {
    FinSuppFn out;
    for (const auto& [k, v] : coef_) out.set(k, c * v);
    return out;
  }

  friend bool operator==(const FinSuppFn&, const FinSuppFn&) = default;

private:
  std::map<K, GaussianRational> coef_;
};

using ArrowFn = FinSuppFn<Arrow>;
using VertexFn = FinSuppFn<VertexId>;

// Measure on the (finite) vertex set, given by nonnegative weights.
class VertexMeasure {
public:
  VertexMeasure() = default;
  explicit VertexMeasure(std::vector<Rational> weights);

  static VertexMeasure uniform(VertexId vertex_count, const Rational& value);

  VertexId size() const { return static_cast<VertexId>(weights_.size()); }
  const Rational& at(VertexId u) const { return weights_.at(static_cast<std::size_t>(u)); }
  const std::vector<Rational>& weights() const { return weights_; }

  bool fully_supported() const;
  void require_fully_supported() const;  // NotFullySupported

  VertexMeasure scaled(const Rational& c) const;

  friend bool operator==(const VertexMeasure&, const VertexMeasure&) = default;

private:
  std::vector<Rational> weights_;
};

// Measure on a discrete arrow set, as a computable weight function plus an
// ambient membership test (e.g. "lives on the cover over x"). Fibers may be
// infinite; integration only ever meets finitely supported functions.
class ArrowMeasure {
public:
  ArrowMeasure() = default;
  ArrowMeasure(std::function<Rational(const Arrow&)> weight,
               std::function<bool(const Arrow&)> ambient, std::string ambient_desc)
      : weight_(std::move(weight)),
        ambient_(std::move(ambient)),
        ambient_desc_(std::move(ambient_desc)) {}

  Rational weight(const Arrow& a) const { return weight_(a); }
  bool in_ambient(const Arrow& a) const { return !ambient_ || ambient_(a); }
  const std::string& ambient_desc() const { return ambient_desc_; }

private:
  std::function<Rational(const Arrow&)> weight_;
  std::function<bool(const Arrow&)> ambient_;
  std::string ambient_desc_;
};

// sum f(gamma) * weight(gamma) over supp f. Throws AmbientMismatch when f
// has support outside the measure's ambient set.
GaussianRational integrate(const ArrowMeasure& m, const ArrowFn& f);

// Family of fiber measures along the covering map s|_{G^x}, indexed by the
// vertices below.
struct MeasureFamily {
  VertexId base = 0;
  std::function<ArrowMeasure(VertexId)> at;
};

// The counting family: each fiber carries the counting measure.
MeasureFamily counting_family(const Transversal& t);

// mu(f): vertex u -> mu_u(f). Finitely supported on vertices.
VertexFn apply_family(const MeasureFamily& mu, const ArrowFn& f);

// nu o mu on the cover, evaluated through the family (the weight of gamma
// comes out as nu(source(gamma))). Requires nu fully supported.
ArrowMeasure compose_family(const VertexMeasure& nu, const MeasureFamily& mu,
                            const Transversal& t);

// Invertible arrow map given by both directions.
struct ArrowBijection {
  std::function<Arrow(const Arrow&)> fwd;
  std::function<Arrow(const Arrow&)> inv;
};

// phi^* m with weight(gamma) = m(phi(gamma)). The two directions of phi are
// round-trip checked on `check_on`; throws NotInvertible.
ArrowMeasure pullback(const ArrowBijection& phi, const ArrowMeasure& m,
                      std::span<const Arrow> check_on);

// Translated measure on G^{s(eta)}: weight(delta) = lam(eta . delta).
// Requires r(eta) == base (BadTranslator).
ArrowMeasure translate_measure(const Arrow& eta, const ArrowMeasure& lam, VertexId base);

// Push a function along left translation: (rho . f)(rho gamma) = f(gamma).
// Every support arrow must compose with rho.
ArrowFn left_translate_fn(const Arrow& rho, const ArrowFn& f);

// Averaging along the deck orbits (orbit of y <-> vertex s(y)): the value
// over the orbit of y is sum of f over the covering fiber through y.
VertexFn averaging_family(const DeckAction& deck, const ArrowFn& f);

// Section-supported preimage under mu: g(c_u) = F(u), so that
// apply_family(counting, g) returns F. Witnesses surjectivity of mu.
ArrowFn mu_surjectivity_witness(const VertexFn& F, const Section& sec);

// Nonnegative finitely supported function on the cover touching every
// covering fiber.
class CutoffFn {
public:
  CutoffFn() = default;
  explicit CutoffFn(std::map<Arrow, Rational> values);

  const std::map<Arrow, Rational>& values() const { return val_; }
  Rational at(const Arrow& a) const;

  friend bool operator==(const CutoffFn&, const CutoffFn&) = default;

private:
  std::map<Arrow, Rational> val_;
};

// The indicator of the section arrows: one positive point per fiber.
CutoffFn cutoff(const Section& sec);

// h(gamma) = e(gamma) / (fiber sum of e). Throws NotCutoff when some vertex
// has no positive entry. Fiber sums after normalization are exactly 1.
CutoffFn normalize_cutoff(const CutoffFn& e, VertexId vertex_count);

// nu(u) = sum over supp h with source u of h * lam. For a normalized h and a
// deck-invariant lam this is the unique base measure with lam = nu o mu.
// Throws NotCutoff unless h is normalized and touches every fiber.
VertexMeasure recover_base_measure(const ArrowMeasure& lam, const CutoffFn& h,
                                   VertexId vertex_count);

// Equivariance of a family under the deck action: integrating f against the
// fiber measure equals integrating the translated function, for sampled
// (rho, f) and exhaustively over generators and ball indicators.
CheckResult check_equivariance(const MeasureFamily& family, const DeckAction& deck,
                               const Transversal& t, int radius, int trials, Sampler& rng);

}  // namespace fgd
