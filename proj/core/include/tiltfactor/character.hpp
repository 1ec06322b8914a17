#pragma once

#include <map>
#include <utility>

#include "tiltfactor/bigint.hpp"
#include "tiltfactor/budget.hpp"
#include "tiltfactor/errors.hpp"
#include "tiltfactor/root_datum.hpp"
#include "tiltfactor/weight.hpp"

namespace tiltfactor {

// Canonical term order: descending (height, lexicographic). Any order
// refining dominance works for unitriangular elimination; this one is
// deterministic and puts the top term first.
class WeightOrder {
 public:
  explicit WeightOrder(const RootDatum& datum) : datum_(&datum) {}
  bool operator()(const Weight& a, const Weight& b) const {
    const long long ha = height2(*datum_, a);
    const long long hb = height2(*datum_, b);
    if (ha != hb) return ha > hb;
    return b.coords() < a.coords();
  }

 private:
  const RootDatum* datum_;
};

using TermMap = std::map<Weight, BigInt, WeightOrder>;

// A W-invariant weight-multiplicity function, stored on its dominant support
// only: every key is dominant, every multiplicity positive. The value at an
// arbitrary weight is the value at its dominant representative.
class Character {
 public:
  static Character trivial(const RootDatum& datum);
  // Validates dominance of keys and positivity of multiplicities.
  static Character from_entries(const RootDatum& datum, TermMap entries);

  const RootDatum& datum() const { return *datum_; }
  const TermMap& entries() const { return entries_; }

  // W-invariant lookup at any weight.
  BigInt multiplicity(const Weight& w) const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.datum_->same_as(*b.datum_) && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

 private:
  Character(const RootDatum& datum, TermMap entries)
      : datum_(&datum), entries_(std::move(entries)) {}

  const RootDatum* datum_;
  TermMap entries_;
};

// A formal integer combination of Weyl characters chi(lambda). Coefficients
// may be negative (intermediate results of the orbit-product expansion are
// virtual); keys are dominant and coefficients nonzero.
class WeylCombo {
 public:
  static WeylCombo empty(const RootDatum& datum);
  static WeylCombo single(const RootDatum& datum, const Weight& lambda, BigInt coeff = 1);
  static WeylCombo from_terms(const RootDatum& datum, TermMap terms);

  const RootDatum& datum() const { return *datum_; }
  const TermMap& terms() const { return terms_; }
  bool all_nonnegative() const;

  friend bool operator==(const WeylCombo& a, const WeylCombo& b) {
    return a.datum_->same_as(*b.datum_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylCombo& a, const WeylCombo& b) { return !(a == b); }

 private:
  WeylCombo(const RootDatum& datum, TermMap terms) : datum_(&datum), terms_(std::move(terms)) {}

  const RootDatum* datum_;
  TermMap terms_;
};

// Character of the Weyl module of highest weight lambda, via Freudenthal's
// multiplicity recursion on the dominant support.
Character weyl_character(const RootDatum& datum, const Weight& lambda, const Budget& budget = {});

// The W-invariant indicator of the orbit of lambda: entries {lambda: 1}.
Character orbit_sum(const RootDatum& datum, const Weight& lambda);

// Pointwise convolution of weight multiplicities. Expands the smaller factor
// into full orbit form and streams the other factor's orbits against it,
// re-dominantizing each resulting weight immediately. Refuses jobs whose
// estimated cost (product of dimensions) exceeds budget.convolution_limit.
Character tensor_product(const Character& a, const Character& b, const Budget& budget = {});

// Multiplies a combination of Weyl characters by the orbit sum of mu:
// chi(lambda) * s(mu) = sum over the orbit of chi(lambda + nu), each term
// normalized by the signed dot-reflection (wall terms drop).
WeylCombo brauer_product(const WeylCombo& combo, const Weight& mu, const Budget& budget = {});

// The unique integer combination of Weyl characters equal to c
// (unitriangular elimination in the canonical order). Always solvable.
WeylCombo decompose_weyl(const Character& c, const Budget& budget = {});

// Sum of coeff * weyl_character(lambda) over the combo's terms.
// Throws InvalidInput when a coefficient is negative.
Character realize(const WeylCombo& combo, const Budget& budget = {});

// Scales every weight by q >= 1 (q = p^r realizes an r-fold Frobenius twist
// at character level). Dimension is preserved.
Character frobenius_twist(const Character& c, long q);

// Total dimension: sum of multiplicity * orbit size over the dominant
// support, orbit sizes by the stabilizer formula (no enumeration).
BigInt dimension(const Character& c);

}  // namespace tiltfactor
