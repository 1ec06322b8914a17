#pragma once

#include <optional>
#include <vector>

#include "tiltfactor/character.hpp"
#include "tiltfactor/root_datum.hpp"

namespace tiltfactor {

// A root datum together with a prime characteristic. The flag records
// whether results downstream lean on the tensor product theorem for tilting
// modules below its unconditional range p >= 2h-2.
class PrimeContext {
 public:
  // Validates primality by trial division; rejects p < 2 and composites.
  PrimeContext(const RootDatum& datum, int p);

  const RootDatum& datum() const { return *datum_; }
  int p() const { return p_; }
  int two_h_minus_2() const { return two_h_minus_2_; }
  bool donkin_assumed() const { return donkin_assumed_; }

 private:
  const RootDatum* datum_;
  int p_;
  int two_h_minus_2_;
  bool donkin_assumed_;
};

// Base-p digits of a dominant weight, little-endian: digits[j] carries the
// factor p^j; every digit is restricted (coordinates in [0, p-1]); trailing
// zero digits are trimmed.
struct PAdicExpansion {
  std::vector<Weight> digits;
};

// True iff every simple-coroot pairing of lambda is < p^r.
bool is_restricted(const PrimeContext& ctx, int r, const Weight& lambda);

PAdicExpansion p_expand(const PrimeContext& ctx, const Weight& lambda);
Weight p_contract(const PrimeContext& ctx, const PAdicExpansion& expansion);

// The nonzero minuscule weights of the datum's type (classification table);
// the zero weight is minuscule as well but reported separately.
std::vector<Weight> minuscule_weights(const RootDatum& datum);
bool is_minuscule(const RootDatum& datum, const Weight& lambda);

// lambda is r-minuscule when its expansion has at most r digits, each zero
// or minuscule. On success `digits` is the witness, padded to exactly r.
struct RMinusculeWitness {
  bool ok = false;
  std::vector<Weight> digits;
};
RMinusculeWitness is_r_minuscule(const PrimeContext& ctx, int r, const Weight& lambda);

// (p^r - 1) * rho, the r-th Steinberg highest weight.
Weight steinberg_weight(const PrimeContext& ctx, int r);

// Character of the simple module L(lambda), assembled from the twisted
// tensor product of digit characters. Covered digits: zero, minuscule, or
// (p-1)rho; in type A1 every restricted digit. Throws CoverageError naming
// the offending digit otherwise.
Character simple_character(const PrimeContext& ctx, const Weight& lambda,
                           const Budget& budget = {});

// One step of the canonical tilting decomposition:
// hw = p^r * mu + (p^r - 1) * rho + lambda with lambda r-minuscule, choosing
// the largest admissible r. nullopt when no r >= 1 works.
struct TiltingStep {
  int r = 0;
  Weight mu;
  Weight lambda;
};
std::optional<TiltingStep> tilting_greedy_step(const PrimeContext& ctx, const Weight& hw);

// Whether tilting_character covers hw: zero, minuscule, restricted in type
// A1, or a greedy step whose cofactor is covered recursively.
bool tilting_covered(const PrimeContext& ctx, const Weight& hw);

// Character of the indecomposable tilting module T(hw) on the covered
// region: the orbit-product expansion of each restricted layer, twisted and
// multiplied along the greedy decomposition. Throws CoverageError with the
// failing decomposition otherwise.
Character tilting_character(const PrimeContext& ctx, const Weight& hw, const Budget& budget = {});

// Independent rank-1 route: the standard recursion for SL2 tilting
// characters (chi(m) below p-1; chi(m) + chi(2p-2-m) in the first wall
// window; one twisted factor peeled off above it). Requires a type A1
// context; total in m >= 0.
Character a1_tilting_character(const PrimeContext& ctx, long m, const Budget& budget = {});

}  // namespace tiltfactor
