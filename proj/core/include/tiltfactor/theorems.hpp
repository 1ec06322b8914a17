#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiltfactor/character.hpp"
#include "tiltfactor/modular.hpp"

namespace tiltfactor {

enum class ClaimId {
  lemma,
  proposition,
  corollary_a,
  corollary_b,
  supplied_factorization,
};

std::string to_string(ClaimId id);

// Outcome of one verification run. `passed` is true exactly when `failures`
// is empty; rejected inputs (coverage, malformed data) throw instead of
// producing a report. A pass certifies character identities and structural
// sanity only, never module-level indecomposability.
struct VerificationReport {
  ClaimId claim = ClaimId::lemma;
  char type_letter = '?';
  int rank = 0;
  int p = 0;
  int r = 0;
  std::optional<Weight> mu;
  std::optional<Weight> lambda;
  std::optional<Weight> target;

  bool passed = false;
  bool donkin_assumed = false;

  std::optional<WeylCombo> lhs;
  std::optional<WeylCombo> rhs;
  std::optional<BigInt> dim_lhs;
  std::optional<BigInt> dim_rhs;

  std::vector<std::string> skipped;
  std::vector<std::string> failures;
};

// One tensor factorization of a tilting character into two simple
// characters, produced by swapping restricted digits between the two
// factors of the Steinberg-times-simple pair.
struct FactorizationCertificate {
  Weight target;
  std::vector<Weight> left_digits;   // little-endian
  std::vector<Weight> right_digits;  // little-endian
  Weight left_weight;
  Weight right_weight;
  std::set<int> swap_positions;
  bool character_checked = false;
};

// Steinberg times minuscule is tilting with the expected character:
// checks (i) the highest-short-coroot bound, (ii) the orbit-product
// expansion is multiplicity-free, all terms dominant, top term correct,
// (iii) the full convolution identity when within budget (marked skipped
// otherwise), (iv) the dimension identity, always.
// Rejects non-minuscule weights and types without minuscule weights.
VerificationReport check_lemma(const PrimeContext& ctx, const Weight& lambda,
                               const Budget& budget = {});

// Twisted tilting times Steinberg times simple equals the tilting character
// of p^r*mu + (p^r-1)*rho + lambda, as Weyl-character combinations.
VerificationReport check_proposition(const PrimeContext& ctx, int r, const Weight& mu,
                                     const Weight& lambda, const Budget& budget = {});

enum class CorollaryVariant { a, b };

// Variant a: T(p^r*mu + (p^r-1)*rho) tensor L(lambda).
// Variant b: requires certified simplicity of T(mu); St_r tensor
// L(p^r*mu + lambda). Both compared against the tilting character of
// the combined weight.
VerificationReport check_corollary(const PrimeContext& ctx, int r, const Weight& mu,
                                   const Weight& lambda, CorollaryVariant variant,
                                   const Budget& budget = {});

// All factorizations obtained by swapping digits at positions 0..r-1
// between the Steinberg factor and the simple factor, deduplicated as
// unordered pairs; each certificate's character identity is verified when
// within budget. r = 0 yields the single trivial certificate.
std::vector<FactorizationCertificate> enumerate_factorizations(const PrimeContext& ctx, int r,
                                                               const Weight& mu,
                                                               const Weight& lambda,
                                                               const Budget& budget = {});

// Checks a user-supplied factorization claim: realize(left) * realize(right)
// equals realize(tilt), where tilt must have nonnegative coefficients and
// top term {target: 1}. No statement about indecomposability is made.
VerificationReport verify_supplied_factorization(const PrimeContext& ctx, const Weight& target,
                                                 const WeylCombo& left, const WeylCombo& right,
                                                 const WeylCombo& tilt, const Budget& budget = {});

}  // namespace tiltfactor
