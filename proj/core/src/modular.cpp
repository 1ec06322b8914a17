#include "tiltfactor/modular.hpp"

#include <algorithm>
#include <string>

namespace tiltfactor {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long ipow(int base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Weight fundamental_weight(const RootDatum& datum, int i) {
  Weight w = Weight::zero(datum.rank());
  w[i - 1] = 1;
  return w;
}

}  // namespace

PrimeContext::PrimeContext(const RootDatum& datum, int p) : datum_(&datum), p_(p) {
  if (!is_prime(p)) throw InvalidInput("characteristic must be prime, got " + std::to_string(p));
  two_h_minus_2_ = 2 * datum.coxeter_number() - 2;
  donkin_assumed_ = p < two_h_minus_2_;
}

bool is_restricted(const PrimeContext& ctx, int r, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InvalidInput("is_restricted requires a dominant weight");
  if (r < 1) throw InvalidInput("is_restricted requires r >= 1");
  const long long bound = ipow(ctx.p(), r);
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda[i] >= bound) return false;
  return true;
}

PAdicExpansion p_expand(const PrimeContext& ctx, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InvalidInput("p_expand requires a dominant weight");
  PAdicExpansion out;
  Weight rest = lambda;
  while (!rest.is_zero()) {
    Weight digit = Weight::zero(lambda.rank());
    for (int i = 0; i < lambda.rank(); ++i) {
      digit[i] = rest[i] % ctx.p();
      rest[i] /= ctx.p();
    }
    out.digits.push_back(std::move(digit));
  }
  return out;
}

Weight p_contract(const PrimeContext& ctx, const PAdicExpansion& expansion) {
  Weight out = Weight::zero(ctx.datum().rank());
  long long scale = 1;
  for (const Weight& d : expansion.digits) {
    for (int i = 0; i < out.rank(); ++i) out[i] += static_cast<int>(scale) * d[i];
    scale *= ctx.p();
  }
  return out;
}

std::vector<Weight> minuscule_weights(const RootDatum& datum) {
  std::vector<Weight> out;
  const int n = datum.rank();
  switch (datum.type_letter()) {
    case 'A':
      for (int j = 1; j <= n; ++j) out.push_back(fundamental_weight(datum, j));
      break;
    case 'B':
      out.push_back(fundamental_weight(datum, n));
      break;
    case 'C':
      out.push_back(fundamental_weight(datum, 1));
      break;
    case 'D':
      out.push_back(fundamental_weight(datum, 1));
      out.push_back(fundamental_weight(datum, n - 1));
      out.push_back(fundamental_weight(datum, n));
      break;
    case 'E':
      if (n == 6) {
        out.push_back(fundamental_weight(datum, 1));
        out.push_back(fundamental_weight(datum, 6));
      } else if (n == 7) {
        out.push_back(fundamental_weight(datum, 7));
      }
      break;
    default:  // E8, F4, G2: none
      break;
  }
  return out;
}

bool is_minuscule(const RootDatum& datum, const Weight& lambda) {
  const auto list = minuscule_weights(datum);
  return std::find(list.begin(), list.end(), lambda) != list.end();
}

RMinusculeWitness is_r_minuscule(const PrimeContext& ctx, int r, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InvalidInput("is_r_minuscule requires a dominant weight");
  if (r < 0) throw InvalidInput("is_r_minuscule requires r >= 0");
  RMinusculeWitness out;
  PAdicExpansion exp = p_expand(ctx, lambda);
  if (static_cast<int>(exp.digits.size()) > r) return out;
  for (const Weight& d : exp.digits)
    if (!d.is_zero() && !is_minuscule(ctx.datum(), d)) return out;
  out.ok = true;
  out.digits = std::move(exp.digits);
  out.digits.resize(static_cast<std::size_t>(r), Weight::zero(lambda.rank()));
  return out;
}

Weight steinberg_weight(const PrimeContext& ctx, int r) {
  if (r < 1) throw InvalidInput("steinberg_weight requires r >= 1");
  const long long c = ipow(ctx.p(), r) - 1;
  return Weight(std::vector<int>(ctx.datum().rank(), static_cast<int>(c)));
}

Character simple_character(const PrimeContext& ctx, const Weight& lambda, const Budget& budget) {
  if (!is_dominant(lambda)) throw InvalidInput("simple_character requires a dominant weight");
  const RootDatum& datum = ctx.datum();
  const Weight restricted_top = Weight(std::vector<int>(datum.rank(), ctx.p() - 1));

  PAdicExpansion exp = p_expand(ctx, lambda);
  Character out = Character::trivial(datum);
  long long scale = 1;
  for (std::size_t j = 0; j < exp.digits.size(); ++j) {
    const Weight& d = exp.digits[j];
    if (!d.is_zero()) {
      const bool covered = is_minuscule(datum, d) || d == restricted_top ||
                           (datum.type_letter() == 'A' && datum.rank() == 1);
      if (!covered)
        throw CoverageError("simple_character(" + to_string(lambda) + "): digit " +
                            std::to_string(j) + " = " + to_string(d) +
                            " is not zero, minuscule, or (p-1)rho; the simple character "
                            "oracle does not cover it");
      out = tensor_product(out, frobenius_twist(weyl_character(datum, d, budget), scale), budget);
    }
    scale *= ctx.p();
  }
  return out;
}

std::optional<TiltingStep> tilting_greedy_step(const PrimeContext& ctx, const Weight& hw) {
  const int n = ctx.datum().rank();
  int min_coord = hw[0];
  for (int i = 1; i < n; ++i) min_coord = std::min(min_coord, hw[i]);

  int r_max = 0;
  long long q = 1;
  while (q * ctx.p() - 1 <= min_coord) {
    q *= ctx.p();
    ++r_max;
  }
  for (int r = r_max; r >= 1; --r) {
    const long long pr = ipow(ctx.p(), r);
    TiltingStep step;
    step.r = r;
    step.mu = Weight::zero(n);
    step.lambda = Weight::zero(n);
    for (int i = 0; i < n; ++i) {
      const long long rem = hw[i] - (pr - 1);
      step.lambda[i] = static_cast<int>(rem % pr);
      step.mu[i] = static_cast<int>(rem / pr);
    }
    if (is_r_minuscule(ctx, r, step.lambda).ok) return step;
  }
  return std::nullopt;
}

bool tilting_covered(const PrimeContext& ctx, const Weight& hw) {
  if (!is_dominant(hw)) return false;
  Weight cur = hw;
  while (true) {
    if (cur.is_zero() || is_minuscule(ctx.datum(), cur)) return true;
    if (ctx.datum().type_letter() == 'A' && ctx.datum().rank() == 1 && cur[0] <= ctx.p() - 1)
      return true;
    auto step = tilting_greedy_step(ctx, cur);
    if (!step) return false;
    cur = step->mu;
  }
}

Character tilting_character(const PrimeContext& ctx, const Weight& hw, const Budget& budget) {
  if (!is_dominant(hw)) throw InvalidInput("tilting_character requires a dominant weight");
  const RootDatum& datum = ctx.datum();

  if (hw.is_zero()) return Character::trivial(datum);

  if (auto step = tilting_greedy_step(ctx, hw)) {
    if (!tilting_covered(ctx, step->mu))
      throw CoverageError("tilting_character(" + to_string(hw) + "): cofactor " +
                          to_string(step->mu) + " at twist r=" + std::to_string(step->r) +
                          " is outside the covered region");
    // One restricted layer per digit: the Steinberg character times the
    // orbit sum of the digit, expanded over the orbit and twisted into place.
    const Weight st1 = steinberg_weight(ctx, 1);
    const RMinusculeWitness wit = is_r_minuscule(ctx, step->r, step->lambda);
    Character out = Character::trivial(datum);
    long long scale = 1;
    for (int j = 0; j < step->r; ++j) {
      WeylCombo layer = brauer_product(WeylCombo::single(datum, st1), wit.digits[j], budget);
      out = tensor_product(out, frobenius_twist(realize(layer, budget), scale), budget);
      scale *= ctx.p();
    }
    if (!step->mu.is_zero()) {
      Character cofactor = tilting_character(ctx, step->mu, budget);
      out = tensor_product(out, frobenius_twist(cofactor, scale), budget);
    }
    return out;
  }

  if (is_minuscule(datum, hw)) return weyl_character(datum, hw, budget);
  if (datum.type_letter() == 'A' && datum.rank() == 1 && hw[0] <= ctx.p() - 1)
    return weyl_character(datum, hw, budget);

  throw CoverageError(
      "tilting_character(" + to_string(hw) + "): no decomposition p^r*mu + (p^r-1)*rho + lambda " +
      "with lambda r-minuscule exists and the weight is neither zero, minuscule, nor a " +
      "restricted rank-1 weight");
}

Character a1_tilting_character(const PrimeContext& ctx, long m, const Budget& budget) {
  const RootDatum& datum = ctx.datum();
  if (datum.type_letter() != 'A' || datum.rank() != 1)
    throw InvalidInput("a1_tilting_character requires a type A1 context");
  if (m < 0) throw InvalidInput("a1_tilting_character requires m >= 0");

  const long p = ctx.p();
  auto chi = [&](long k) { return weyl_character(datum, Weight({static_cast<int>(k)}), budget); };

  if (m <= p - 2) return chi(m);
  if (m <= 2 * p - 2) {
    if (m == p - 1) return chi(m);  // the chi(p-1) duplicate collapses
    const Character top = chi(m);
    const Character mirror = chi(2 * p - 2 - m);
    TermMap sum{WeightOrder(datum)};
    for (const auto& [w, c] : top.entries()) sum[w] += c;
    for (const auto& [w, c] : mirror.entries()) sum[w] += c;
    return Character::from_entries(datum, std::move(sum));
  }
  const long tau = p - 1 + (m - (p - 1)) % p;
  const long rest = (m - tau) / p;
  return tensor_product(a1_tilting_character(ctx, tau, budget),
                        frobenius_twist(a1_tilting_character(ctx, rest, budget), p), budget);
}

}  // namespace tiltfactor
