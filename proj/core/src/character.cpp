#include "tiltfactor/character.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace tiltfactor {

Character Character::trivial(const RootDatum& datum) {
  TermMap m{WeightOrder(datum)};
  m.emplace(Weight::zero(datum.rank()), 1);
  return Character(datum, std::move(m));
}

Character Character::from_entries(const RootDatum& datum, TermMap entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (!is_dominant(it->first))
      throw InvalidInput("character entry at non-dominant weight " + to_string(it->first));
    if (it->second < 0)
      throw InvalidInput("character entry with negative multiplicity at " + to_string(it->first));
    if (it->second == 0)
      it = entries.erase(it);
    else
      ++it;
  }
  return Character(datum, std::move(entries));
}

BigInt Character::multiplicity(const Weight& w) const {
  const Weight rep = dominant_representative(*datum_, w);
  auto it = entries_.find(rep);
  return it == entries_.end() ? BigInt(0) : it->second;
}

WeylCombo WeylCombo::empty(const RootDatum& datum) {
  return WeylCombo(datum, TermMap{WeightOrder(datum)});
}

WeylCombo WeylCombo::single(const RootDatum& datum, const Weight& lambda, BigInt coeff) {
  if (!is_dominant(lambda))
    throw InvalidInput("Weyl-character combination key must be dominant, got " +
                       to_string(lambda));
  TermMap m{WeightOrder(datum)};
  if (coeff != 0) m.emplace(lambda, std::move(coeff));
  return WeylCombo(datum, std::move(m));
}

WeylCombo WeylCombo::from_terms(const RootDatum& datum, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (!is_dominant(it->first))
      throw InvalidInput("Weyl-character combination key must be dominant, got " +
                         to_string(it->first));
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  return WeylCombo(datum, std::move(terms));
}

bool WeylCombo::all_nonnegative() const {
  for (const auto& [w, c] : terms_)
    if (c < 0) return false;
  return true;
}

namespace {

void check_same_datum(const RootDatum& a, const RootDatum& b, const char* op) {
  if (!a.same_as(b))
    throw InvalidInput(std::string(op) + ": operands belong to different root data (" +
                       a.type_letter() + std::to_string(a.rank()) + " vs " + b.type_letter() +
                       std::to_string(b.rank()) + ")");
}

}  // namespace

Character weyl_character(const RootDatum& datum, const Weight& lambda, const Budget& budget) {
  if (!is_dominant(lambda)) throw InvalidInput("weyl_character requires a dominant weight");

  // Dominant support {mu dominant : mu <= lambda}: closed under subtracting
  // single positive roots (covers in the dominance order on dominants are
  // root differences), so a BFS over positive-root steps finds all of it.
  struct Entry {
    Weight w;
    std::vector<int> depth;  // lambda - w in the simple-root basis
  };
  std::vector<Entry> support;
  std::unordered_map<Weight, int, WeightHash> index;
  std::deque<int> queue;
  support.push_back({lambda, std::vector<int>(datum.rank(), 0)});
  index.emplace(lambda, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (const auto& r : datum.positive_roots()) {
      Weight next = support[at].w - r.fund;
      if (!is_dominant(next) || index.count(next)) continue;
      if (support.size() >= budget.orbit_limit)
        throw BudgetExceeded("weyl_character(" + to_string(lambda) +
                             "): dominant support exceeds budget of " +
                             std::to_string(budget.orbit_limit));
      std::vector<int> depth = support[at].depth;
      for (int j = 0; j < datum.rank(); ++j) depth[j] += r.root_coords[j];
      index.emplace(next, static_cast<int>(support.size()));
      queue.push_back(static_cast<int>(support.size()));
      support.push_back({std::move(next), std::move(depth)});
    }
  }

  // Freudenthal recursion, processed from lambda downward.
  std::vector<int> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const long long ha = height2(datum, support[a].w);
    const long long hb = height2(datum, support[b].w);
    if (ha != hb) return ha > hb;
    return support[b].w.coords() < support[a].w.coords();
  });

  std::vector<BigInt> mult(support.size());
  const Weight two_rho = 2 * datum.rho();
  for (int oi : order) {
    const Entry& e = support[oi];
    if (e.w == lambda) {
      mult[oi] = 1;
      continue;
    }
    BigInt num = 0;
    for (const auto& r : datum.positive_roots()) {
      const long long c0 = pairing(r.coroot_coords, e.w);
      for (int k = 1;; ++k) {
        Weight nu = e.w;
        for (int j = 0; j < datum.rank(); ++j) nu[j] += k * r.fund[j];
        auto it = index.find(dominant_representative(datum, nu));
        if (it == index.end()) break;
        num += mult[it->second] * BigInt(static_cast<long>(r.half_norm * (c0 + 2 * k)));
      }
    }
    num *= 2;
    // (lambda + mu + 2rho, lambda - mu), integer in this normalization.
    const Weight sum = lambda + e.w + two_rho;
    long long den = 0;
    for (int j = 0; j < datum.rank(); ++j)
      den += static_cast<long long>(e.depth[j]) * datum.symmetrizer()[j] * sum[j];
    assert(den > 0);
    BigInt q = num / BigInt(static_cast<long>(den));
    assert(q * BigInt(static_cast<long>(den)) == num);
    mult[oi] = std::move(q);
  }

  TermMap out{WeightOrder(datum)};
  for (std::size_t i = 0; i < support.size(); ++i) out.emplace(support[i].w, mult[i]);
  return Character::from_entries(datum, std::move(out));
}

Character orbit_sum(const RootDatum& datum, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InvalidInput("orbit_sum requires a dominant weight");
  TermMap m{WeightOrder(datum)};
  m.emplace(lambda, 1);
  return Character::from_entries(datum, std::move(m));
}

Character tensor_product(const Character& a, const Character& b, const Budget& budget) {
  check_same_datum(a.datum(), b.datum(), "tensor_product");
  const RootDatum& datum = a.datum();

  const BigInt da = dimension(a);
  const BigInt db = dimension(b);
  const BigInt cost = da * db;
  if (cost > BigInt(static_cast<unsigned long>(budget.convolution_limit)))
    throw BudgetExceeded("tensor_product: estimated cost " + to_decimal(cost) +
                         " weight pairs exceeds budget of " +
                         std::to_string(budget.convolution_limit));

  const Character& small = (da <= db) ? a : b;
  const Character& large = (da <= db) ? b : a;

  // Orbit expansion is bounded by the dimensions already admitted above.
  Budget inner = Budget::from_scalar(budget.convolution_limit);

  std::vector<std::pair<Weight, const BigInt*>> expanded;
  for (const auto& [w, m] : small.entries()) {
    for (auto& el : orbit(datum, w, inner)) expanded.emplace_back(std::move(el), &m);
  }

  std::unordered_map<Weight, BigInt, WeightHash> bucket;
  for (const auto& [w, m2] : large.entries()) {
    for (const Weight& omega : orbit(datum, w, inner)) {
      for (const auto& [eta, m1] : expanded) {
        bucket[dominant_representative(datum, omega + eta)] += *m1 * m2;
      }
    }
  }

  // Each dominant bucket accumulated its whole orbit; divide back.
  TermMap out{WeightOrder(datum)};
  for (auto& [w, total] : bucket) {
    const BigInt osz = orbit_size(datum, w);
    assert(divisible(total, osz));
    out.emplace(w, div_exact(total, osz));
  }
  return Character::from_entries(datum, std::move(out));
}

WeylCombo brauer_product(const WeylCombo& combo, const Weight& mu, const Budget& budget) {
  const RootDatum& datum = combo.datum();
  if (!is_dominant(mu)) throw InvalidInput("brauer_product requires a dominant orbit weight");
  const std::vector<Weight> orb = orbit(datum, mu, budget);

  TermMap acc{WeightOrder(datum)};
  for (const auto& [lambda, coeff] : combo.terms()) {
    for (const Weight& nu : orb) {
      const SignedReflect sr = signed_dot_reflect(datum, lambda + nu);
      if (sr.singular) continue;
      acc[sr.rep] += sr.sign > 0 ? coeff : -coeff;
    }
  }
  return WeylCombo::from_terms(datum, std::move(acc));
}

namespace {

// Per-call cache of Weyl characters keyed by highest weight.
class WeylCache {
 public:
  WeylCache(const RootDatum& datum, const Budget& budget) : datum_(datum), budget_(budget) {}
  const Character& get(const Weight& lambda) {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(lambda, weyl_character(datum_, lambda, budget_)).first->second;
  }

 private:
  const RootDatum& datum_;
  const Budget& budget_;
  std::unordered_map<Weight, Character, WeightHash> cache_;
};

}  // namespace

WeylCombo decompose_weyl(const Character& c, const Budget& budget) {
  const RootDatum& datum = c.datum();
  WeylCache cache(datum, budget);

  TermMap work = c.entries();
  TermMap combo{WeightOrder(datum)};
  while (!work.empty()) {
    const Weight top = work.begin()->first;
    const BigInt coeff = work.begin()->second;
    combo.emplace(top, coeff);
    for (const auto& [w, m] : cache.get(top).entries()) {
      auto [it, inserted] = work.try_emplace(w, 0);
      it->second -= coeff * m;
      if (it->second == 0) work.erase(it);
    }
  }
  return WeylCombo::from_terms(datum, std::move(combo));
}

Character realize(const WeylCombo& combo, const Budget& budget) {
  const RootDatum& datum = combo.datum();
  if (!combo.all_nonnegative())
    throw InvalidInput("realize: combination has a negative coefficient; "
                       "only genuine characters can be realized");
  WeylCache cache(datum, budget);
  TermMap acc{WeightOrder(datum)};
  for (const auto& [lambda, coeff] : combo.terms()) {
    for (const auto& [w, m] : cache.get(lambda).entries()) acc[w] += coeff * m;
  }
  return Character::from_entries(datum, std::move(acc));
}

Character frobenius_twist(const Character& c, long q) {
  if (q < 1) throw InvalidInput("frobenius_twist requires a positive scale");
  TermMap out{WeightOrder(c.datum())};
  for (const auto& [w, m] : c.entries()) out.emplace(static_cast<int>(q) * w, m);
  return Character::from_entries(c.datum(), std::move(out));
}

BigInt dimension(const Character& c) {
  BigInt total = 0;
  for (const auto& [w, m] : c.entries()) total += m * orbit_size(c.datum(), w);
  return total;
}

}  // namespace tiltfactor
