#include "tiltfactor/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tiltfactor {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0x51ed2701u ^ v.size();
    for (int c : v) h ^= static_cast<std::size_t>(static_cast<unsigned>(c)) + (h << 6) + (h >> 2);
    return h;
  }
};

void validate_pair(char type, int rank) {
  auto fail = [&](const std::string& constraint) {
    throw InvalidInput(std::string("invalid root system ") + type + std::to_string(rank) + ": " +
                       constraint);
  };
  switch (type) {
    case 'A':
      if (rank < 1) fail("type A requires rank >= 1");
      break;
    case 'B':
      if (rank < 2) fail("type B requires rank >= 2");
      break;
    case 'C':
      if (rank < 2) fail("type C requires rank >= 2");
      break;
    case 'D':
      if (rank < 3) fail("type D requires rank >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail("type E requires rank in {6,7,8}");
      break;
    case 'F':
      if (rank != 4) fail("type F requires rank 4");
      break;
    case 'G':
      if (rank != 2) fail("type G requires rank 2");
      break;
    default:
      fail("type letter must be one of A,B,C,D,E,F,G");
  }
}

// cartan[i][j] = (alpha_i^vee, alpha_j), Bourbaki numbering.
std::vector<std::vector<int>> make_cartan(char type, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 0-based

  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      // alpha_n short: (alpha_n^vee, alpha_{n-1}) = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':
      // alpha_n long: (alpha_{n-1}^vee, alpha_n) = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-6(-7(-8)) with 2 attached to 4.
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      bond(1, 3);
      break;
    case 'F':
      // 1-2=>3-4, alpha_3 and alpha_4 short.
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long.
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

// d_i with d_i * C_ij = d_j * C_ji; equals (alpha_i, alpha_i)/2 with short
// roots normalized to 1.
std::vector<int> make_symmetrizer(char type, int n) {
  std::vector<int> d(n, 1);
  switch (type) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

BigInt weyl_order_formula(char type, int n) {
  switch (type) {
    case 'A':
      return factorial(static_cast<unsigned long>(n) + 1);
    case 'B':
    case 'C':
      return big_pow(2, static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n));
    case 'D':
      return big_pow(2, static_cast<unsigned long>(n) - 1) *
             factorial(static_cast<unsigned long>(n));
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case 'F':
      return 1152;
    case 'G':
      return 12;
  }
  return 1;
}

}  // namespace

RootDatum build_root_datum(char type_letter, int rank) {
  validate_pair(type_letter, rank);

  RootDatum d;
  d.type_ = type_letter;
  d.rank_ = rank;
  d.cartan_ = make_cartan(type_letter, rank);
  d.symmetrizer_ = make_symmetrizer(type_letter, rank);
  d.rho_ = Weight(std::vector<int>(rank, 1));
  d.weyl_order_ = weyl_order_formula(type_letter, rank);

  const auto& C = d.cartan_;
  const auto& sym = d.symmetrizer_;

  // Positive roots by closure: extend level by level, testing root-hood via
  // the root-string condition q = p - (alpha_i^vee, beta) > 0.
  std::unordered_set<std::vector<int>, VecHash> known;
  std::vector<std::vector<std::vector<int>>> levels;  // levels[h-1] = roots of height h
  levels.emplace_back();
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    levels[0].push_back(e);
    known.insert(std::move(e));
  }
  while (!levels.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : levels.back()) {
      for (int i = 0; i < rank; ++i) {
        // Skip the string through alpha_i itself.
        bool is_alpha_i = b[i] == 1;
        for (int j = 0; is_alpha_i && j < rank; ++j)
          if (j != i && b[j] != 0) is_alpha_i = false;
        if (is_alpha_i) continue;

        long long c = 0;
        for (int j = 0; j < rank; ++j) c += static_cast<long long>(C[i][j]) * b[j];

        int p = 0;
        std::vector<int> down = b;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - c > 0) {
          std::vector<int> up = b;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    levels.push_back(std::move(next));
  }

  // Flatten deterministically: by height, then lexicographic.
  for (std::size_t h = 0; h < levels.size(); ++h) {
    std::sort(levels[h].begin(), levels[h].end());
    for (auto& b : levels[h]) {
      PositiveRoot r;
      r.root_coords = b;
      r.height = static_cast<int>(h) + 1;
      std::vector<int> fund(rank, 0);
      for (int i = 0; i < rank; ++i) {
        long long acc = 0;
        for (int j = 0; j < rank; ++j) acc += static_cast<long long>(C[i][j]) * b[j];
        fund[i] = static_cast<int>(acc);
      }
      r.fund = Weight(std::move(fund));
      // (beta,beta) = b^T M b with M_kj = d_k * C_kj.
      long long norm = 0;
      for (int k = 0; k < rank; ++k) {
        if (b[k] == 0) continue;
        for (int j = 0; j < rank; ++j)
          norm += static_cast<long long>(b[k]) * sym[k] * C[k][j] * b[j];
      }
      assert(norm > 0 && norm % 2 == 0);
      r.half_norm = static_cast<int>(norm / 2);
      r.coroot_coords.resize(rank);
      for (int j = 0; j < rank; ++j) {
        long long num = static_cast<long long>(b[j]) * sym[j];
        assert(num % r.half_norm == 0);
        r.coroot_coords[j] = static_cast<int>(num / r.half_norm);
      }
      d.roots_.push_back(std::move(r));
    }
  }

  // Coxeter number from the highest root; highest short root is the unique
  // dominant root of minimal norm.
  int max_height = 0;
  int min_norm = d.roots_.front().half_norm;
  for (const auto& r : d.roots_) {
    max_height = std::max(max_height, r.height);
    min_norm = std::min(min_norm, r.half_norm);
  }
  d.coxeter_ = max_height + 1;
  for (const auto& r : d.roots_) {
    if (r.half_norm == min_norm && is_dominant(r.fund)) {
      d.alpha0_coroot_ = r.coroot_coords;
      break;
    }
  }
  assert(!d.alpha0_coroot_.empty());

  d.coroot_height_.assign(rank, 0);
  for (const auto& r : d.roots_)
    for (int j = 0; j < rank; ++j) d.coroot_height_[j] += r.coroot_coords[j];

  return d;
}

long long pairing(const std::vector<int>& coroot, const Weight& w) {
  long long acc = 0;
  for (int i = 0; i < w.rank(); ++i) acc += static_cast<long long>(coroot[i]) * w[i];
  return acc;
}

Weight simple_reflection(const RootDatum& datum, int i, const Weight& w) {
  if (i < 1 || i > datum.rank())
    throw InvalidInput("simple reflection index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(datum.rank()));
  Weight out = w;
  const int c = w[i - 1];
  if (c == 0) return out;
  const auto& C = datum.cartan();
  for (int j = 0; j < datum.rank(); ++j) out[j] -= c * C[j][i - 1];
  return out;
}

Weight dominant_representative(const RootDatum& datum, const Weight& w) {
  Weight cur = w;
  const auto& C = datum.cartan();
  const int n = datum.rank();
  while (true) {
    int i = -1;
    for (int j = 0; j < n; ++j)
      if (cur[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) return cur;
    const int c = cur[i];
    for (int j = 0; j < n; ++j) cur[j] -= c * C[j][i];
  }
}

SignedReflect signed_dot_reflect(const RootDatum& datum, const Weight& nu) {
  SignedReflect out;
  Weight cur = nu + datum.rho();
  const auto& C = datum.cartan();
  const int n = datum.rank();
  int sign = 1;
  while (true) {
    int i = -1;
    bool on_wall = false;
    for (int j = 0; j < n; ++j) {
      if (cur[j] < 0) {
        i = j;
        break;
      }
      if (cur[j] == 0) on_wall = true;
    }
    if (i < 0) {
      if (on_wall) {
        out.singular = true;
        return out;
      }
      out.sign = sign;
      out.rep = cur - datum.rho();
      return out;
    }
    const int c = cur[i];
    for (int j = 0; j < n; ++j) cur[j] -= c * C[j][i];
    sign = -sign;
  }
}

std::vector<Weight> orbit(const RootDatum& datum, const Weight& dominant, const Budget& budget) {
  if (!is_dominant(dominant)) throw InvalidInput("orbit requires a dominant weight");
  BigInt est = orbit_size(datum, dominant);
  if (est > BigInt(static_cast<unsigned long>(budget.orbit_limit)))
    throw BudgetExceeded("orbit of " + to_string(dominant) + " has " + to_decimal(est) +
                         " elements, over the budget of " + std::to_string(budget.orbit_limit));

  std::vector<Weight> out;
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<Weight> queue;
  queue.push_back(dominant);
  seen.insert(dominant);
  const int n = datum.rank();
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (int i = 1; i <= n; ++i) {
      Weight r = simple_reflection(datum, i, w);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return out;
}

namespace {

// Order of the Weyl group of one connected sub-diagram, identified by its
// shape (node count, bond multiplicities, branch structure).
BigInt component_weyl_order(const std::vector<std::vector<int>>& C, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return 2;

  int max_mult = 1;
  std::pair<int, int> double_edge{-1, -1};
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int m = C[nodes[a]][nodes[b]] * C[nodes[b]][nodes[a]];
      if (m > 0) {
        ++degree[a];
        ++degree[b];
        if (m > max_mult) max_mult = m;
        if (m == 2) double_edge = {a, b};
      }
    }
  }

  if (max_mult == 3) return 12;  // G2
  if (max_mult == 2) {
    // F4 has its double bond in the middle; B/C have it at an end.
    if (n == 4 && degree[double_edge.first] == 2 && degree[double_edge.second] == 2) return 1152;
    return big_pow(2, static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n));
  }

  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (degree[a] == 3) branch = a;
  if (branch < 0) return factorial(static_cast<unsigned long>(n) + 1);  // A_n

  // Arm lengths from the branch node determine D vs E.
  std::vector<int> arms;
  for (int a = 0; a < n; ++a) {
    if (a == branch || C[nodes[branch]][nodes[a]] == 0) continue;
    int len = 0;
    int cur = a;
    int prev = branch;
    while (true) {
      ++len;
      int next = -1;
      for (int b = 0; b < n; ++b) {
        if (b == cur || b == prev) continue;
        if (C[nodes[cur]][nodes[b]] != 0) next = b;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
    return big_pow(2, static_cast<unsigned long>(n) - 1) * factorial(static_cast<unsigned long>(n));
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return 51840;
    if (arms[2] == 3) return 2903040;
    if (arms[2] == 4) return 696729600;
  }
  assert(false && "unreachable: not a finite Dynkin sub-diagram");
  return 1;
}

}  // namespace

BigInt stabilizer_order(const RootDatum& datum, const Weight& dominant) {
  if (!is_dominant(dominant)) throw InvalidInput("stabilizer_order requires a dominant weight");
  const int n = datum.rank();
  std::vector<int> zero_nodes;
  for (int i = 0; i < n; ++i)
    if (dominant[i] == 0) zero_nodes.push_back(i);
  if (zero_nodes.empty()) return 1;

  // Connected components of the sub-diagram on the zero coordinates.
  std::vector<char> seen(zero_nodes.size(), 0);
  BigInt order = 1;
  for (std::size_t s = 0; s < zero_nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      comp.push_back(zero_nodes[a]);
      for (std::size_t b = 0; b < zero_nodes.size(); ++b) {
        if (!seen[b] && datum.cartan()[zero_nodes[a]][zero_nodes[b]] != 0) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    order *= component_weyl_order(datum.cartan(), comp);
  }
  return order;
}

BigInt orbit_size(const RootDatum& datum, const Weight& dominant) {
  return div_exact(datum.weyl_order(), stabilizer_order(datum, dominant));
}

BigInt weyl_dimension(const RootDatum& datum, const Weight& dominant) {
  if (!is_dominant(dominant)) throw InvalidInput("weyl_dimension requires a dominant weight");
  const Weight shifted = dominant + datum.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& r : datum.positive_roots()) {
    num *= BigInt(static_cast<long>(pairing(r.coroot_coords, shifted)));
    den *= BigInt(static_cast<long>(pairing(r.coroot_coords, datum.rho())));
  }
  return div_exact(num, den);
}

Weight dual_weight(const RootDatum& datum, const Weight& dominant) {
  if (!is_dominant(dominant)) throw InvalidInput("dual_weight requires a dominant weight");
  return dominant_representative(datum, -dominant);
}

long long height2(const RootDatum& datum, const Weight& w) {
  long long acc = 0;
  for (int i = 0; i < w.rank(); ++i)
    acc += static_cast<long long>(datum.coroot_height_coeffs()[i]) * w[i];
  return acc;
}

}  // namespace tiltfactor
