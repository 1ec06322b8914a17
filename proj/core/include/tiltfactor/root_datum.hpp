#pragma once

#include <optional>
#include <vector>

#include "tiltfactor/bigint.hpp"
#include "tiltfactor/budget.hpp"
#include "tiltfactor/errors.hpp"
#include "tiltfactor/weight.hpp"

namespace tiltfactor {

// One positive root, carried in three coordinate systems at once.
struct PositiveRoot {
  std::vector<int> root_coords;    // simple-root basis
  Weight fund;                     // fundamental-weight basis (Cartan column combination)
  std::vector<int> coroot_coords;  // the coroot, in the simple-coroot basis
  int half_norm = 0;               // (beta,beta)/2, normalized so short roots have 1
  int height = 0;                  // coefficient sum in the simple-root basis
};

// Immutable combinatorial data of one indecomposable root system, types A-G,
// Bourbaki numbering of the simple roots. All operations on it are pure.
class RootDatum {
 public:
  char type_letter() const { return type_; }
  int rank() const { return rank_; }

  // cartan()[i][j] = (alpha_i^vee, alpha_j); column j holds the
  // fundamental coordinates of alpha_j.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  const Weight& rho() const { return rho_; }
  int coxeter_number() const { return coxeter_; }
  const std::vector<int>& highest_short_root_coroot() const { return alpha0_coroot_; }
  const BigInt& weyl_order() const { return weyl_order_; }

  // d_i with d_i * cartan[i][j] symmetric; equals (alpha_i, alpha_i)/2 with
  // short roots normalized to 1.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  // Coordinate sums of all positive coroots; pairing a weight against this
  // vector gives twice its height and refines the dominance order.
  const std::vector<int>& coroot_height_coeffs() const { return coroot_height_; }

  bool same_as(const RootDatum& other) const {
    return type_ == other.type_ && rank_ == other.rank_;
  }

  friend RootDatum build_root_datum(char type_letter, int rank);

 private:
  RootDatum() = default;

  char type_ = '?';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;  // d_i with d_i * C_ij symmetric
  std::vector<PositiveRoot> roots_;
  Weight rho_;
  int coxeter_ = 0;
  std::vector<int> alpha0_coroot_;
  BigInt weyl_order_;
  std::vector<int> coroot_height_;
};

// Constructs the datum for a valid indecomposable pair
// (A: rank>=1, B: >=2, C: >=2, D: >=3, E: 6-8, F: 4, G: 2).
// Throws InvalidInput naming the violated constraint otherwise.
RootDatum build_root_datum(char type_letter, int rank);

// (coroot, weight) pairing: dot product of simple-coroot-basis coordinates
// with fundamental coordinates.
long long pairing(const std::vector<int>& coroot, const Weight& w);

// Reflection in the i-th simple root wall, i is 1-based Bourbaki index.
Weight simple_reflection(const RootDatum& datum, int i, const Weight& w);

// The unique dominant weight in the Weyl orbit of w.
Weight dominant_representative(const RootDatum& datum, const Weight& w);

// rho-shifted reflection to the dominant chamber: the normalization that
// extends formal Weyl characters to arbitrary arguments. `singular` means
// nu+rho lies on a wall and the formal character chi(nu) vanishes;
// otherwise rep is dominant with sign = det of the reflecting element.
struct SignedReflect {
  bool singular = false;
  int sign = 0;
  Weight rep;
};
SignedReflect signed_dot_reflect(const RootDatum& datum, const Weight& nu);

// Full Weyl orbit of a dominant weight, BFS order. Refuses (BudgetExceeded)
// when the exact orbit size |W| / |stabilizer| exceeds budget.orbit_limit.
std::vector<Weight> orbit(const RootDatum& datum, const Weight& dominant,
                          const Budget& budget = {});

// |W_lambda| for the parabolic stabilizer of a dominant weight, and the
// resulting orbit size |W| / |W_lambda|; both exact, no enumeration.
BigInt stabilizer_order(const RootDatum& datum, const Weight& dominant);
BigInt orbit_size(const RootDatum& datum, const Weight& dominant);

// Weyl dimension formula, exact.
BigInt weyl_dimension(const RootDatum& datum, const Weight& dominant);

// Highest weight of the dual module: the dominant representative of -lambda.
Weight dual_weight(const RootDatum& datum, const Weight& dominant);

// Twice the height of a weight, integer-valued; strictly monotone along the
// dominance order.
long long height2(const RootDatum& datum, const Weight& w);

}  // namespace tiltfactor
