#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tiltfactor {

// A weight in the fundamental-weight basis: lambda = sum coords[i] * eps_{i+1},
// with Bourbaki numbering of the simple roots. Coordinates are the pairings
// with the simple coroots, so dominance is coordinate-wise nonnegativity.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_zero() const {
    for (int c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight out = a;
    for (int i = 0; i < out.rank(); ++i) out[i] += b[i];
    return out;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight out = a;
    for (int i = 0; i < out.rank(); ++i) out[i] -= b[i];
    return out;
  }
  friend Weight operator-(const Weight& a) {
    Weight out = a;
    for (int i = 0; i < out.rank(); ++i) out[i] = -out[i];
    return out;
  }
  friend Weight operator*(int k, const Weight& a) {
    Weight out = a;
    for (int i = 0; i < out.rank(); ++i) out[i] *= k;
    return out;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

 private:
  std::vector<int> coords_;
};

inline bool is_dominant(const Weight& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (w[i] < 0) return false;
  return true;
}

inline bool lex_less(const Weight& a, const Weight& b) { return a.coords() < b.coords(); }

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(w.rank());
    for (int c : w.coords()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned int>(c)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += ")";
  return s;
}

}  // namespace tiltfactor
