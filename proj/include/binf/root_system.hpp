#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace binf {

inline constexpr int kMaxRank = 7;

enum class LieKind { E6, E7 };

// E6 nodes 1-2-3-4-5 with 6 hanging off 3; E7 adds 7 hanging off 1.
class LieType {
 public:
  constexpr LieType() = default;
  constexpr explicit LieType(LieKind kind) : kind_(kind) {}

  static constexpr LieType e6() { return LieType(LieKind::E6); }
  static constexpr LieType e7() { return LieType(LieKind::E7); }

  // Accepts "e6"/"E6"/"e7"/"E7"; throws std::invalid_argument otherwise.
  static LieType parse(std::string_view text);

  constexpr LieKind kind() const { return kind_; }
  constexpr int rank() const { return kind_ == LieKind::E6 ? 6 : 7; }
  // Number of tableau rows, which is rank - 1.
  constexpr int row_count() const { return rank() - 1; }
  std::string name() const { return kind_ == LieKind::E6 ? "e6" : "e7"; }

  friend constexpr bool operator==(LieType, LieType) = default;

 private:
  LieKind kind_ = LieKind::E6;
};

// Fixed-capacity integer vector indexed by color 1..rank. The tag keeps
// weight-basis and root-basis coordinates from mixing.
template <class Tag>
struct CoeffVector {
  int rank = 0;
  std::array<int, kMaxRank> c{};

  CoeffVector() = default;
  explicit CoeffVector(int r) : rank(r) {}
  CoeffVector(int r, std::initializer_list<int> values) : rank(r) {
    int k = 0;
    for (int v : values) c[k++] = v;
  }

  int& operator[](int color) { return c[color - 1]; }
  int operator[](int color) const { return c[color - 1]; }

  int sum() const {
    int s = 0;
    for (int k = 0; k < rank; ++k) s += c[k];
    return s;
  }
  bool is_zero() const {
    for (int k = 0; k < rank; ++k)
      if (c[k] != 0) return false;
    return true;
  }

  CoeffVector& operator+=(const CoeffVector& o) {
    for (int k = 0; k < rank; ++k) c[k] += o.c[k];
    return *this;
  }
  CoeffVector& operator-=(const CoeffVector& o) {
    for (int k = 0; k < rank; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend CoeffVector operator+(CoeffVector a, const CoeffVector& b) { return a += b; }
  friend CoeffVector operator-(CoeffVector a, const CoeffVector& b) { return a -= b; }
  friend CoeffVector operator*(int s, CoeffVector a) {
    for (int k = 0; k < a.rank; ++k) a.c[k] *= s;
    return a;
  }
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
  friend auto operator<=>(const CoeffVector&, const CoeffVector&) = default;
};

struct WeightTag {};
struct RootTag {};

// Coefficients in the fundamental-weight basis; entry i is <h_i, wt>.
using WeightVector = CoeffVector<WeightTag>;
// Coefficients in the simple-root basis.
using RootVector = CoeffVector<RootTag>;

std::string to_string(const WeightVector& w);
std::string to_string(const RootVector& r);

class CartanMatrix {
 public:
  explicit CartanMatrix(LieType t);

  LieType type() const { return type_; }
  int rank() const { return type_.rank(); }
  // a(i, j) = <h_i, alpha_j>, 1-based.
  int operator()(int i, int j) const { return a_[i - 1][j - 1]; }
  bool adjacent(int i, int j) const { return i != j && (*this)(i, j) == -1; }

 private:
  LieType type_;
  std::array<std::array<int, kMaxRank>, kMaxRank> a_{};
};

CartanMatrix cartan_matrix(LieType t);

// alpha_i expressed in the weight basis (row i of the Cartan matrix).
// Throws std::out_of_range for i outside 1..rank.
WeightVector simple_root_as_weight(LieType t, int i);

// Converts root-basis coefficients to weight-basis coefficients.
WeightVector to_weight(LieType t, const RootVector& r);

RootVector simple_root(LieType t, int i);

// Positive roots by closure from the simple roots, sorted by height then
// lexicographically.
std::vector<RootVector> positive_roots(LieType t);

// Number of multisets of positive roots summing to mu (Kostant partition
// function). Zero if mu has a negative coefficient.
std::uint64_t kostant_count(LieType t, const RootVector& mu);

// Kostant counts for every mu with height <= max_height, computed in one pass.
std::map<RootVector, std::uint64_t> kostant_table(LieType t, int max_height);

// All nonnegative root-basis vectors of exactly the given height.
std::vector<RootVector> vectors_of_height(LieType t, int height);

}  // namespace binf
