#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace crystal {

/// An integral weight in the fundamental-weight basis: coordinate i is the
/// pairing with the i-th simple coroot (0-based, Bourbaki node order).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  Weight(std::initializer_list<int> coords) : c_(coords) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.c_.at(i) = 1;
    return w;
  }

  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return c_; }
  const std::vector<int>& vec() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
  }
  int coordinate_sum() const { return std::accumulate(c_.begin(), c_.end(), 0); }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (int& x : c_) x *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

 private:
  std::vector<int> c_;
};

inline Weight sum(std::span<const Weight> ws, std::size_t rank) {
  Weight total(rank);
  for (const auto& w : ws) total += w;
  return total;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : w.coords()) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace crystal
