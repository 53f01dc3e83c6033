#pragma once

#include <catch_amalgamated.hpp>

#include <crystal_commutor/crystal_commutor.hpp>

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace th {

using namespace crystal;

inline std::shared_ptr<const RootSystem> sys(CartanType t, int r) { return RootSystem::make(t, r); }
inline std::shared_ptr<const RootSystem> A(int r) { return sys(CartanType::A, r); }
inline std::shared_ptr<const RootSystem> B(int r) { return sys(CartanType::B, r); }
inline std::shared_ptr<const RootSystem> C(int r) { return sys(CartanType::C, r); }
inline std::shared_ptr<const RootSystem> D(int r) { return sys(CartanType::D, r); }
inline std::shared_ptr<const RootSystem> E(int r) { return sys(CartanType::E, r); }

inline Weight W(std::initializer_list<int> c) { return Weight(std::vector<int>(c)); }

/// epsilon_j (1-based) of sl_{r+1} in fundamental coordinates.
inline Weight eps_A(std::size_t r, std::size_t j) {
  Weight w(r);
  if (j <= r) w[j - 1] += 1;
  if (j >= 2) w[j - 2] -= 1;
  return w;
}

/// Element of B_{dom(e_1)} (x) ... built from entries.
inline TensorElement elem(const std::shared_ptr<const RootSystem>& s, const std::vector<Weight>& entries) {
  std::vector<Weight> factors;
  for (const auto& e : entries) factors.push_back(s->dominant(e));
  return TensorElement(make_shape(s, factors), entries);
}

inline std::vector<Weight> entries(const RootSystem& s, const char* text) { return parse_entries(s, text); }

/// Weyl dimension formula, exact.
inline long long weyl_dimension(const RootSystem& s, const Weight& lambda) {
  // prime exponents of the product; the raw numerator overflows for E7 and E8
  std::map<long long, long long> exps;
  auto add = [&](long long n, long long sign) {
    for (long long p = 2; p * p <= n; ++p)
      for (; n % p == 0; n /= p) exps[p] += sign;
    if (n > 1) exps[n] += sign;
  };
  for (const auto& c : s.positive_coroots()) {
    long long a = 0, b = 0;
    for (std::size_t i = 0; i < s.rank(); ++i) {
      a += static_cast<long long>(c[i]) * (lambda[i] + 1);
      b += c[i];
    }
    add(a, 1);
    add(b, -1);
  }
  long long out = 1;
  for (const auto& [p, e] : exps) {
    if (e < 0) throw std::logic_error("weyl_dimension: not an integer");
    for (long long k = 0; k < e; ++k) out *= p;
  }
  return out;
}

/// Every tuple (a_1..a_n) with a_j in the orbit of factors[j], by direct
/// cartesian product.
inline std::vector<std::vector<Weight>> all_tuples(const RootSystem& s, const std::vector<Weight>& factors) {
  std::vector<std::vector<Weight>> out{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<Weight>> next;
    for (const auto& t : out)
      for (const auto& w : s.weyl_orbit(f)) {
        auto u = t;
        u.push_back(w);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

/// Signature rule: each factor contributes eps(a_j) minus signs followed by
/// phi(a_j) plus signs; adjacent "+ -" pairs cancel. e_i acts on the factor
/// owning the rightmost surviving '-', f_i on the owner of the leftmost '+'.
struct Signature {
  int eps = 0;
  int phi = 0;
  int raise_at = -1;
  int lower_at = -1;
};

inline Signature signature(const RootSystem& s, const std::vector<Weight>& t, std::size_t i) {
  std::vector<std::pair<char, int>> stack;  // surviving signs with owners
  for (std::size_t j = 0; j < t.size(); ++j) {
    const int p = s.pairing(t[j], i);
    const int e = p < 0 ? -p : 0, f = p > 0 ? p : 0;
    for (int k = 0; k < e; ++k) {
      if (!stack.empty() && stack.back().first == '+')
        stack.pop_back();
      else
        stack.push_back({'-', static_cast<int>(j)});
    }
    for (int k = 0; k < f; ++k) stack.push_back({'+', static_cast<int>(j)});
  }
  Signature sig;
  for (const auto& [c, owner] : stack) {
    if (c == '-') {
      ++sig.eps;
      sig.raise_at = owner;
    } else {
      if (sig.phi == 0) sig.lower_at = owner;
      ++sig.phi;
    }
  }
  return sig;
}

inline std::vector<std::uint32_t> idx(const TensorElement& x) {
  return {x.indices().begin(), x.indices().end()};
}

inline bool in_vector(const std::vector<Weight>& v, const Weight& w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

}  // namespace th
