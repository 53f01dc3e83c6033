#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "weight.hpp"

namespace crystal {

enum class CartanType { A, B, C, D, E };

inline char type_letter(CartanType t) { return "ABCDE"[static_cast<int>(t)]; }

inline std::optional<CartanType> parse_type_letter(char c) {
  switch (c) {
    case 'A': case 'a': return CartanType::A;
    case 'B': case 'b': return CartanType::B;
    case 'C': case 'c': return CartanType::C;
    case 'D': case 'd': return CartanType::D;
    case 'E': case 'e': return CartanType::E;
    default: return std::nullopt;
  }
}

class RootSystem;

/// The crystal of a minuscule representation: its underlying set is the Weyl
/// orbit of the dominant weight, with f_i = s_i on elements pairing to +1 and
/// e_i = s_i on elements pairing to -1. Element 0 is the highest weight.
class MinusculeCrystal {
 public:
  static constexpr std::int32_t kNone = -1;

  MinusculeCrystal(const RootSystem& sys, Weight omega);

  const Weight& highest() const { return elements_.front(); }
  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return rank_; }
  const Weight& element(std::uint32_t u) const { return elements_[u]; }
  const std::vector<Weight>& elements() const { return elements_; }

  std::optional<std::uint32_t> find(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Pairing of element u with the i-th simple coroot, always in {-1, 0, 1}.
  int pairing(std::uint32_t u, std::size_t i) const { return pairing_[u * rank_ + i]; }
  std::int32_t lower(std::uint32_t u, std::size_t i) const { return lower_[u * rank_ + i]; }
  std::int32_t raise(std::uint32_t u, std::size_t i) const { return raise_[u * rank_ + i]; }

  const std::int8_t* pairing_row(std::uint32_t u) const { return pairing_.data() + u * rank_; }
  const std::int32_t* lower_row(std::uint32_t u) const { return lower_.data() + u * rank_; }
  const std::int32_t* raise_row(std::uint32_t u) const { return raise_.data() + u * rank_; }

 private:
  std::size_t rank_ = 0;
  std::vector<Weight> elements_;
  std::unordered_map<Weight, std::uint32_t, WeightHash> index_;
  std::vector<std::int8_t> pairing_;
  std::vector<std::int32_t> lower_;
  std::vector<std::int32_t> raise_;
};

/// Finite irreducible root system of type A_r, B_r, C_r, D_r, E6 or E7.
///
/// cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple root alpha_j has
/// fundamental coordinates given by column j. All derived data (roots,
/// coroots, the longest element, the star involution) is computed at
/// construction; minuscule crystals are built lazily behind a mutex and are
/// immutable afterwards.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> make(CartanType type, int rank) {
    return std::shared_ptr<const RootSystem>(new RootSystem(type, rank));
  }

  CartanType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }

  Weight zero() const { return Weight(rank_); }
  Weight rho() const { return Weight(std::vector<int>(rank_, 1)); }
  const Weight& simple_root(std::size_t i) const { return simple_roots_.at(i); }

  void check_index(std::size_t i) const {
    if (i >= rank_)
      throw std::out_of_range("simple root index " + std::to_string(i) + " out of range for " + name());
  }
  void check_weight(const Weight& mu) const {
    if (mu.rank() != rank_)
      throw InvalidInput("weight has " + std::to_string(mu.rank()) + " coordinates, " + name() +
                         " needs " + std::to_string(rank_));
  }

  int pairing(const Weight& mu, std::size_t i) const {
    check_index(i);
    check_weight(mu);
    return mu[i];
  }

  Weight simple_reflection(std::size_t i, Weight mu) const {
    check_index(i);
    check_weight(mu);
    reflect(i, mu);
    return mu;
  }

  /// In-place s_i without bounds checks.
  void reflect(std::size_t i, Weight& mu) const {
    const int p = mu[i];
    if (p == 0) return;
    for (std::size_t k = 0; k < rank_; ++k) mu[k] -= p * cartan_[k * rank_ + i];
  }

  /// Dominant representative of the Weyl orbit (s_i at the smallest index
  /// with negative pairing, repeated).
  Weight dominant(Weight mu) const {
    check_weight(mu);
    for (;;) {
      std::size_t i = 0;
      while (i < rank_ && mu[i] >= 0) ++i;
      if (i == rank_) return mu;
      reflect(i, mu);
    }
  }

  std::vector<Weight> weyl_orbit(const Weight& lambda) const {
    check_weight(lambda);
    std::vector<Weight> out{lambda};
    std::unordered_set<Weight, WeightHash> seen{lambda};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::size_t i = 0; i < rank_; ++i) {
        if (out[head][i] == 0) continue;
        Weight next = out[head];
        reflect(i, next);
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    }
    return out;
  }

  /// All roots, as weights, computed as the union of Weyl orbits of the
  /// simple roots.
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  /// Positive coroots in simple-coroot coordinates; <mu, beta^vee> is the dot
  /// product with mu's fundamental coordinates.
  const std::vector<std::vector<int>>& positive_coroots() const { return positive_coroots_; }

  bool is_minuscule(const Weight& lambda) const { return max_abs_coroot_pairing(lambda) <= 1; }
  bool is_quasi_minuscule(const Weight& lambda) const { return max_abs_coroot_pairing(lambda) <= 2; }

  /// Reduced word (0-based node indices) of the longest Weyl group element,
  /// in application order: applying s_{w[0]}, then s_{w[1]}, ... to rho
  /// yields -rho.
  const std::vector<std::size_t>& longest_element_word() const { return w0_word_; }

  Weight apply_w0(Weight mu) const {
    check_weight(mu);
    for (std::size_t i : w0_word_) reflect(i, mu);
    return mu;
  }

  /// The Dynkin involution i -> i* with alpha_{i*} = -w0(alpha_i).
  std::size_t star(std::size_t i) const {
    check_index(i);
    return star_[i];
  }

  /// Coordinates of mu in the basis of simple roots, or nullopt when mu is
  /// not in the root lattice.
  std::optional<std::vector<long long>> root_coordinates(const Weight& mu) const {
    check_weight(mu);
    std::vector<long long> c(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < rank_; ++j) acc += inverse_numer_[i * rank_ + j] * mu[j];
      if (acc % inverse_denom_ != 0) return std::nullopt;
      c[i] = acc / inverse_denom_;
    }
    return c;
  }

  /// Root (dominance) order: b - a is a nonnegative integer combination of
  /// simple roots.
  bool root_leq(const Weight& a, const Weight& b) const {
    auto c = root_coordinates(b - a);
    return c && std::all_of(c->begin(), c->end(), [](long long x) { return x >= 0; });
  }

  /// Dominant minuscule fundamental weights, by increasing node index.
  const std::vector<Weight>& minuscule_fundamentals() const { return minuscule_fundamentals_; }

  std::shared_ptr<const MinusculeCrystal> minuscule_crystal(const Weight& omega) const {
    check_weight(omega);
    std::lock_guard lock(crystal_mutex_);
    auto it = crystals_.find(omega);
    if (it != crystals_.end()) return it->second;
    if (!omega.is_dominant()) throw InvalidInput("minuscule crystal needs a dominant weight");
    if (!is_minuscule(omega)) {
      if (is_quasi_minuscule(omega))
        throw UnsupportedFactor("quasi-minuscule factor is not supported: only minuscule factors have "
                                "local moves (the quasi-minuscule case is conjectural)");
      throw InvalidInput("tensor factor is not minuscule");
    }
    auto crystal = std::make_shared<const MinusculeCrystal>(*this, omega);
    crystals_.emplace(omega, crystal);
    return crystal;
  }

 private:
  RootSystem(CartanType type, int rank);

  void build_cartan();
  void build_roots();
  void build_inverse();
  void build_w0();

  int max_abs_coroot_pairing(const Weight& lambda) const {
    check_weight(lambda);
    int best = 0;
    for (const auto& c : positive_coroots_) {
      int p = 0;
      for (std::size_t j = 0; j < rank_; ++j) p += c[j] * lambda[j];
      best = std::max(best, std::abs(p));
    }
    return best;
  }

  CartanType type_;
  std::size_t rank_;
  std::vector<int> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> positive_coroots_;
  std::vector<long long> inverse_numer_;
  long long inverse_denom_ = 1;
  std::vector<std::size_t> w0_word_;
  std::vector<std::size_t> star_;
  std::vector<Weight> minuscule_fundamentals_;

  mutable std::mutex crystal_mutex_;
  mutable std::map<Weight, std::shared_ptr<const MinusculeCrystal>> crystals_;
};

inline RootSystem::RootSystem(CartanType type, int rank) : type_(type), rank_(0) {
  const bool ok = (type == CartanType::A && rank >= 1) || (type == CartanType::B && rank >= 2) ||
                  (type == CartanType::C && rank >= 2) || (type == CartanType::D && rank >= 3) ||
                  (type == CartanType::E && (rank == 6 || rank == 7));
  if (!ok)
    throw InvalidInput("unsupported root system " + std::string(1, type_letter(type)) + std::to_string(rank) +
                       " (supported: A_r r>=1, B_r/C_r r>=2, D_r r>=3, E6, E7)");
  rank_ = static_cast<std::size_t>(rank);
  build_cartan();
  build_inverse();
  build_roots();
  build_w0();
  for (std::size_t i = 0; i < rank_; ++i) {
    Weight f = Weight::fundamental(rank_, i);
    if (is_minuscule(f)) minuscule_fundamentals_.push_back(std::move(f));
  }
}

inline void RootSystem::build_cartan() {
  const std::size_t r = rank_;
  cartan_.assign(r * r, 0);
  auto set = [&](std::size_t i, std::size_t j, int v) { cartan_[i * r + j] = v; };
  auto link = [&](std::size_t i, std::size_t j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  for (std::size_t i = 0; i < r; ++i) set(i, i, 2);
  switch (type_) {
    case CartanType::A:
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      set(r - 1, r - 2, -2);  // alpha_r short
      break;
    case CartanType::C:
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      set(r - 2, r - 1, -2);  // alpha_r long
      break;
    case CartanType::D:
      for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case CartanType::E:
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      if (r == 7) link(5, 6);
      break;
  }
  simple_roots_.clear();
  for (std::size_t j = 0; j < r; ++j) {
    Weight a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = cartan_[i * r + j];
    simple_roots_.push_back(std::move(a));
  }
}

inline void RootSystem::build_roots() {
  std::unordered_set<Weight, WeightHash> seen;
  roots_.clear();
  for (const auto& a : simple_roots_) {
    if (seen.count(a)) continue;
    for (auto& w : weyl_orbit(a))
      if (seen.insert(w).second) roots_.push_back(std::move(w));
  }
  std::sort(roots_.begin(), roots_.end());
  positive_roots_.clear();
  for (const auto& a : roots_) {
    auto c = root_coordinates(a);
    detail::ensure(c.has_value(), "root outside the root lattice");
    if (std::all_of(c->begin(), c->end(), [](long long x) { return x >= 0; })) positive_roots_.push_back(a);
  }

  // Coroots: the Weyl orbits of the simple coroots, tracked in simple-coroot
  // coordinates. s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee.
  const std::size_t r = rank_;
  std::set<std::vector<int>> coroots;
  std::vector<std::vector<int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    if (coroots.insert(e).second) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < r; ++j) p += queue[head][j] * cartan_[j * r + i];
      if (p == 0) continue;
      std::vector<int> next = queue[head];
      next[i] -= p;
      if (coroots.insert(next).second) queue.push_back(std::move(next));
    }
  }
  positive_coroots_.clear();
  for (const auto& c : coroots)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive_coroots_.push_back(c);
}

inline void RootSystem::build_inverse() {
  // Exact Gauss-Jordan over the rationals; the Cartan matrix is small and
  // unimodular up to its determinant.
  struct Q {
    long long n, d;
  };
  auto norm = [](Q q) {
    if (q.d < 0) q = {-q.n, -q.d};
    long long g = std::gcd(q.n < 0 ? -q.n : q.n, q.d);
    if (g > 1) q = {q.n / g, q.d / g};
    return q;
  };
  auto sub = [&](Q a, Q b) { return norm({a.n * b.d - b.n * a.d, a.d * b.d}); };
  auto mul = [&](Q a, Q b) { return norm({a.n * b.n, a.d * b.d}); };
  auto div = [&](Q a, Q b) { return norm({a.n * b.d, a.d * b.n}); };

  const std::size_t r = rank_;
  std::vector<Q> m(r * 2 * r, Q{0, 1});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i * 2 * r + j] = {cartan_[i * r + j], 1};
    m[i * 2 * r + r + i] = {1, 1};
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv * 2 * r + col].n == 0) ++piv;
    detail::ensure(piv < r, "singular Cartan matrix");
    if (piv != col)
      for (std::size_t k = 0; k < 2 * r; ++k) std::swap(m[piv * 2 * r + k], m[col * 2 * r + k]);
    const Q p = m[col * 2 * r + col];
    for (std::size_t k = 0; k < 2 * r; ++k) m[col * 2 * r + k] = div(m[col * 2 * r + k], p);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || m[row * 2 * r + col].n == 0) continue;
      const Q f = m[row * 2 * r + col];
      for (std::size_t k = 0; k < 2 * r; ++k)
        m[row * 2 * r + k] = sub(m[row * 2 * r + k], mul(f, m[col * 2 * r + k]));
    }
  }
  long long denom = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) denom = std::lcm(denom, m[i * 2 * r + r + j].d);
  inverse_denom_ = denom;
  inverse_numer_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Q q = m[i * 2 * r + r + j];
      inverse_numer_[i * r + j] = q.n * (denom / q.d);
    }
}

inline void RootSystem::build_w0() {
  Weight mu = rho();
  w0_word_.clear();
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && mu[i] <= 0) ++i;
    if (i == rank_) break;
    reflect(i, mu);
    w0_word_.push_back(i);
  }
  detail::ensure(mu == -rho(), "longest element word does not send rho to -rho");
  detail::ensure(w0_word_.size() == positive_roots_.size(), "longest element word is not reduced");
  star_.assign(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    const Weight image = -apply_w0(simple_roots_[i]);
    std::size_t matches = 0;
    for (std::size_t j = 0; j < rank_; ++j)
      if (simple_roots_[j] == image) {
        star_[i] = j;
        ++matches;
      }
    detail::ensure(matches == 1, "-w0(alpha_i) is not a unique simple root");
  }
}

inline MinusculeCrystal::MinusculeCrystal(const RootSystem& sys, Weight omega) : rank_(sys.rank()) {
  elements_.push_back(std::move(omega));
  index_.emplace(elements_.front(), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (elements_[head][i] == 0) continue;
      Weight next = elements_[head];
      sys.reflect(i, next);
      if (index_.emplace(next, static_cast<std::uint32_t>(elements_.size())).second)
        elements_.push_back(std::move(next));
    }
  }
  const std::size_t n = elements_.size();
  pairing_.assign(n * rank_, 0);
  lower_.assign(n * rank_, kNone);
  raise_.assign(n * rank_, kNone);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < rank_; ++i) {
      const int p = elements_[u][i];
      detail::ensure(p >= -1 && p <= 1, "orbit element of a minuscule weight has pairing outside {-1,0,1}");
      pairing_[u * rank_ + i] = static_cast<std::int8_t>(p);
      if (p == 0) continue;
      Weight s = elements_[u];
      sys.reflect(i, s);
      const auto target = static_cast<std::int32_t>(index_.at(s));
      (p == 1 ? lower_ : raise_)[u * rank_ + i] = target;
    }
  }
}

/// A decomposition lambda = parts[0] + ... + parts[n-1] into minuscule
/// weights with every partial sum dominant.
struct MinusculeDecomposition {
  std::vector<Weight> parts;
  std::vector<Weight> dominant_orbits;  // dom_W(parts[i])

  friend bool operator==(const MinusculeDecomposition&, const MinusculeDecomposition&) = default;
};

namespace detail {

class DecompositionSearch {
 public:
  DecompositionSearch(const RootSystem& sys, std::vector<Weight> orbit_reps)
      : sys_(sys), reps_(std::move(orbit_reps)) {
    std::set<Weight> pool;
    for (const auto& w : reps_)
      for (auto& x : sys.weyl_orbit(w)) pool.insert(std::move(x));
    candidates_.assign(pool.begin(), pool.end());
    // Larger coordinate sum first; ties broken by lexicographically larger.
    std::sort(candidates_.begin(), candidates_.end(), [](const Weight& a, const Weight& b) {
      const int sa = a.coordinate_sum(), sb = b.coordinate_sum();
      if (sa != sb) return sa > sb;
      return a > b;
    });
  }

  /// First decomposition with exactly n parts in candidate order, if any.
  std::optional<std::vector<Weight>> find(const Weight& lambda, std::size_t n) {
    failed_.clear();
    std::vector<Weight> parts;
    std::optional<std::vector<Weight>> found;
    visit(sys_.zero(), lambda, n, parts, [&](const std::vector<Weight>& p) {
      found = p;
      return false;
    });
    return found;
  }

  /// All decompositions with exactly n parts, up to `limit`.
  void enumerate(const Weight& lambda, std::size_t n, std::size_t limit, std::vector<std::vector<Weight>>& out) {
    failed_.clear();
    std::vector<Weight> parts;
    visit(sys_.zero(), lambda, n, parts, [&](const std::vector<Weight>& p) {
      out.push_back(p);
      return out.size() < limit;
    });
  }

  bool feasible(const Weight& remaining, std::size_t m) const {
    if (m == 0) return remaining.is_zero();
    // For a single orbit W.w the sums of m elements are exactly the weights
    // mu with dom(mu) <= m*w in the root order.
    if (reps_.size() != 1) return true;
    return sys_.root_leq(sys_.dominant(remaining), static_cast<int>(m) * reps_.front());
  }

 private:
  template <class Sink>
  bool visit(const Weight& prefix, const Weight& remaining, std::size_t m, std::vector<Weight>& parts, Sink&& sink) {
    if (m == 0) {
      if (!remaining.is_zero()) return true;
      return sink(parts);
    }
    if (!feasible(remaining, m)) return true;
    auto key = std::make_pair(remaining, m);
    if (failed_.count(key)) return true;
    const std::size_t before = hits_;
    for (const auto& c : candidates_) {
      Weight next = prefix + c;
      if (!next.is_dominant()) continue;
      parts.push_back(c);
      ++hits_;
      const bool more = visit(next, remaining - c, m - 1, parts, sink);
      parts.pop_back();
      if (!more) return false;
    }
    // Reaching here means every branch was exhausted; only cache genuine
    // dead ends (no sink calls below this node).
    if (hits_ == before) failed_.insert(std::move(key));
    return true;
  }

  const RootSystem& sys_;
  std::vector<Weight> reps_;
  std::vector<Weight> candidates_;
  std::set<std::pair<Weight, std::size_t>> failed_;
  std::size_t hits_ = 0;
};

inline std::size_t decomposition_part_bound(const RootSystem& sys, const Weight& lambda) {
  return (sys.rank() + 1) * static_cast<std::size_t>(lambda.coordinate_sum() + 1) + sys.rank();
}

inline MinusculeDecomposition finish_decomposition(const RootSystem& sys, std::vector<Weight> parts) {
  MinusculeDecomposition d;
  for (const auto& p : parts) d.dominant_orbits.push_back(sys.dominant(p));
  d.parts = std::move(parts);
  return d;
}

}  // namespace detail

/// Deterministic decomposition of a dominant weight into minuscule parts with
/// dominant partial sums.
///
/// Single-orbit decompositions are preferred: the minuscule fundamental
/// weights are tried in node order, and for each the fewest parts that work.
/// In type A this gives the usual embedding into tensor powers of the vector
/// representation. Mixed-orbit search is a fallback.
inline MinusculeDecomposition minuscule_decomposition(const RootSystem& sys, const Weight& lambda) {
  sys.check_weight(lambda);
  if (!lambda.is_dominant()) throw InvalidInput("minuscule decomposition needs a dominant weight");
  if (lambda.is_zero()) return {};
  if (sys.minuscule_fundamentals().empty())
    throw InvalidInput(sys.name() + " has no minuscule weights");
  const std::size_t bound = detail::decomposition_part_bound(sys, lambda);
  for (const auto& omega : sys.minuscule_fundamentals()) {
    detail::DecompositionSearch search(sys, {omega});
    for (std::size_t n = 1; n <= bound; ++n) {
      if (!search.feasible(lambda, n)) continue;
      if (auto parts = search.find(lambda, n)) return detail::finish_decomposition(sys, std::move(*parts));
    }
  }
  detail::DecompositionSearch search(sys, sys.minuscule_fundamentals());
  for (std::size_t n = 1; n <= bound; ++n)
    if (auto parts = search.find(lambda, n)) return detail::finish_decomposition(sys, std::move(*parts));
  detail::invariant_failure("no minuscule decomposition found for a dominant weight of " + sys.name());
}

/// Every decomposition into parts drawn from all minuscule orbits with at
/// most `max_parts` parts, up to `limit` of them, fewest parts first.
inline std::vector<MinusculeDecomposition> minuscule_decompositions(const RootSystem& sys, const Weight& lambda,
                                                                    std::size_t max_parts, std::size_t limit) {
  sys.check_weight(lambda);
  if (!lambda.is_dominant()) throw InvalidInput("minuscule decomposition needs a dominant weight");
  std::vector<MinusculeDecomposition> out;
  if (lambda.is_zero()) {
    out.emplace_back();
    return out;
  }
  detail::DecompositionSearch search(sys, sys.minuscule_fundamentals());
  std::vector<std::vector<Weight>> found;
  for (std::size_t n = 1; n <= max_parts && found.size() < limit; ++n)
    search.enumerate(lambda, n, limit, found);
  for (auto& parts : found) out.push_back(detail::finish_decomposition(sys, std::move(parts)));
  return out;
}

}  // namespace crystal
