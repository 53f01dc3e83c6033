#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "root_system.hpp"
#include "weight.hpp"

namespace crystal {

/// An ordered list of dominant minuscule weights (omega_1, ..., omega_n): the
/// tensor product B_{omega_1} (x) ... (x) B_{omega_n}. Products are flat, so
/// bracketing never matters.
class TensorShape {
 public:
  TensorShape(std::shared_ptr<const RootSystem> sys, std::vector<Weight> factors)
      : sys_(std::move(sys)), factors_(std::move(factors)) {
    detail::require(sys_ != nullptr, "tensor shape needs a root system");
    crystals_.reserve(factors_.size());
    for (const auto& w : factors_) {
      sys_->check_weight(w);
      if (!w.is_dominant()) throw InvalidInput("tensor factor must be dominant");
      crystals_.push_back(sys_->minuscule_crystal(w));
    }
    raw_.reserve(crystals_.size());
    for (const auto& c : crystals_) raw_.push_back(c.get());
  }

  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }
  std::size_t rank() const { return sys_->rank(); }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const Weight& factor(std::size_t j) const { return factors_.at(j); }
  const std::vector<Weight>& factors() const { return factors_; }
  const MinusculeCrystal& crystal(std::size_t j) const { return *raw_[j]; }
  const MinusculeCrystal* const* crystals() const { return raw_.data(); }

  /// Number of elements of the product, saturating at SIZE_MAX.
  std::size_t cardinality() const {
    std::size_t n = 1;
    for (const auto* c : raw_) {
      if (n > SIZE_MAX / c->size()) return SIZE_MAX;
      n *= c->size();
    }
    return n;
  }

  friend bool operator==(const TensorShape& a, const TensorShape& b) {
    return (a.sys_ == b.sys_ || (a.sys_->type() == b.sys_->type() && a.sys_->rank() == b.sys_->rank())) &&
           a.factors_ == b.factors_;
  }

 private:
  std::shared_ptr<const RootSystem> sys_;
  std::vector<Weight> factors_;
  std::vector<std::shared_ptr<const MinusculeCrystal>> crystals_;
  std::vector<const MinusculeCrystal*> raw_;
};

using ShapePtr = std::shared_ptr<const TensorShape>;

inline ShapePtr make_shape(std::shared_ptr<const RootSystem> sys, std::vector<Weight> factors) {
  return std::make_shared<const TensorShape>(std::move(sys), std::move(factors));
}

inline ShapePtr concat_shapes(const TensorShape& a, const TensorShape& b) {
  std::vector<Weight> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return make_shape(a.system_ptr(), std::move(f));
}

inline ShapePtr slice_shape(const TensorShape& s, std::size_t begin, std::size_t end) {
  detail::require(begin <= end && end <= s.size(), "shape slice out of range");
  return make_shape(s.system_ptr(), std::vector<Weight>(s.factors().begin() + static_cast<std::ptrdiff_t>(begin),
                                                        s.factors().begin() + static_cast<std::ptrdiff_t>(end)));
}

/// An element (a_1, ..., a_n) of a tensor product of minuscule crystals,
/// stored as indices into each factor's orbit.
class TensorElement {
 public:
  TensorElement(ShapePtr shape, std::span<const Weight> entries) : shape_(std::move(shape)) {
    detail::require(shape_ != nullptr, "tensor element needs a shape");
    if (entries.size() != shape_->size())
      throw InvalidInput("element has " + std::to_string(entries.size()) + " entries, shape has " +
                         std::to_string(shape_->size()) + " factors");
    idx_.reserve(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) {
      shape_->system().check_weight(entries[j]);
      auto u = shape_->crystal(j).find(entries[j]);
      if (!u) throw InvalidInput("entry " + std::to_string(j + 1) + " is not in the Weyl orbit of its factor");
      idx_.push_back(*u);
    }
  }

  static TensorElement from_indices(ShapePtr shape, std::vector<std::uint32_t> idx) {
    detail::require(shape != nullptr && idx.size() == shape->size(), "index vector does not match shape");
    for (std::size_t j = 0; j < idx.size(); ++j)
      detail::require(idx[j] < shape->crystal(j).size(), "orbit index out of range");
    return TensorElement(std::move(shape), std::move(idx), Unchecked{});
  }

  const TensorShape& shape() const { return *shape_; }
  const ShapePtr& shape_ptr() const { return shape_; }
  const RootSystem& system() const { return shape_->system(); }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }

  const Weight& entry(std::size_t j) const { return shape_->crystal(j).element(idx_.at(j)); }
  std::vector<Weight> entries() const {
    std::vector<Weight> out;
    out.reserve(idx_.size());
    for (std::size_t j = 0; j < idx_.size(); ++j) out.push_back(entry(j));
    return out;
  }

  std::span<const std::uint32_t> indices() const { return idx_; }

  TensorElement slice(std::size_t begin, std::size_t end) const {
    ShapePtr s = slice_shape(*shape_, begin, end);
    return TensorElement(std::move(s),
                         std::vector<std::uint32_t>(idx_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                    idx_.begin() + static_cast<std::ptrdiff_t>(end)),
                         Unchecked{});
  }

  friend TensorElement concat(const TensorElement& a, const TensorElement& b) {
    std::vector<std::uint32_t> idx = a.idx_;
    idx.insert(idx.end(), b.idx_.begin(), b.idx_.end());
    return TensorElement(concat_shapes(*a.shape_, *b.shape_), std::move(idx), Unchecked{});
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.idx_ == b.idx_ && (a.shape_ == b.shape_ || *a.shape_ == *b.shape_);
  }

  /// Lexicographic order on the entry weights.
  friend bool operator<(const TensorElement& a, const TensorElement& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
      const Weight& x = a.entry(j);
      const Weight& y = b.entry(j);
      if (x != y) return x < y;
    }
    return a.size() < b.size();
  }

 private:
  struct Unchecked {};
  TensorElement(ShapePtr shape, std::vector<std::uint32_t> idx, Unchecked)
      : shape_(std::move(shape)), idx_(std::move(idx)) {}

  friend TensorElement with_indices(const TensorElement&, std::vector<std::uint32_t>);

  ShapePtr shape_;
  std::vector<std::uint32_t> idx_;
};

/// Same shape, new indices (unchecked; for kernel results).
inline TensorElement with_indices(const TensorElement& like, std::vector<std::uint32_t> idx) {
  return TensorElement(like.shape_, std::move(idx), TensorElement::Unchecked{});
}

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

namespace detail {

struct Scan {
  int value;
  std::size_t pos;
};

// Signature rule for the n-fold tensor product:
//   eps_i = max_j eps_i(a_j) - wt_i(a_1) - ... - wt_i(a_{j-1}), smallest j,
//   phi_i = max_k phi_i(a_k) + wt_i(a_{k+1}) + ... + wt_i(a_n), largest k.
// For minuscule factors eps_i(a) = [<a,alpha_i^vee> = -1] and
// phi_i(a) = [<a,alpha_i^vee> = +1].
inline Scan scan_eps(const TensorShape& s, const std::uint32_t* idx, std::size_t n, std::size_t i) {
  const auto* const* cr = s.crystals();
  int best = INT_MIN;
  std::size_t pos = 0;
  int prefix = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const int p = cr[j]->pairing(idx[j], i);
    const int v = (p < 0 ? 1 : 0) - prefix;
    if (v > best) {
      best = v;
      pos = j;
    }
    prefix += p;
  }
  return {n == 0 ? 0 : best, pos};
}

inline Scan scan_phi(const TensorShape& s, const std::uint32_t* idx, std::size_t n, std::size_t i) {
  const auto* const* cr = s.crystals();
  int best = INT_MIN;
  std::size_t pos = 0;
  int suffix = 0;
  for (std::size_t j = n; j-- > 0;) {
    const int p = cr[j]->pairing(idx[j], i);
    const int v = (p > 0 ? 1 : 0) + suffix;
    if (v > best) {
      best = v;
      pos = j;
    }
    suffix += p;
  }
  return {n == 0 ? 0 : best, pos};
}

inline bool raise_at(const TensorShape& s, std::uint32_t* idx, std::size_t n, std::size_t i) {
  const Scan sc = scan_eps(s, idx, n, i);
  if (sc.value <= 0) return false;
  const std::int32_t t = s.crystals()[sc.pos]->raise(idx[sc.pos], i);
  ensure(t >= 0, "tensor rule selected a factor that cannot be raised");
  idx[sc.pos] = static_cast<std::uint32_t>(t);
  return true;
}

inline bool lower_at(const TensorShape& s, std::uint32_t* idx, std::size_t n, std::size_t i) {
  const Scan sc = scan_phi(s, idx, n, i);
  if (sc.value <= 0) return false;
  const std::int32_t t = s.crystals()[sc.pos]->lower(idx[sc.pos], i);
  ensure(t >= 0, "tensor rule selected a factor that cannot be lowered");
  idx[sc.pos] = static_cast<std::uint32_t>(t);
  return true;
}

/// Raise at the smallest applicable index until highest; returns the indices
/// used, in application order.
inline void raise_to_top(const TensorShape& s, std::uint32_t* idx, std::size_t n, std::vector<std::size_t>* path) {
  const std::size_t r = s.rank();
  for (;;) {
    std::size_t i = 0;
    while (i < r && !raise_at(s, idx, n, i)) ++i;
    if (i == r) return;
    if (path) path->push_back(i);
  }
}

inline void lower_to_bottom(const TensorShape& s, std::uint32_t* idx, std::size_t n) {
  const std::size_t r = s.rank();
  for (;;) {
    std::size_t i = 0;
    while (i < r && !lower_at(s, idx, n, i)) ++i;
    if (i == r) return;
  }
}

/// eta(x) = e_{i_1*} ... e_{i_m*}(c) where x = f_{i_1} ... f_{i_m}(b) is the
/// raising path of x to its highest element b, and c is the lowest element of
/// the component.
inline void involution_in_place(const TensorShape& s, std::uint32_t* idx, std::size_t n,
                                std::vector<std::size_t>& path) {
  path.clear();
  raise_to_top(s, idx, n, &path);
  lower_to_bottom(s, idx, n);
  const RootSystem& sys = s.system();
  for (std::size_t k = path.size(); k-- > 0;)
    if (!raise_at(s, idx, n, sys.star(path[k])))
      invariant_failure("Lusztig involution: a raising operator vanished on the lowest-weight side");
}

}  // namespace detail

inline Weight weight(const TensorElement& x) {
  Weight w = x.system().zero();
  for (std::size_t j = 0; j < x.size(); ++j) w += x.entry(j);
  return w;
}

inline int eps(const TensorElement& x, std::size_t i) {
  x.system().check_index(i);
  return detail::scan_eps(x.shape(), x.indices().data(), x.size(), i).value;
}

inline int phi(const TensorElement& x, std::size_t i) {
  x.system().check_index(i);
  return detail::scan_phi(x.shape(), x.indices().data(), x.size(), i).value;
}

struct StringData {
  int eps;
  int phi;
  friend bool operator==(const StringData&, const StringData&) = default;
};

inline StringData string_data(const TensorElement& x, std::size_t i) { return {eps(x, i), phi(x, i)}; }

/// epsilon(b) and phi(b) as weights: sum_i eps_i(b) Lambda_i.
inline Weight eps_weight(const TensorElement& x) {
  Weight w = x.system().zero();
  for (std::size_t i = 0; i < w.rank(); ++i) w[i] = eps(x, i);
  return w;
}
inline Weight phi_weight(const TensorElement& x) {
  Weight w = x.system().zero();
  for (std::size_t i = 0; i < w.rank(); ++i) w[i] = phi(x, i);
  return w;
}

/// f_i; nullopt plays the role of the crystal's 0.
inline std::optional<TensorElement> lower(const TensorElement& x, std::size_t i) {
  x.system().check_index(i);
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  if (!detail::lower_at(x.shape(), idx.data(), idx.size(), i)) return std::nullopt;
  return with_indices(x, std::move(idx));
}

/// e_i; nullopt plays the role of the crystal's 0.
inline std::optional<TensorElement> raise(const TensorElement& x, std::size_t i) {
  x.system().check_index(i);
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  if (!detail::raise_at(x.shape(), idx.data(), idx.size(), i)) return std::nullopt;
  return with_indices(x, std::move(idx));
}

inline bool is_highest(const TensorElement& x) {
  for (std::size_t i = 0; i < x.system().rank(); ++i)
    if (eps(x, i) > 0) return false;
  return true;
}

inline bool is_lowest(const TensorElement& x) {
  for (std::size_t i = 0; i < x.system().rank(); ++i)
    if (phi(x, i) > 0) return false;
  return true;
}

/// Highest-element test by partial sums: wt(b_1)+...+wt(b_{j-1}) - eps(b_j)
/// must be dominant for every j.
inline bool is_highest_by_partial_sums(const TensorElement& x) {
  const std::size_t r = x.system().rank();
  Weight prefix = x.system().zero();
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Weight& a = x.entry(j);
    for (std::size_t i = 0; i < r; ++i) {
      const int eps_a = a[i] < 0 ? -a[i] : 0;
      if (prefix[i] - eps_a < 0) return false;
    }
    prefix += a;
  }
  return true;
}

struct RaiseResult {
  TensorElement highest;
  std::vector<std::size_t> path;  // raising indices in application order
};

inline RaiseResult raise_to_highest(const TensorElement& x) {
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  std::vector<std::size_t> path;
  detail::raise_to_top(x.shape(), idx.data(), idx.size(), &path);
  return {with_indices(x, std::move(idx)), std::move(path)};
}

/// Lowest element c_lambda of the component containing x.
inline TensorElement lowest_of_component(const TensorElement& x) {
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  detail::raise_to_top(x.shape(), idx.data(), idx.size(), nullptr);
  detail::lower_to_bottom(x.shape(), idx.data(), idx.size());
  return with_indices(x, std::move(idx));
}

/// Lusztig's involution on the component containing x.
inline TensorElement lusztig_involution(const TensorElement& x) {
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  std::vector<std::size_t> path;
  detail::involution_in_place(x.shape(), idx.data(), idx.size(), path);
  return with_indices(x, std::move(idx));
}

/// Apply f_{path[m-1]}, ..., f_{path[0]} (reverse order): undoes a raising path.
inline std::optional<TensorElement> lower_along(const TensorElement& x, std::span<const std::size_t> path) {
  std::vector<std::uint32_t> idx(x.indices().begin(), x.indices().end());
  for (std::size_t k = path.size(); k-- > 0;)
    if (!detail::lower_at(x.shape(), idx.data(), idx.size(), path[k])) return std::nullopt;
  return with_indices(x, std::move(idx));
}

/// Every element of the product, in odometer order (last factor fastest).
inline std::vector<TensorElement> all_elements(const ShapePtr& shape) {
  std::vector<TensorElement> out;
  const std::size_t n = shape->size();
  std::vector<std::uint32_t> idx(n, 0);
  for (;;) {
    out.push_back(TensorElement::from_indices(shape, idx));
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++idx[j] < shape->crystal(j).size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

/// Highest elements of the product, found by depth-first extension under the
/// partial-sum criterion; sorted lexicographically by entries.
inline std::vector<TensorElement> max_elements(const ShapePtr& shape) {
  const TensorShape& s = *shape;
  const std::size_t n = s.size();
  const std::size_t r = s.rank();
  std::vector<TensorElement> out;
  std::vector<std::uint32_t> idx(n, 0);
  std::vector<Weight> prefix(n + 1, s.system().zero());
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.push_back(TensorElement::from_indices(shape, idx));
      return;
    }
    const MinusculeCrystal& c = s.crystal(j);
    for (std::uint32_t u = 0; u < c.size(); ++u) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) ok = prefix[j][i] + std::min(0, c.pairing(u, i)) >= 0;
      if (!ok) continue;
      idx[j] = u;
      prefix[j + 1] = prefix[j] + c.element(u);
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Embedding {
  MinusculeDecomposition decomposition;
  ShapePtr shape;
  TensorElement highest;
};

/// B_lambda inside B_{omega_1} (x) ... (x) B_{omega_n}, with b_lambda mapped to
/// the decomposition's parts.
inline Embedding embed_highest(std::shared_ptr<const RootSystem> sys, MinusculeDecomposition d) {
  ShapePtr shape = make_shape(std::move(sys), d.dominant_orbits);
  TensorElement top(shape, d.parts);
  detail::ensure(is_highest_by_partial_sums(top), "decomposition has a non-dominant partial sum");
  return {std::move(d), std::move(shape), std::move(top)};
}

inline Embedding embed_highest(std::shared_ptr<const RootSystem> sys, const Weight& lambda) {
  auto d = minuscule_decomposition(*sys, lambda);
  return embed_highest(std::move(sys), std::move(d));
}

struct CrystalComponent {
  TensorElement highest;
  Weight lambda;
};

inline CrystalComponent component_of(const TensorElement& x) {
  auto top = raise_to_highest(x).highest;
  Weight lambda = weight(top);
  return {std::move(top), std::move(lambda)};
}

/// Breadth-first closure of the component's highest element under the
/// lowering operators.
inline std::vector<TensorElement> component_members(const TensorElement& x) {
  const TensorShape& s = x.shape();
  const std::size_t r = s.rank();
  auto top = raise_to_highest(x).highest;
  std::vector<std::vector<std::uint32_t>> queue{std::vector<std::uint32_t>(top.indices().begin(), top.indices().end())};
  std::unordered_set<std::vector<std::uint32_t>, IndexVectorHash> seen{queue.front()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::uint32_t> next = queue[head];
      if (!detail::lower_at(s, next.data(), next.size(), i)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<TensorElement> out;
  out.reserve(queue.size());
  for (auto& q : queue) out.push_back(with_indices(x, std::move(q)));
  return out;
}

/// a <= b in the crystal order: a is reachable from b by lowering operators.
/// The search only visits elements whose weight stays above wt(a).
inline bool crystal_leq(const TensorElement& a, const TensorElement& b) {
  detail::require(a.shape() == b.shape(), "crystal_leq needs elements of the same tensor product");
  const RootSystem& sys = a.system();
  auto gap = sys.root_coordinates(weight(b) - weight(a));
  if (!gap || std::any_of(gap->begin(), gap->end(), [](long long c) { return c < 0; })) return false;
  const std::vector<std::uint32_t> target(a.indices().begin(), a.indices().end());
  struct Node {
    std::vector<std::uint32_t> idx;
    std::vector<long long> gap;
  };
  std::deque<Node> queue;
  queue.push_back({std::vector<std::uint32_t>(b.indices().begin(), b.indices().end()), *gap});
  std::unordered_set<std::vector<std::uint32_t>, IndexVectorHash> seen{queue.front().idx};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (std::all_of(node.gap.begin(), node.gap.end(), [](long long c) { return c == 0; })) {
      if (node.idx == target) return true;
      continue;
    }
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      if (node.gap[i] == 0) continue;
      std::vector<std::uint32_t> next = node.idx;
      if (!detail::lower_at(a.shape(), next.data(), next.size(), i)) continue;
      if (!seen.insert(next).second) continue;
      std::vector<long long> g = node.gap;
      --g[i];
      queue.push_back({std::move(next), std::move(g)});
    }
  }
  return false;
}

}  // namespace crystal
