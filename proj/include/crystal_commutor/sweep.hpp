#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commutor.hpp"
#include "error.hpp"
#include "growth.hpp"
#include "tensor.hpp"

namespace crystal {

/// One connected component of a tensor product, materialized: members in
/// breadth-first order from the highest element (so depth never decreases),
/// with string lengths and root operators tabulated.
class ComponentTable {
 public:
  static constexpr std::int32_t kNone = -1;

  explicit ComponentTable(const TensorElement& member) : shape_(member.shape_ptr()) {
    const TensorShape& s = *shape_;
    n_ = s.size();
    rank_ = s.rank();
    auto top = raise_to_highest(member).highest;
    lambda_ = weight(top);

    std::vector<std::uint32_t> cur(top.indices().begin(), top.indices().end());
    add(cur);
    for (std::uint32_t head = 0; head < size_; ++head) {
      for (std::size_t i = 0; i < rank_; ++i) {
        cur.assign(idx_.begin() + static_cast<std::ptrdiff_t>(head * n_),
                   idx_.begin() + static_cast<std::ptrdiff_t>((head + 1) * n_));
        if (!detail::lower_at(s, cur.data(), n_, i)) continue;
        if (!lookup_.count(cur)) add(cur);
      }
    }

    eps_.resize(size_ * rank_);
    phi_.resize(size_ * rank_);
    raise_.assign(size_ * rank_, kNone);
    lower_.assign(size_ * rank_, kNone);
    depth_.resize(size_ * rank_);
    for (std::uint32_t u = 0; u < size_; ++u) {
      const std::uint32_t* p = idx_.data() + u * n_;
      for (std::size_t i = 0; i < rank_; ++i) {
        eps_[u * rank_ + i] = static_cast<std::int16_t>(detail::scan_eps(s, p, n_, i).value);
        phi_[u * rank_ + i] = static_cast<std::int16_t>(detail::scan_phi(s, p, n_, i).value);
        cur.assign(p, p + n_);
        if (detail::raise_at(s, cur.data(), n_, i)) raise_[u * rank_ + i] = static_cast<std::int32_t>(at(cur));
        cur.assign(p, p + n_);
        if (detail::lower_at(s, cur.data(), n_, i)) lower_[u * rank_ + i] = static_cast<std::int32_t>(at(cur));
      }
      Weight w = s.system().zero();
      for (std::size_t j = 0; j < n_; ++j) w += s.crystal(j).element(p[j]);
      auto c = s.system().root_coordinates(lambda_ - w);
      detail::ensure(c.has_value(), "component member weight is not in the root lattice coset of its top");
      for (std::size_t i = 0; i < rank_; ++i) {
        detail::ensure((*c)[i] >= 0, "component member is not below its highest weight");
        depth_[u * rank_ + i] = static_cast<std::int32_t>((*c)[i]);
      }
    }
    build_involution();
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return rank_; }
  std::size_t length() const { return n_; }
  const ShapePtr& shape() const { return shape_; }
  const Weight& highest_weight() const { return lambda_; }

  std::span<const std::uint32_t> indices(std::uint32_t u) const { return {idx_.data() + u * n_, n_}; }
  TensorElement element(std::uint32_t u) const {
    auto s = indices(u);
    return TensorElement::from_indices(shape_, std::vector<std::uint32_t>(s.begin(), s.end()));
  }
  std::vector<Weight> entries(std::uint32_t u) const {
    std::vector<Weight> out;
    for (std::size_t j = 0; j < n_; ++j) out.push_back(shape_->crystal(j).element(idx_[u * n_ + j]));
    return out;
  }

  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& idx) const {
    auto it = lookup_.find(idx);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::uint32_t> find(const TensorElement& x) const {
    return find(std::vector<std::uint32_t>(x.indices().begin(), x.indices().end()));
  }
  /// Member with the given entry weights, if any.
  std::optional<std::uint32_t> find(std::span<const Weight> entries) const {
    if (entries.size() != n_) return std::nullopt;
    std::vector<std::uint32_t> idx(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      auto u = shape_->crystal(j).find(entries[j]);
      if (!u) return std::nullopt;
      idx[j] = *u;
    }
    return find(idx);
  }

  int eps(std::uint32_t u, std::size_t i) const { return eps_[u * rank_ + i]; }
  int phi(std::uint32_t u, std::size_t i) const { return phi_[u * rank_ + i]; }
  int wt(std::uint32_t u, std::size_t i) const { return phi_[u * rank_ + i] - eps_[u * rank_ + i]; }
  std::int32_t raise(std::uint32_t u, std::size_t i) const { return raise_[u * rank_ + i]; }
  std::int32_t lower(std::uint32_t u, std::size_t i) const { return lower_[u * rank_ + i]; }

  /// Lusztig's involution on this component, indexed by member.
  const std::vector<std::uint32_t>& involution() const { return eta_; }
  std::uint32_t lowest() const { return eta_[0]; }

  /// a <= b: a is reachable from b by lowering operators.
  bool leq(std::uint32_t a, std::uint32_t b) const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (depth_[b * rank_ + i] > depth_[a * rank_ + i]) return false;
    std::vector<char> seen(size_, 0);
    std::vector<std::uint32_t> queue{b};
    seen[b] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      if (u == a) return true;
      for (std::size_t i = 0; i < rank_; ++i) {
        const std::int32_t w = lower(u, i);
        if (w < 0 || seen[w] || depth_[w * rank_ + i] > depth_[a * rank_ + i]) continue;
        seen[w] = 1;
        queue.push_back(static_cast<std::uint32_t>(w));
      }
    }
    return false;
  }

 private:
  void add(const std::vector<std::uint32_t>& idx) {
    lookup_.emplace(idx, size_++);
    idx_.insert(idx_.end(), idx.begin(), idx.end());
  }
  std::uint32_t at(const std::vector<std::uint32_t>& idx) const {
    auto it = lookup_.find(idx);
    detail::ensure(it != lookup_.end(), "root operator left the component");
    return it->second;
  }

  // eta(b_lambda) = c_lambda and eta(x) = e_{i*} eta(e_i x) for the smallest
  // i with eps_i(x) > 0; breadth-first order visits e_i x before x.
  void build_involution() {
    const RootSystem& sys = shape_->system();
    std::uint32_t low = 0;
    for (;;) {
      std::size_t i = 0;
      while (i < rank_ && lower(low, i) < 0) ++i;
      if (i == rank_) break;
      low = static_cast<std::uint32_t>(lower(low, i));
    }
    eta_.assign(size_, 0);
    eta_[0] = low;
    for (std::uint32_t u = 1; u < size_; ++u) {
      std::size_t i = 0;
      while (i < rank_ && eps(u, i) == 0) ++i;
      detail::ensure(i < rank_, "component has a second highest element");
      const std::int32_t up = raise(u, i);
      const std::int32_t img = raise(eta_[static_cast<std::uint32_t>(up)], sys.star(i));
      detail::ensure(img >= 0, "Lusztig involution: raising operator vanished");
      eta_[u] = static_cast<std::uint32_t>(img);
    }
  }

  ShapePtr shape_;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::uint32_t size_ = 0;
  Weight lambda_;
  std::vector<std::uint32_t> idx_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, IndexVectorHash> lookup_;
  std::vector<std::int16_t> eps_, phi_;
  std::vector<std::int32_t> raise_, lower_;
  std::vector<std::int32_t> depth_;
  std::vector<std::uint32_t> eta_;
};

namespace detail {

/// X (x) Y for two component tables; elements are coded x * |Y| + y.
/// Two-factor signature rule: e_i acts on x iff eps_i(x) >= eps_i(y) - wt_i(x),
/// f_i acts on y iff phi_i(y) >= phi_i(x) + wt_i(y).
class TablePair {
 public:
  TablePair(const ComponentTable& x, const ComponentTable& y) : X(x), Y(y), ny(static_cast<std::uint32_t>(y.size())) {}

  std::uint32_t code(std::uint32_t x, std::uint32_t y) const { return x * ny + y; }
  std::uint32_t first(std::uint32_t c) const { return c / ny; }
  std::uint32_t second(std::uint32_t c) const { return c % ny; }
  std::size_t size() const { return X.size() * Y.size(); }

  int eps(std::uint32_t c, std::size_t i) const {
    const std::uint32_t x = first(c), y = second(c);
    return std::max(X.eps(x, i), Y.eps(y, i) - X.wt(x, i));
  }
  int phi(std::uint32_t c, std::size_t i) const {
    const std::uint32_t x = first(c), y = second(c);
    return std::max(X.phi(x, i) + Y.wt(y, i), Y.phi(y, i));
  }

  /// e_i, or -1.
  std::int64_t raise(std::uint32_t c, std::size_t i) const {
    const std::uint32_t x = first(c), y = second(c);
    const int ex = X.eps(x, i), ey = Y.eps(y, i) - X.wt(x, i);
    if (std::max(ex, ey) <= 0) return -1;
    if (ex >= ey) return code(static_cast<std::uint32_t>(X.raise(x, i)), y);
    return code(x, static_cast<std::uint32_t>(Y.raise(y, i)));
  }
  /// f_i, or -1.
  std::int64_t lower(std::uint32_t c, std::size_t i) const {
    const std::uint32_t x = first(c), y = second(c);
    const int px = X.phi(x, i) + Y.wt(y, i), py = Y.phi(y, i);
    if (std::max(px, py) <= 0) return -1;
    if (py >= px) return code(x, static_cast<std::uint32_t>(Y.lower(y, i)));
    return code(static_cast<std::uint32_t>(X.lower(x, i)), y);
  }

  const ComponentTable& X;
  const ComponentTable& Y;
  std::uint32_t ny;
};

}  // namespace detail

/// A highest element of X (x) Y and its growth diagram.
struct SweptDiagram {
  std::uint32_t source;  // code in X (x) Y
  std::uint32_t target;  // code in Y (x) X
  GrowthDiagram diagram;
};

/// Both commutor realizations on every element of B_{pi'} (x) B_pi and
/// B_pi (x) B_{pi'}, computed by unrolling their definitions along raising
/// paths:
///   jdt(x) = f_i jdt(e_i x),   eta(x) = e_{i*} eta(e_i x),
/// with i the smallest index such that e_i x != 0. On highest elements jdt is
/// the growth diagram and eta is the lowest element of the component.
class CommutorSweep {
 public:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  CommutorSweep(const ComponentTable& a, const ComponentTable& b, Verify verify = Verify::Full)
      : A_(a), B_(b), verify_(verify) {
    detail::require(a.shape()->system_ptr() == b.shape()->system_ptr() ||
                        (a.shape()->system().type() == b.shape()->system().type() &&
                         a.shape()->system().rank() == b.shape()->system().rank()),
                    "sweep components belong to different root systems");
    detail::require(a.size() * b.size() < kUnset, "product too large to sweep");
    pass(A_, B_, jdt_ab_, eta_ab_, diagrams_ab_);
    pass(B_, A_, jdt_ba_, eta_ba_, diagrams_ba_);
  }

  const ComponentTable& left() const { return A_; }
  const ComponentTable& right() const { return B_; }
  std::size_t size() const { return A_.size() * B_.size(); }

  /// Codes: an element (u, v) of A (x) B is u * |B| + v; an element (v, u)
  /// of B (x) A is v * |A| + u.
  std::uint32_t ab(std::uint32_t u, std::uint32_t v) const { return u * static_cast<std::uint32_t>(B_.size()) + v; }
  std::uint32_t ba(std::uint32_t v, std::uint32_t u) const { return v * static_cast<std::uint32_t>(A_.size()) + u; }

  std::uint32_t jdt_ab(std::uint32_t c) const { return jdt_ab_[c]; }
  std::uint32_t jdt_ba(std::uint32_t c) const { return jdt_ba_[c]; }
  std::uint32_t eta_ab(std::uint32_t c) const { return eta_ab_[c]; }
  std::uint32_t eta_ba(std::uint32_t c) const { return eta_ba_[c]; }

  /// sigma_{A,B} by the definition eta_{B(x)A} o (eta_B (x) eta_A) o flip.
  std::uint32_t hk_ab(std::uint32_t c) const {
    const std::uint32_t u = c / B_.size(), v = c % B_.size();
    return eta_ba_[ba(B_.involution()[v], A_.involution()[u])];
  }
  /// sigma_{A,B} as flip o (eta_A (x) eta_B) o eta_{A(x)B}.
  std::uint32_t hk_alt_ab(std::uint32_t c) const {
    const std::uint32_t y = eta_ab_[c];
    const std::uint32_t u = y / B_.size(), v = y % B_.size();
    return ba(B_.involution()[v], A_.involution()[u]);
  }
  std::uint32_t hk_ba(std::uint32_t c) const {
    const std::uint32_t v = c / A_.size(), u = c % A_.size();
    return eta_ab_[ab(A_.involution()[u], B_.involution()[v])];
  }
  std::uint32_t hk_alt_ba(std::uint32_t c) const {
    const std::uint32_t y = eta_ba_[c];
    const std::uint32_t v = y / A_.size(), u = y % A_.size();
    return ab(A_.involution()[u], B_.involution()[v]);
  }

  const std::vector<SweptDiagram>& diagrams_ab() const { return diagrams_ab_; }
  const std::vector<SweptDiagram>& diagrams_ba() const { return diagrams_ba_; }

 private:
  void pass(const ComponentTable& X, const ComponentTable& Y, std::vector<std::uint32_t>& jdt,
            std::vector<std::uint32_t>& eta, std::vector<SweptDiagram>& diagrams) {
    const detail::TablePair xy(X, Y), yx(Y, X);
    const RootSystem& sys = X.shape()->system();
    const std::size_t r = sys.rank();
    const std::size_t total = xy.size();
    jdt.assign(total, kUnset);
    eta.assign(total, kUnset);
    std::vector<std::size_t> star(r);
    for (std::size_t i = 0; i < r; ++i) star[i] = sys.star(i);

    struct Step {
      std::uint32_t code;
      std::uint32_t parent;
      std::uint32_t index;
    };
    std::vector<Step> stack;
    for (std::uint32_t start = 0; start < total; ++start) {
      if (jdt[start] != kUnset) continue;
      stack.clear();
      std::uint32_t cur = start;
      while (jdt[cur] == kUnset) {
        std::size_t i = 0;
        while (i < r && xy.eps(cur, i) <= 0) ++i;
        if (i == r) {
          base(xy, yx, cur, jdt, eta, diagrams);
          break;
        }
        const auto up = static_cast<std::uint32_t>(xy.raise(cur, i));
        stack.push_back({cur, up, static_cast<std::uint32_t>(i)});
        cur = up;
      }
      for (std::size_t k = stack.size(); k-- > 0;) {
        const Step& s = stack[k];
        const std::int64_t j = yx.lower(jdt[s.parent], s.index);
        if (j < 0) detail::invariant_failure("jdt sweep: a lowering operator vanished on the image");
        const std::int64_t e = xy.raise(eta[s.parent], star[s.index]);
        if (e < 0) detail::invariant_failure("involution sweep: a raising operator vanished");
        jdt[s.code] = static_cast<std::uint32_t>(j);
        eta[s.code] = static_cast<std::uint32_t>(e);
      }
    }
  }

  void base(const detail::TablePair& xy, const detail::TablePair& yx, std::uint32_t c,
            std::vector<std::uint32_t>& jdt, std::vector<std::uint32_t>& eta, std::vector<SweptDiagram>& diagrams) {
    const std::uint32_t x = xy.first(c), y = xy.second(c);
    detail::ensure(x == 0, "highest element of a product does not start with a highest element");
    const RootSystem& sys = xy.X.shape()->system();
    const auto top = xy.X.entries(0);
    const auto right = xy.Y.entries(y);
    GrowthResult g = growth_rectangle(sys, top, right, {CellOrder::AntiDiagonal, verify_});
    detail::ensure(g.left == xy.Y.entries(0), "growth diagram: left column is not the highest element");
    auto xp = xy.X.find(g.bottom);
    detail::ensure(xp.has_value(), "growth diagram: bottom row left the component");
    const std::uint32_t target = yx.code(0, *xp);
    jdt[c] = target;

    std::uint32_t low = c;
    const std::size_t r = sys.rank();
    for (;;) {
      std::size_t i = 0;
      std::int64_t next = -1;
      while (i < r && (next = xy.lower(low, i)) < 0) ++i;
      if (i == r) break;
      low = static_cast<std::uint32_t>(next);
    }
    eta[c] = low;
    diagrams.push_back({c, target, std::move(g.diagram)});
  }

  const ComponentTable& A_;
  const ComponentTable& B_;
  Verify verify_;
  std::vector<std::uint32_t> jdt_ab_, jdt_ba_, eta_ab_, eta_ba_;
  std::vector<SweptDiagram> diagrams_ab_, diagrams_ba_;
};

}  // namespace crystal
