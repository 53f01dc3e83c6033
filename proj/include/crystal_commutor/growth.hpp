#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "root_system.hpp"
#include "tensor.hpp"
#include "weight.hpp"

namespace crystal {

/// Full re-checks every local move (orbit membership, dominance,
/// reversibility); Fast only checks the rectangle's boundary.
enum class Verify { Fast, Full };

struct LocalMove {
  Weight v_out;
  Weight h_out;
  Weight mu;  // the new corner
  friend bool operator==(const LocalMove&, const LocalMove&) = default;
};

namespace detail {

inline void require_minuscule_label(const RootSystem& sys, const Weight& w, const char* role) {
  sys.check_weight(w);
  const Weight d = sys.dominant(w);
  if (sys.is_minuscule(d)) return;
  if (sys.is_quasi_minuscule(d))
    throw UnsupportedFactor(std::string(role) + " lies in a quasi-minuscule orbit; local moves are only "
                            "defined here for minuscule labels");
  throw InvalidInput(std::string(role) + " is not in a minuscule Weyl orbit");
}

// mu = dom(kappa + nu - lambda), v' = mu - kappa, h' = nu - mu.
inline LocalMove raw_local_move(const RootSystem& sys, const Weight& kappa, const Weight& h, const Weight& v) {
  const Weight lambda = kappa + h;
  const Weight nu = lambda + v;
  Weight mu = sys.dominant(kappa + nu - lambda);
  return {mu - kappa, nu - mu, std::move(mu)};
}

inline void check_move_input(const RootSystem& sys, const Weight& kappa, const Weight& h, const Weight& v) {
  sys.check_weight(kappa);
  if (!kappa.is_dominant()) throw InvalidInput("local move: corner weight kappa is not dominant");
  require_minuscule_label(sys, h, "local move: horizontal label h");
  require_minuscule_label(sys, v, "local move: vertical label v");
  const Weight lambda = kappa + h;
  if (!lambda.is_dominant()) throw InvalidInput("local move: (b_kappa, h) is not a highest element");
  if (!(lambda + v).is_dominant()) throw InvalidInput("local move: (b_kappa, h, v) is not a highest element");
}

inline void check_move_output(const RootSystem& sys, const Weight& kappa, const Weight& h, const Weight& v,
                              const LocalMove& m) {
  ensure(m.mu.is_dominant(), "local move produced a non-dominant corner");
  ensure(sys.dominant(m.v_out) == sys.dominant(v), "local move: v' left the Weyl orbit of v");
  ensure(sys.dominant(m.h_out) == sys.dominant(h), "local move: h' left the Weyl orbit of h");
  ensure((m.mu + m.h_out).is_dominant(), "local move: (b_mu, h') is not a highest element");
  const LocalMove back = raw_local_move(sys, kappa, m.v_out, m.h_out);
  ensure(back.v_out == h && back.h_out == v, "local move is not reversible");
}

}  // namespace detail

/// Van Leeuwen's local move on a cell with top-left corner kappa, top edge h
/// and right edge v. Returns the left edge v', the bottom edge h' and the
/// bottom-left corner mu.
inline LocalMove local_move(const RootSystem& sys, const Weight& kappa, const Weight& h, const Weight& v) {
  detail::check_move_input(sys, kappa, h, v);
  LocalMove m = detail::raw_local_move(sys, kappa, h, v);
  detail::check_move_output(sys, kappa, h, v, m);
  return m;
}

/// k x l rectangle of edge labels in matrix orientation: h(i, j) for
/// 0 <= i <= k, 0 <= j < l; v(i, j) for 0 <= i < k, 0 <= j <= l; corners
/// for 0 <= i <= k, 0 <= j <= l with corner(0, 0) = 0.
class GrowthDiagram {
 public:
  GrowthDiagram() = default;
  GrowthDiagram(std::size_t k, std::size_t l, std::size_t rank)
      : k_(k), l_(l), h_((k + 1) * l, Weight(rank)), v_(k * (l + 1), Weight(rank)),
        corner_((k + 1) * (l + 1), Weight(rank)) {}

  std::size_t rows() const { return k_; }
  std::size_t cols() const { return l_; }

  const Weight& h(std::size_t i, std::size_t j) const { return h_.at(i * l_ + j); }
  Weight& h(std::size_t i, std::size_t j) { return h_.at(i * l_ + j); }
  const Weight& v(std::size_t i, std::size_t j) const { return v_.at(i * (l_ + 1) + j); }
  Weight& v(std::size_t i, std::size_t j) { return v_.at(i * (l_ + 1) + j); }
  const Weight& corner(std::size_t i, std::size_t j) const { return corner_.at(i * (l_ + 1) + j); }
  Weight& corner(std::size_t i, std::size_t j) { return corner_.at(i * (l_ + 1) + j); }

  /// Labels h(i, 0..l-1).
  std::vector<Weight> row(std::size_t i) const {
    std::vector<Weight> out;
    for (std::size_t j = 0; j < l_; ++j) out.push_back(h(i, j));
    return out;
  }
  /// Labels v(0..k-1, j).
  std::vector<Weight> column(std::size_t j) const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < k_; ++i) out.push_back(v(i, j));
    return out;
  }

  /// The diagram read with rows and columns exchanged; this is the diagram
  /// of the inverse map.
  GrowthDiagram transposed() const {
    const std::size_t rank = corner_.empty() ? 0 : corner_.front().rank();
    GrowthDiagram t(l_, k_, rank);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j <= l_; ++j) t.h(j, i) = v(i, j);
    for (std::size_t i = 0; i <= k_; ++i)
      for (std::size_t j = 0; j < l_; ++j) t.v(j, i) = h(i, j);
    for (std::size_t i = 0; i <= k_; ++i)
      for (std::size_t j = 0; j <= l_; ++j) t.corner(j, i) = corner(i, j);
    return t;
  }

  friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  std::vector<Weight> h_;
  std::vector<Weight> v_;
  std::vector<Weight> corner_;
};

/// Cell visiting orders. All respect the dependencies of the local moves.
enum class CellOrder {
  AntiDiagonal,  // sweep anti-diagonals starting at the top-right cell
  RowMajor,      // row by row, each from right to left
  ColumnMajor,   // column by column from the right, each top to bottom
};

struct GrowthOptions {
  CellOrder order = CellOrder::AntiDiagonal;
  Verify verify = Verify::Full;
};

struct GrowthResult {
  std::vector<Weight> left;    // v(0..k-1, 0)
  std::vector<Weight> bottom;  // h(k, 0..l-1)
  GrowthDiagram diagram;
};

/// Fill the rectangle whose top row is `top` (a highest element, the parts
/// of pi') and whose right column is `right` (the element p, with (top,
/// right) highest). The left column and bottom row are the outputs.
inline GrowthResult growth_rectangle(const RootSystem& sys, std::span<const Weight> top, std::span<const Weight> right,
                                     GrowthOptions opt = {}) {
  const std::size_t l = top.size();
  const std::size_t k = right.size();
  GrowthDiagram d(k, l, sys.rank());

  Weight acc = sys.zero();
  for (std::size_t j = 0; j < l; ++j) {
    detail::require_minuscule_label(sys, top[j], "top row label");
    d.h(0, j) = top[j];
    acc += top[j];
    if (!acc.is_dominant()) throw InvalidInput("top row is not a highest element: a partial sum is not dominant");
    d.corner(0, j + 1) = acc;
  }
  for (std::size_t i = 0; i < k; ++i) {
    detail::require_minuscule_label(sys, right[i], "right column label");
    d.v(i, l) = right[i];
    acc += right[i];
    if (!acc.is_dominant())
      throw InvalidInput("(top, right) is not a highest element: a partial sum is not dominant");
    d.corner(i + 1, l) = acc;
  }

  auto cell = [&](std::size_t i, std::size_t j) {
    const Weight& kappa = d.corner(i, j);
    const Weight& h = d.h(i, j);
    const Weight& v = d.v(i, j + 1);
    detail::ensure(kappa + h == d.corner(i, j + 1), "growth diagram corners are inconsistent");
    LocalMove m = detail::raw_local_move(sys, kappa, h, v);
    if (opt.verify == Verify::Full) {
      detail::check_move_input(sys, kappa, h, v);
      detail::check_move_output(sys, kappa, h, v, m);
    }
    d.v(i, j) = std::move(m.v_out);
    d.h(i + 1, j) = std::move(m.h_out);
    d.corner(i + 1, j) = std::move(m.mu);
  };

  if (k > 0 && l > 0) {
    switch (opt.order) {
      case CellOrder::AntiDiagonal:
        for (std::size_t s = 0; s + 1 < k + l; ++s)
          for (std::size_t i = 0; i < k && i <= s; ++i) {
            const std::size_t back = s - i;  // distance from the right edge
            if (back < l) cell(i, l - 1 - back);
          }
        break;
      case CellOrder::RowMajor:
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = l; j-- > 0;) cell(i, j);
        break;
      case CellOrder::ColumnMajor:
        for (std::size_t j = l; j-- > 0;)
          for (std::size_t i = 0; i < k; ++i) cell(i, j);
        break;
    }
  }
  // Degenerate rectangles: with k = 0 the bottom row is the top row; with
  // l = 0 the left column is the right column.

  GrowthResult out;
  out.left = d.column(0);
  out.bottom = d.row(k);
  Weight left_sum = sys.zero();
  for (const auto& w : out.left) {
    left_sum += w;
    detail::ensure(left_sum.is_dominant(), "growth diagram: left column is not a highest element");
  }
  detail::ensure(d.corner(k, 0) == left_sum, "growth diagram: left column does not reach the bottom-left corner");
  out.diagram = std::move(d);
  return out;
}

/// Growth from a highest element (top, p) where p is a tensor element. The
/// left column is checked against the highest element of p's component.
inline GrowthResult growth_rectangle(const RootSystem& sys, std::span<const Weight> top, const TensorElement& p,
                                     GrowthOptions opt = {}) {
  const auto right = p.entries();
  GrowthResult g = growth_rectangle(sys, top, right, opt);
  detail::ensure(g.left == raise_to_highest(p).highest.entries(),
                 "growth diagram: left column is not the highest element of the component of p");
  return g;
}

}  // namespace crystal
