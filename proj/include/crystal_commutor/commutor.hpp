#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "growth.hpp"
#include "root_system.hpp"
#include "tensor.hpp"
#include "weight.hpp"

namespace crystal {

/// hk: eta_{B(x)A} o (eta_B (x) eta_A) o flip.
/// hk_alt: flip o (eta_A (x) eta_B) o eta_{A(x)B}.
/// jdt: growth diagram on highest elements, extended by lowering operators.
enum class Backend { hk, hk_alt, jdt };

inline std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::hk: return "hk";
    case Backend::hk_alt: return "hk-alt";
    case Backend::jdt: return "jdt";
  }
  return "?";
}

inline std::optional<Backend> parse_backend(std::string_view s) {
  if (s == "hk") return Backend::hk;
  if (s == "hk-alt" || s == "hk_alt") return Backend::hk_alt;
  if (s == "jdt") return Backend::jdt;
  return std::nullopt;
}

/// A dominant weight together with the decomposition that embeds B_lambda
/// into a tensor product of minuscule crystals.
struct Block {
  Weight lambda;
  MinusculeDecomposition decomposition;

  std::size_t length() const { return decomposition.parts.size(); }
  friend bool operator==(const Block&, const Block&) = default;
};

inline Block make_block(const RootSystem& sys, const Weight& lambda) {
  return {lambda, minuscule_decomposition(sys, lambda)};
}

inline Block make_block(const RootSystem& sys, MinusculeDecomposition d) {
  Weight lambda = sum(d.parts, sys.rank());
  Weight acc = sys.zero();
  for (std::size_t j = 0; j < d.parts.size(); ++j) {
    acc += d.parts[j];
    detail::require(acc.is_dominant(), "decomposition has a non-dominant partial sum");
    detail::require(d.dominant_orbits[j] == sys.dominant(d.parts[j]), "decomposition orbit mismatch");
    detail::require(sys.is_minuscule(d.dominant_orbits[j]), "decomposition part is not minuscule");
  }
  return {std::move(lambda), std::move(d)};
}

/// B_omega for minuscule omega as a single factor.
inline Block minuscule_block(const RootSystem& sys, const Weight& omega) {
  detail::require(omega.is_dominant() && sys.is_minuscule(omega), "single-factor block needs a dominant minuscule weight");
  return {omega, {{omega}, {omega}}};
}

/// An element of B_{lambda_1} (x) ... (x) B_{lambda_n}, each factor embedded
/// in a product of minuscule crystals, stored flat.
class BlockedElement {
 public:
  BlockedElement(std::vector<Block> blocks, TensorElement flat)
      : blocks_(std::move(blocks)), flat_(std::move(flat)) {
    index_blocks();
    std::vector<Weight> factors;
    for (const auto& b : blocks_)
      factors.insert(factors.end(), b.decomposition.dominant_orbits.begin(), b.decomposition.dominant_orbits.end());
    if (factors != flat_.shape().factors())
      throw InvalidInput("element shape does not match the block decompositions");
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (raise_to_highest(part(k)).highest.entries() != blocks_[k].decomposition.parts)
        throw InvalidInput("block " + std::to_string(k + 1) + " is not in the embedded component of its weight");
    }
  }

  /// Highest element (b_{lambda_1}, ..., b_{lambda_n}) of the blocked product.
  static BlockedElement tops(std::shared_ptr<const RootSystem> sys, std::vector<Block> blocks) {
    std::vector<Weight> factors, parts;
    for (const auto& b : blocks) {
      factors.insert(factors.end(), b.decomposition.dominant_orbits.begin(), b.decomposition.dominant_orbits.end());
      parts.insert(parts.end(), b.decomposition.parts.begin(), b.decomposition.parts.end());
    }
    TensorElement flat(make_shape(std::move(sys), std::move(factors)), parts);
    return BlockedElement(std::move(blocks), std::move(flat), Trusted{});
  }

  /// Build from per-block entries, validating membership.
  static BlockedElement from_entries(std::shared_ptr<const RootSystem> sys, std::vector<Block> blocks,
                                     const std::vector<Weight>& flat_entries) {
    std::vector<Weight> factors;
    for (const auto& b : blocks)
      factors.insert(factors.end(), b.decomposition.dominant_orbits.begin(), b.decomposition.dominant_orbits.end());
    if (factors.size() != flat_entries.size())
      throw InvalidInput("element has " + std::to_string(flat_entries.size()) + " entries, the blocks need " +
                         std::to_string(factors.size()));
    TensorElement flat(make_shape(std::move(sys), std::move(factors)), flat_entries);
    return BlockedElement(std::move(blocks), std::move(flat));
  }

  const RootSystem& system() const { return flat_.system(); }
  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }
  const TensorElement& flat() const { return flat_; }
  TensorElement part(std::size_t k) const { return flat_.slice(offsets_.at(k), offsets_.at(k + 1)); }

  friend bool operator==(const BlockedElement& a, const BlockedElement& b) {
    return a.blocks_ == b.blocks_ && a.flat_ == b.flat_;
  }

 private:
  struct Trusted {};
  BlockedElement(std::vector<Block> blocks, TensorElement flat, Trusted)
      : blocks_(std::move(blocks)), flat_(std::move(flat)) {
    index_blocks();
  }

  void index_blocks() {
    offsets_.assign(1, 0);
    for (const auto& b : blocks_) offsets_.push_back(offsets_.back() + b.length());
    detail::require(offsets_.back() == flat_.size(), "block lengths do not add up to the element length");
  }

  friend BlockedElement sigma_prq(const BlockedElement&, std::size_t, std::size_t, std::size_t, Backend);

  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  TensorElement flat_;
};

/// The commutor A (x) B -> B (x) A on a flat element, where A is the product
/// of the first `split` factors and B the rest. A and B may be reducible;
/// the result lies in the product with factors rotated.
inline TensorElement commute_segments(const TensorElement& x, std::size_t split, Backend backend,
                                      Verify verify = Verify::Fast) {
  detail::require(split <= x.size(), "split point out of range");
  const std::size_t n = x.size();
  switch (backend) {
    case Backend::hk: {
      const TensorElement a = lusztig_involution(x.slice(0, split));
      const TensorElement b = lusztig_involution(x.slice(split, n));
      return lusztig_involution(concat(b, a));
    }
    case Backend::hk_alt: {
      const TensorElement y = lusztig_involution(x);
      return concat(lusztig_involution(y.slice(split, n)), lusztig_involution(y.slice(0, split)));
    }
    case Backend::jdt: {
      const RaiseResult r = raise_to_highest(x);
      const TensorElement top = r.highest.slice(0, split);
      const TensorElement p = r.highest.slice(split, n);
      const GrowthResult g = growth_rectangle(x.system(), top.entries(), p, {CellOrder::AntiDiagonal, verify});
      std::vector<Weight> image = g.left;
      image.insert(image.end(), g.bottom.begin(), g.bottom.end());
      const TensorElement rotated = concat(p, top);
      TensorElement highest(rotated.shape_ptr(), image);
      auto out = lower_along(highest, r.path);
      if (!out) detail::invariant_failure("jdt commutor: a lowering operator vanished on the image of the path");
      return std::move(*out);
    }
  }
  detail::invariant_failure("unknown commutor backend");
}

/// sigma_{p,r,q} = 1 (x) sigma_{A_p..A_r, A_{r+1}..A_q} (x) 1, blocks
/// 0-based and inclusive.
inline BlockedElement sigma_prq(const BlockedElement& x, std::size_t p, std::size_t r, std::size_t q,
                                Backend backend) {
  const std::size_t n = x.block_count();
  if (!(p <= r && r < q && q < n))
    throw std::out_of_range("sigma(p,r,q) needs p <= r < q < number of blocks");
  const std::size_t lo = x.offset(p), mid = x.offset(r + 1), hi = x.offset(q + 1);
  const TensorElement& flat = x.flat();
  const TensorElement moved = commute_segments(flat.slice(lo, hi), mid - lo, backend);
  TensorElement out = concat(concat(flat.slice(0, lo), moved), flat.slice(hi, flat.size()));

  std::vector<Block> blocks(x.blocks().begin(), x.blocks().begin() + static_cast<std::ptrdiff_t>(p));
  blocks.insert(blocks.end(), x.blocks().begin() + static_cast<std::ptrdiff_t>(r + 1),
                x.blocks().begin() + static_cast<std::ptrdiff_t>(q + 1));
  blocks.insert(blocks.end(), x.blocks().begin() + static_cast<std::ptrdiff_t>(p),
                x.blocks().begin() + static_cast<std::ptrdiff_t>(r + 1));
  blocks.insert(blocks.end(), x.blocks().begin() + static_cast<std::ptrdiff_t>(q + 1), x.blocks().end());
  return BlockedElement(std::move(blocks), std::move(out), BlockedElement::Trusted{});
}

/// Two-block commutor sigma_{A,B}.
inline BlockedElement commutor(const BlockedElement& x, Backend backend) {
  detail::require(x.block_count() == 2, "the commutor acts on an element with exactly two blocks");
  return sigma_prq(x, 0, 0, 1, backend);
}

inline BlockedElement jdt_commutor(const BlockedElement& x) { return commutor(x, Backend::jdt); }
inline BlockedElement hk_commutor(const BlockedElement& x) { return commutor(x, Backend::hk); }
inline BlockedElement hk_commutor_alt(const BlockedElement& x) { return commutor(x, Backend::hk_alt); }

/// Cactus generator s_{p,q}: reverses blocks p..q (0-based, inclusive) via
/// s_{p,p+1} = sigma_{p,p,p+1} and s_{p,q} = sigma_{p,p,q} o s_{p+1,q}.
/// s_{p,p} is the identity.
inline BlockedElement cactus_s(const BlockedElement& x, std::size_t p, std::size_t q, Backend backend) {
  if (!(p <= q && q < x.block_count())) throw std::out_of_range("s(p,q) needs p <= q < number of blocks");
  if (p == q) return x;
  if (q == p + 1) return sigma_prq(x, p, p, q, backend);
  return sigma_prq(cactus_s(x, p + 1, q, backend), p, p, q, backend);
}

/// sigma_{p,r,q} = s_{p,q} o s_{r+1,q} o s_{p,r}.
inline BlockedElement sigma_prq_composite(const BlockedElement& x, std::size_t p, std::size_t r, std::size_t q,
                                          Backend backend) {
  if (!(p <= r && r < q && q < x.block_count()))
    throw std::out_of_range("sigma(p,r,q) needs p <= r < q < number of blocks");
  return cactus_s(cactus_s(cactus_s(x, p, r, backend), r + 1, q, backend), p, q, backend);
}

/// The local move written with commutors:
/// sigma_{B_w', B_kappa (x) B_w} o (sigma_{B_kappa, B_w'} (x) 1)
/// applied to (b_kappa, h, v); the result is (b_kappa, v', h').
inline LocalMove local_move_as_commutor(std::shared_ptr<const RootSystem> sys, const Weight& kappa, const Weight& h,
                                        const Weight& v, Backend backend = Backend::hk) {
  detail::check_move_input(*sys, kappa, h, v);
  const Block bk = make_block(*sys, kappa);
  const Block bh = minuscule_block(*sys, sys->dominant(h));
  const Block bv = minuscule_block(*sys, sys->dominant(v));
  std::vector<Weight> entries = bk.decomposition.parts;
  entries.push_back(h);
  entries.push_back(v);
  auto x = BlockedElement::from_entries(sys, {bk, bh, bv}, entries);
  auto y = sigma_prq(sigma_prq(x, 0, 0, 1, backend), 0, 0, 2, backend);
  detail::ensure(y.part(0).entries() == bk.decomposition.parts,
                 "commutor form of the local move does not fix the kappa block");
  const std::size_t n = y.flat().size();
  const Weight v_out = y.flat().entry(n - 2);
  const Weight h_out = y.flat().entry(n - 1);
  return {v_out, h_out, kappa + v_out};
}

/// Highest elements of the embedded B_{lambda_1} (x) ... (x) B_{lambda_n}.
inline std::vector<BlockedElement> max_blocked_elements(std::shared_ptr<const RootSystem> sys,
                                                        const std::vector<Block>& blocks) {
  const BlockedElement top = BlockedElement::tops(sys, blocks);
  std::vector<BlockedElement> out;
  for (auto& e : max_elements(top.flat().shape_ptr())) {
    bool inside = true;
    std::size_t off = 0;
    for (const auto& b : blocks) {
      TensorElement part = e.slice(off, off + b.length());
      off += b.length();
      if (raise_to_highest(part).highest.entries() != b.decomposition.parts) {
        inside = false;
        break;
      }
    }
    if (inside) out.emplace_back(blocks, std::move(e));
  }
  return out;
}

/// Irreducible constituents of a tensor product, by highest weight.
inline std::map<Weight, std::size_t> decompose_tensor(const ShapePtr& shape) {
  std::map<Weight, std::size_t> out;
  for (const auto& e : max_elements(shape)) ++out[weight(e)];
  return out;
}

inline std::map<Weight, std::size_t> decompose_product(std::shared_ptr<const RootSystem> sys,
                                                       const std::vector<Block>& blocks) {
  std::map<Weight, std::size_t> out;
  for (const auto& e : max_blocked_elements(std::move(sys), blocks)) ++out[weight(e.flat())];
  return out;
}

/// For B_lambda (x) B_omega with omega minuscule: every constituent has
/// multiplicity one and highest weight lambda + mu for some mu in W.omega.
inline bool minuscule_multiplicity_one(const RootSystem& sys, const Weight& lambda, const Weight& omega,
                                       const std::map<Weight, std::size_t>& constituents) {
  detail::require(sys.is_minuscule(omega) && omega.is_dominant(), "second factor must be dominant minuscule");
  const auto orbit = sys.weyl_orbit(omega);
  for (const auto& [w, mult] : constituents) {
    if (mult != 1) return false;
    if (std::find(orbit.begin(), orbit.end(), w - lambda) == orbit.end()) return false;
  }
  return true;
}

}  // namespace crystal
