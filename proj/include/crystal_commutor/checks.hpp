#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "commutor.hpp"
#include "format.hpp"
#include "growth.hpp"
#include "root_system.hpp"
#include "sweep.hpp"
#include "tensor.hpp"

namespace crystal::checks {

/// Counts of cases and failures for one named property, with the first few
/// counterexamples.
struct Tally {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;

  void pass() { ++cases; }
  void fail(std::string what) {
    ++cases;
    ++failures;
    if (examples.size() < 5) examples.push_back(std::move(what));
  }
  template <class Msg>
  void check(bool ok, Msg&& msg) {
    if (ok)
      pass();
    else
      fail(msg());
  }
  bool ok() const { return failures == 0; }
};

using Report = std::deque<Tally>;  // tallies are held by reference while more are added

inline Tally& tally(Report& r, const std::string& name) {
  for (auto& t : r)
    if (t.name == name) return t;
  r.push_back(Tally{name, 0, 0, {}});
  return r.back();
}

inline void merge_into(Report& dst, const Report& src) {
  for (const auto& t : src) {
    Tally& d = tally(dst, t.name);
    d.cases += t.cases;
    d.failures += t.failures;
    for (const auto& e : t.examples)
      if (d.examples.size() < 5) d.examples.push_back(e);
  }
}

inline bool all_ok(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const Tally& t) { return t.ok(); });
}

/// Run f(0..n-1) on a pool of worker threads; the first exception is
/// rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

struct TypeSpec {
  CartanType type;
  int rank;
  std::string name() const { return std::string(1, type_letter(type)) + std::to_string(rank); }
  std::shared_ptr<const RootSystem> make() const { return RootSystem::make(type, rank); }
};

/// "A1,A2,D4" -> specs.
inline std::vector<TypeSpec> parse_types(std::string_view list) {
  std::vector<TypeSpec> out;
  for (auto tok : detail::split(list, ',')) {
    tok = detail::trim(tok);
    if (tok.size() < 2) throw InvalidInput("bad type name '" + std::string(tok) + "' (expected e.g. A2)");
    auto t = parse_type_letter(tok.front());
    if (!t) throw InvalidInput("unknown Cartan type '" + std::string(tok) + "'");
    const int r = detail::parse_int(tok.substr(1), "rank");
    RootSystem::make(*t, r);  // validates
    out.push_back({*t, r});
  }
  return out;
}

/// Dominant weights with coordinate sum <= max_sum, by sum then
/// lexicographically decreasing.
inline std::vector<Weight> dominant_weights(std::size_t rank, int max_sum) {
  std::vector<Weight> out;
  Weight w(rank);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == rank) {
      out.push_back(w);
      return;
    }
    for (int c = left; c >= 0; --c) {
      w[i] = c;
      rec(i + 1, left - c);
    }
    w[i] = 0;
  };
  rec(0, max_sum);
  std::stable_sort(out.begin(), out.end(),
                   [](const Weight& a, const Weight& b) { return a.coordinate_sum() < b.coordinate_sum(); });
  return out;
}

struct GridOptions {
  std::vector<TypeSpec> types;
  int max_coord = 3;
  unsigned jobs = 0;
  /// Elements per (pi', pi) pair re-checked through the pointwise library
  /// functions; SIZE_MAX means all of them.
  std::size_t pointwise_per_pair = SIZE_MAX;
  bool equivariance = true;
  Verify verify = Verify::Full;
};

namespace internal {

inline std::string describe_pair(const RootSystem& sys, const Weight& a, const Weight& b) {
  return sys.name() + " (" + format_weight(a) + ") x (" + format_weight(b) + ")";
}

/// Diagram checks: the transposed inputs give back the original (and the
/// transposed diagram), every row/column chain is decreasing in the crystal
/// order, and other cell orders give the same diagram.
inline void check_diagram(const RootSystem& sys, const ComponentTable& X, const ComponentTable& Y,
                          const SweptDiagram& sd, const std::string& where, Tally& rev, Tally& mono, Tally& conf) {
  const GrowthDiagram& d = sd.diagram;
  const auto top = d.row(0);
  const auto right = d.column(d.cols());
  const auto left = d.column(0);
  const auto bottom = d.row(d.rows());
  {
    const GrowthResult back = growth_rectangle(sys, left, bottom);
    rev.check(back.left == top && back.bottom == right && back.diagram == d.transposed(),
              [&] { return where + ": reverse diagram does not return (b_pi', p)"; });
  }
  bool ok = true;
  std::vector<std::uint32_t> rows, cols;
  for (std::size_t i = 0; i <= d.rows() && ok; ++i) {
    auto u = X.find(d.row(i));
    ok = u.has_value();
    if (ok) rows.push_back(*u);
  }
  for (std::size_t j = 0; j <= d.cols() && ok; ++j) {
    auto u = Y.find(d.column(j));
    ok = u.has_value();
    if (ok) cols.push_back(*u);
  }
  for (std::size_t i = 0; ok && i + 1 < rows.size(); ++i) ok = X.leq(rows[i + 1], rows[i]);
  for (std::size_t j = 0; ok && j + 1 < cols.size(); ++j) ok = Y.leq(cols[j + 1], cols[j]);
  mono.check(ok, [&] { return where + ": diagram rows/columns are not monotone in the crystal order"; });
  const GrowthResult by_rows = growth_rectangle(sys, top, right, {CellOrder::RowMajor, Verify::Fast});
  const GrowthResult by_cols = growth_rectangle(sys, top, right, {CellOrder::ColumnMajor, Verify::Fast});
  conf.check(by_rows.diagram == d && by_cols.diagram == d,
             [&] { return where + ": cell order changes the diagram"; });
}

}  // namespace internal

/// Tables of the embedded components B_lambda for each grid weight.
struct ComponentGrid {
  TypeSpec spec;
  std::shared_ptr<const RootSystem> sys;
  std::vector<Weight> weights;
  std::vector<Block> blocks;
  std::vector<std::unique_ptr<ComponentTable>> tables;

  ComponentGrid(TypeSpec s, int max_coord) : spec(s), sys(s.make()) {
    weights = dominant_weights(sys->rank(), max_coord);
    for (const auto& w : weights) {
      blocks.push_back(make_block(*sys, w));
      auto top = BlockedElement::tops(sys, {blocks.back()});
      tables.push_back(std::make_unique<ComponentTable>(top.flat()));
    }
  }
};

/// jdt = hk = hk_alt on every element of B_pi' (x) B_pi for all ordered grid
/// pairs, plus C2, C1 and the diagram properties of every diagram built.
inline Report comagree_suite(const GridOptions& opt) {
  Report report;
  for (const auto& spec : opt.types) {
    const ComponentGrid grid(spec, opt.max_coord);
    const std::string T = spec.name();
    const std::size_t m = grid.weights.size();
    std::vector<Report> parts(m * m);
    parallel_for(m * m, opt.jobs, [&](std::size_t task) {
      const std::size_t a = task / m, b = task % m;
      const ComponentTable& A = *grid.tables[a];
      const ComponentTable& B = *grid.tables[b];
      const RootSystem& sys = *grid.sys;
      const std::string where = internal::describe_pair(sys, grid.weights[a], grid.weights[b]);
      Report& out = parts[task];
      Tally& agree = tally(out, T + " jdt = hk = hk-alt");
      Tally& c2 = tally(out, T + " C2 sigma o sigma = 1");
      Tally& rev = tally(out, T + " diagram reversibility");
      Tally& mono = tally(out, T + " diagram monotonicity");
      Tally& conf = tally(out, T + " diagram confluence");

      const CommutorSweep sw(A, B, opt.verify);
      const std::uint32_t n = static_cast<std::uint32_t>(sw.size());
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t j = sw.jdt_ab(c);
        agree.check(j == sw.hk_ab(c) && j == sw.hk_alt_ab(c), [&] {
          return where + ": element " + format_entries(A.entries(c / B.size())) + " | " +
                 format_entries(B.entries(c % B.size()));
        });
        c2.check(sw.jdt_ba(j) == c && sw.hk_ba(sw.hk_ab(c)) == c,
                 [&] { return where + ": sigma_{B,A} o sigma_{A,B} != 1"; });
      }
      if (opt.equivariance) {
        Tally& c1 = tally(out, T + " C1 operator equivariance");
        const detail::TablePair ab(A, B), ba(B, A);
        for (std::uint32_t c = 0; c < n; ++c) {
          bool ok = true;
          for (std::size_t i = 0; i < sys.rank() && ok; ++i) {
            const std::int64_t f = ab.lower(c, i);
            const std::int64_t g = ba.lower(sw.jdt_ab(c), i);
            ok = (f < 0) == (g < 0) && (f < 0 || sw.jdt_ab(static_cast<std::uint32_t>(f)) == g);
            const std::int64_t e = ab.raise(c, i);
            const std::int64_t h = ba.raise(sw.jdt_ab(c), i);
            ok = ok && (e < 0) == (h < 0) && (e < 0 || sw.jdt_ab(static_cast<std::uint32_t>(e)) == h);
          }
          c1.check(ok, [&] { return where + ": commutor does not commute with a root operator"; });
        }
      }
      for (const auto& sd : sw.diagrams_ab()) internal::check_diagram(sys, A, B, sd, where, rev, mono, conf);
      for (const auto& sd : sw.diagrams_ba()) internal::check_diagram(sys, B, A, sd, where, rev, mono, conf);

      if (opt.pointwise_per_pair > 0) {
        Tally& pw = tally(out, T + " pointwise library = sweep");
        const std::size_t want = std::min<std::size_t>(opt.pointwise_per_pair, n);
        const std::size_t stride = std::max<std::size_t>(1, n / std::max<std::size_t>(want, 1));
        std::size_t done = 0;
        for (std::size_t c = 0; c < n && done < want; c += stride, ++done) {
          const auto u = static_cast<std::uint32_t>(c / B.size());
          const auto v = static_cast<std::uint32_t>(c % B.size());
          std::vector<Weight> entries = A.entries(u);
          const auto bv = B.entries(v);
          entries.insert(entries.end(), bv.begin(), bv.end());
          const auto x = BlockedElement::from_entries(grid.sys, {grid.blocks[a], grid.blocks[b]}, entries);
          const std::uint32_t expect = sw.jdt_ab(static_cast<std::uint32_t>(c));
          bool ok = true;
          for (Backend be : {Backend::jdt, Backend::hk, Backend::hk_alt}) {
            const BlockedElement y = commutor(x, be);
            auto v2 = B.find(y.part(0));
            auto u2 = A.find(y.part(1));
            ok = ok && v2 && u2 && sw.ba(*v2, *u2) == expect;
          }
          pw.check(ok, [&] { return where + ": pointwise commutor differs from the sweep"; });
        }
      }
    });
    for (const auto& p : parts) merge_into(report, p);
  }
  return report;
}

/// With pi' a single minuscule factor, the commutor restricted to highest
/// elements is the unique weight-preserving bijection between max sets.
inline Report minuscule_left_suite(const std::vector<TypeSpec>& types, int max_coord) {
  Report report;
  for (const auto& spec : types) {
    const ComponentGrid grid(spec, max_coord);
    const RootSystem& sys = *grid.sys;
    Tally& t = tally(report, spec.name() + " minuscule pi': commutor = weight bijection on max sets");
    auto highest = [&](const detail::TablePair& p) {
      std::map<std::vector<int>, std::vector<std::uint32_t>> by_weight;
      for (std::uint32_t c = 0; c < p.size(); ++c) {
        bool top = true;
        std::vector<int> w(sys.rank());
        for (std::size_t i = 0; i < sys.rank(); ++i) {
          top = top && p.eps(c, i) == 0;
          w[i] = p.phi(c, i) - p.eps(c, i);
        }
        if (top) by_weight[w].push_back(c);
      }
      return by_weight;
    };
    for (const auto& omega : sys.minuscule_fundamentals()) {
      const Block lb = minuscule_block(sys, omega);
      const ComponentTable A(BlockedElement::tops(grid.sys, {lb}).flat());
      for (std::size_t b = 0; b < grid.weights.size(); ++b) {
        const ComponentTable& B = *grid.tables[b];
        const CommutorSweep sw(A, B, Verify::Fast);
        const auto src = highest(detail::TablePair(A, B));
        const auto dst = highest(detail::TablePair(B, A));
        bool ok = src.size() == dst.size();
        for (const auto& [w, cs] : src) {
          auto it = dst.find(w);
          ok = ok && cs.size() == 1 && it != dst.end() && it->second.size() == 1 &&
               sw.jdt_ab(cs.front()) == it->second.front();
        }
        t.check(ok, [&] { return internal::describe_pair(sys, omega, grid.weights[b]) + ": not the weight bijection"; });
      }
    }
  }
  return report;
}

/// The ambient tensor products B_{omega_1} (x) ... (x) B_{omega_n} used to
/// embed each grid weight.
inline std::vector<ShapePtr> ambient_shapes(const std::shared_ptr<const RootSystem>& sys, int max_coord) {
  std::vector<ShapePtr> out;
  std::set<std::vector<Weight>> seen;
  for (const auto& w : dominant_weights(sys->rank(), max_coord)) {
    auto d = minuscule_decomposition(*sys, w);
    if (seen.insert(d.dominant_orbits).second) out.push_back(make_shape(sys, d.dominant_orbits));
  }
  return out;
}

/// Crystal axioms A1-A3, the two highest-element criteria, and the
/// cardinality partition over components, on every ambient product.
inline Report axioms_suite(const GridOptions& opt) {
  Report report;
  for (const auto& spec : opt.types) {
    const auto sys = spec.make();
    const std::string T = spec.name();
    const auto shapes = ambient_shapes(sys, opt.max_coord);
    std::vector<Report> parts(shapes.size());
    parallel_for(shapes.size(), opt.jobs, [&](std::size_t task) {
      const ShapePtr& shape = shapes[task];
      Report& out = parts[task];
      Tally& a1 = tally(out, T + " axiom A1: string data of highest elements");
      Tally& a2 = tally(out, T + " axiom A2: e_i and f_i inverse");
      Tally& a3 = tally(out, T + " axiom A3: weight and string shifts");
      Tally& hi = tally(out, T + " highest: operators = partial sums");
      Tally& lr = tally(out, T + " component cardinality partition");
      const std::size_t r = sys->rank();
      std::string shape_name;
      for (const auto& f : shape->factors()) shape_name += "(" + format_weight(f) + ")";
      const auto elems = all_elements(shape);
      std::vector<std::size_t> n_phi(r, 0), n_eps(r, 0);
      for (const auto& x : elems) {
        const Weight wt = weight(x);
        for (std::size_t i = 0; i < r; ++i) {
          const int e = eps(x, i), p = phi(x, i);
          if (p > 0) ++n_phi[i];
          if (e > 0) ++n_eps[i];
          auto fx = lower(x, i);
          auto ex = raise(x, i);
          a2.check((fx.has_value() == (p > 0)) && (ex.has_value() == (e > 0)) &&
                       (!fx || raise(*fx, i) == x) && (!ex || lower(*ex, i) == x),
                   [&] { return T + " " + shape_name + ": e_i/f_i not inverse at " + format_entries(x.entries()); });
          bool ok = p - e == wt[i];
          if (fx) ok = ok && weight(*fx) == wt - sys->simple_root(i) && eps(*fx, i) == e + 1 && phi(*fx, i) == p - 1;
          a3.check(ok, [&] { return T + " " + shape_name + ": A3 fails at " + format_entries(x.entries()); });
        }
        const bool by_ops = is_highest(x);
        hi.check(by_ops == is_highest_by_partial_sums(x),
                 [&] { return T + " " + shape_name + ": criteria disagree at " + format_entries(x.entries()); });
        if (by_ops) {
          const Weight ew = eps_weight(x), pw = phi_weight(x);
          a1.check(ew.is_zero() && pw == wt && pw.is_dominant(),
                   [&] { return T + " " + shape_name + ": highest element with bad string data"; });
        }
      }
      bool bij = true;
      for (std::size_t i = 0; i < r; ++i) bij = bij && n_phi[i] == n_eps[i];
      a2.check(bij, [&] { return T + " " + shape_name + ": |{phi_i>0}| != |{eps_i>0}|"; });
      std::size_t total = 0;
      for (const auto& m : max_elements(shape)) total += component_members(m).size();
      lr.check(total == elems.size() && total == shape->cardinality(),
               [&] { return T + " " + shape_name + ": components do not partition the product"; });
    });
    for (const auto& p : parts) merge_into(report, p);
  }
  return report;
}

/// Lusztig's involution: involutive, weight rule, stays in its component,
/// agrees with the tabulated involution, lowest element has weight w0(lambda).
inline Report involution_suite(const GridOptions& opt) {
  Report report;
  for (const auto& spec : opt.types) {
    const auto sys = spec.make();
    const std::string T = spec.name();
    const auto shapes = ambient_shapes(sys, opt.max_coord);
    std::vector<Report> parts(shapes.size());
    parallel_for(shapes.size(), opt.jobs, [&](std::size_t task) {
      const ShapePtr& shape = shapes[task];
      Report& out = parts[task];
      Tally& inv = tally(out, T + " eta involutive");
      Tally& wr = tally(out, T + " wt(eta b) = w0 wt(b)");
      Tally& comp = tally(out, T + " eta preserves components");
      Tally& low = tally(out, T + " lowest element weight");
      Tally& tab = tally(out, T + " eta pointwise = tabulated");
      for (const auto& x : all_elements(shape)) {
        const TensorElement y = lusztig_involution(x);
        inv.check(lusztig_involution(y) == x, [&] { return T + ": eta not involutive at " + format_entries(x.entries()); });
        wr.check(weight(y) == sys->apply_w0(weight(x)),
                 [&] { return T + ": weight rule fails at " + format_entries(x.entries()); });
        comp.check(raise_to_highest(y).highest == raise_to_highest(x).highest,
                   [&] { return T + ": eta leaves the component at " + format_entries(x.entries()); });
      }
      for (const auto& m : max_elements(shape)) {
        const TensorElement c = lowest_of_component(m);
        low.check(weight(c) == sys->apply_w0(weight(m)) && is_lowest(c),
                  [&] { return T + ": lowest element of " + format_entries(m.entries()) + " is wrong"; });
        const ComponentTable table(m);
        bool ok = true;
        for (std::uint32_t u = 0; u < table.size() && ok; ++u)
          ok = table.find(lusztig_involution(table.element(u))) == table.involution()[u];
        tab.check(ok, [&] { return T + ": tabulated involution differs on " + format_entries(m.entries()); });
      }
    });
    for (const auto& p : parts) merge_into(report, p);
  }
  return report;
}

// ---- cactus group and coboundary relations ------------------------------

/// All elements of the blocked product with the given block weights.
inline std::vector<BlockedElement> blocked_elements(const std::shared_ptr<const RootSystem>& sys,
                                                    const std::vector<Block>& blocks) {
  std::vector<std::vector<std::vector<Weight>>> members;
  for (const auto& b : blocks) {
    const auto top = BlockedElement::tops(sys, {b});
    std::vector<std::vector<Weight>> ms;
    for (const auto& x : component_members(top.flat())) ms.push_back(x.entries());
    members.push_back(std::move(ms));
  }
  std::vector<BlockedElement> out;
  std::vector<std::size_t> pick(blocks.size(), 0);
  for (;;) {
    std::vector<Weight> flat;
    for (std::size_t k = 0; k < blocks.size(); ++k)
      flat.insert(flat.end(), members[k][pick[k]].begin(), members[k][pick[k]].end());
    out.push_back(BlockedElement::from_entries(sys, blocks, flat));
    std::size_t k = blocks.size();
    while (k > 0) {
      --k;
      if (++pick[k] < members[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (blocks.empty()) return out;
  }
}

/// All block sequences of length n drawn from `weights`.
inline std::vector<std::vector<Block>> block_sequences(const RootSystem& sys, const std::vector<Weight>& weights,
                                                       std::size_t n, bool single_factor) {
  std::vector<Block> pool;
  for (const auto& w : weights) pool.push_back(single_factor ? minuscule_block(sys, w) : make_block(sys, w));
  std::vector<std::vector<Block>> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<Block> seq;
    for (auto p : pick) seq.push_back(pool[p]);
    out.push_back(std::move(seq));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pick[k] < pool.size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

inline std::string blocks_name(const std::vector<Block>& blocks) {
  std::string s;
  for (const auto& b : blocks) s += "(" + format_weight(b.lambda) + ")";
  return s;
}

/// R1-R3 for s_{p,q} on 4-fold products of minuscule crystals, for each
/// backend; hk and jdt agree on every s_{p,q}; sigma_{p,r,q} direct equals
/// the composite s_{p,q} s_{r+1,q} s_{p,r}.
inline Report cactus_relations(const std::vector<TypeSpec>& types, unsigned jobs, std::size_t n_blocks = 4) {
  Report report;
  for (const auto& spec : types) {
    const auto sys = spec.make();
    const std::string T = spec.name();
    const auto seqs = block_sequences(*sys, sys->minuscule_fundamentals(), n_blocks, true);
    std::vector<Report> parts(seqs.size());
    parallel_for(seqs.size(), jobs, [&](std::size_t task) {
      Report& out = parts[task];
      const std::string where = T + " " + blocks_name(seqs[task]);
      const auto elems = blocked_elements(sys, seqs[task]);
      const std::size_t n = n_blocks;
      Tally& agree = tally(out, T + " s(p,q): hk = jdt");
      Tally& sig = tally(out, T + " sigma(p,r,q) direct = composite");
      for (Backend be : {Backend::hk, Backend::jdt}) {
        const std::string B(backend_name(be));
        Tally& r1 = tally(out, T + " R1 [" + B + "]");
        Tally& r2 = tally(out, T + " R2 [" + B + "]");
        Tally& r3 = tally(out, T + " R3 [" + B + "]");
        for (const auto& x : elems) {
          auto msg = [&](const char* what, std::size_t p, std::size_t q, std::size_t k, std::size_t l) {
            return where + " " + B + ": " + what + " fails for s(" + std::to_string(p + 1) + "," +
                   std::to_string(q + 1) + "), s(" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                   ") at " + format_blocked(x);
          };
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
              const BlockedElement s = cactus_s(x, p, q, be);
              r1.check(cactus_s(s, p, q, be) == x, [&] { return msg("R1", p, q, p, q); });
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                  if (q < k || l < p) {
                    r2.check(cactus_s(cactus_s(x, k, l, be), p, q, be) == cactus_s(s, k, l, be),
                             [&] { return msg("R2", p, q, k, l); });
                  } else if (p <= k && l <= q) {
                    const std::size_t i = p + q - l, j = p + q - k;
                    r3.check(cactus_s(cactus_s(x, k, l, be), p, q, be) == cactus_s(s, i, j, be),
                             [&] { return msg("R3", p, q, k, l); });
                  }
                }
              if (be == Backend::hk)
                agree.check(s == cactus_s(x, p, q, Backend::jdt), [&] { return msg("hk = jdt", p, q, p, q); });
            }
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t r = p; r < n; ++r)
              for (std::size_t q = r + 1; q < n; ++q)
                sig.check(sigma_prq(x, p, r, q, be) == sigma_prq_composite(x, p, r, q, be), [&] {
                  return where + " " + B + ": sigma(" + std::to_string(p + 1) + "," + std::to_string(r + 1) + "," +
                         std::to_string(q + 1) + ") direct != composite at " + format_blocked(x);
                });
        }
      }
    });
    for (const auto& p : parts) merge_into(report, p);
  }
  return report;
}

/// C3: sigma_{B(x)A,C} o (sigma_{A,B} (x) 1) = sigma_{A,C(x)B} o (1 (x) sigma_{B,C})
/// on triple products with block weights of coordinate sum <= max_coord.
inline Report coboundary_c3(const std::vector<TypeSpec>& types, int max_coord, unsigned jobs) {
  Report report;
  for (const auto& spec : types) {
    const auto sys = spec.make();
    const std::string T = spec.name();
    const auto seqs = block_sequences(*sys, dominant_weights(sys->rank(), max_coord), 3, false);
    std::vector<Report> parts(seqs.size());
    parallel_for(seqs.size(), jobs, [&](std::size_t task) {
      Report& out = parts[task];
      for (Backend be : {Backend::hk, Backend::jdt}) {
        Tally& c3 = tally(out, T + " C3 [" + std::string(backend_name(be)) + "]");
        for (const auto& x : blocked_elements(sys, seqs[task])) {
          const auto lhs = sigma_prq(sigma_prq(x, 0, 0, 1, be), 0, 1, 2, be);
          const auto rhs = sigma_prq(sigma_prq(x, 1, 1, 2, be), 0, 0, 2, be);
          c3.check(lhs == rhs, [&] { return T + " " + blocks_name(seqs[task]) + ": C3 fails at " + format_blocked(x); });
        }
      }
    });
    for (const auto& p : parts) merge_into(report, p);
  }
  return report;
}

/// sigma_123 sigma_124 sigma_113 sigma_112 = sigma_114 sigma_123 (1-based) on
/// 4-fold products with blocks drawn from `weights`.
inline Report four_block_composites(const TypeSpec& spec, const std::vector<Weight>& weights, unsigned jobs) {
  Report report;
  const auto sys = spec.make();
  const std::string T = spec.name();
  const auto seqs = block_sequences(*sys, weights, 4, false);
  std::vector<Report> parts(seqs.size());
  parallel_for(seqs.size(), jobs, [&](std::size_t task) {
    Report& out = parts[task];
    for (Backend be : {Backend::hk, Backend::jdt}) {
      Tally& t = tally(out, T + " four-block composites [" + std::string(backend_name(be)) + "]");
      for (const auto& x : blocked_elements(sys, seqs[task])) {
        auto y = sigma_prq(x, 0, 0, 1, be);
        y = sigma_prq(y, 0, 0, 2, be);
        y = sigma_prq(y, 0, 1, 3, be);
        y = sigma_prq(y, 0, 1, 2, be);
        const auto z = sigma_prq(sigma_prq(x, 0, 1, 2, be), 0, 0, 3, be);
        t.check(y == z, [&] { return T + " " + blocks_name(seqs[task]) + ": composites differ at " + format_blocked(x); });
      }
    }
  });
  for (const auto& p : parts) merge_into(report, p);
  return report;
}

/// All valid local-move inputs (kappa, h, v) with kappa of coordinate sum
/// <= max_kappa and h, v in minuscule orbits.
struct MoveInput {
  Weight kappa, h, v;
};

inline std::vector<MoveInput> local_move_inputs(const RootSystem& sys, int max_kappa) {
  std::vector<MoveInput> out;
  for (const auto& kappa : dominant_weights(sys.rank(), max_kappa))
    for (const auto& w1 : sys.minuscule_fundamentals())
      for (const auto& h : sys.weyl_orbit(w1)) {
        if (!(kappa + h).is_dominant()) continue;
        for (const auto& w2 : sys.minuscule_fundamentals())
          for (const auto& v : sys.weyl_orbit(w2))
            if ((kappa + h + v).is_dominant()) out.push_back({kappa, h, v});
      }
  return out;
}

/// local_move = its commutor expression (both backends).
inline Report local_move_suite(const std::vector<TypeSpec>& types, int max_kappa) {
  Report report;
  for (const auto& spec : types) {
    const auto sys = spec.make();
    const std::string T = spec.name();
    for (Backend be : {Backend::hk, Backend::jdt}) {
      Tally& t = tally(report, T + " local move = commutor composite [" + std::string(backend_name(be)) + "]");
      for (const auto& in : local_move_inputs(*sys, max_kappa)) {
        const LocalMove a = local_move(*sys, in.kappa, in.h, in.v);
        const LocalMove b = local_move_as_commutor(sys, in.kappa, in.h, in.v, be);
        t.check(a == b, [&] {
          return T + ": kappa=" + format_weight(in.kappa) + " h=" + format_weight(in.h) + " v=" + format_weight(in.v) +
                 " move gives (" + format_weight(a.v_out) + "; " + format_weight(a.h_out) + "), commutor gives (" +
                 format_weight(b.v_out) + "; " + format_weight(b.h_out) + ")";
        });
      }
    }
  }
  return report;
}

/// Every cactus-group and coboundary check on small A1/A2 products.
inline Report cactus_suite(const GridOptions& opt) {
  Report report;
  merge_into(report, cactus_relations(opt.types, opt.jobs));
  merge_into(report, coboundary_c3(opt.types, std::min(opt.max_coord, 2), opt.jobs));
  for (const auto& spec : opt.types) {
    const auto sys = spec.make();
    std::vector<Weight> ws;
    for (const auto& w : dominant_weights(sys->rank(), 2))
      if (!w.is_zero() && (w.coordinate_sum() == 1 || sys->rank() == 1 || w == Weight(std::vector<int>(sys->rank(), 1))))
        ws.push_back(w);
    merge_into(report, four_block_composites(spec, ws, opt.jobs));
  }
  return report;
}

// ---- decomposition-independence probe -----------------------------------

struct ProbeFinding {
  std::string type;
  Weight lambda;
  Weight partner;
  std::string decomposition;
  std::uint64_t elements = 0;
  std::uint64_t disagreements = 0;
};

/// Crystal isomorphism between two tabulated copies of B_lambda: the member
/// reached by a lowering path from the top maps to the member reached by the
/// same path.
inline std::vector<std::uint32_t> table_isomorphism(const ComponentTable& from, const ComponentTable& to) {
  detail::require(from.size() == to.size() && from.highest_weight() == to.highest_weight(),
                  "components are not isomorphic");
  std::vector<std::uint32_t> iso(from.size(), 0);
  for (std::uint32_t u = 1; u < from.size(); ++u) {
    std::size_t i = 0;
    while (i < from.rank() && from.eps(u, i) == 0) ++i;
    const std::int32_t img = to.lower(iso[static_cast<std::uint32_t>(from.raise(u, i))], i);
    detail::ensure(img >= 0, "raising paths do not transport between decompositions");
    iso[u] = static_cast<std::uint32_t>(img);
  }
  return iso;
}

/// For weights with several minuscule decompositions, compare the jdt
/// commutor across decompositions of pi' after identifying elements through
/// canonical raising paths. Disagreements are findings, not errors.
inline std::vector<ProbeFinding> decomposition_probe(const std::vector<TypeSpec>& types, int max_coord,
                                                     std::size_t max_weights) {
  std::vector<ProbeFinding> out;
  for (const auto& spec : types) {
    const auto sys = spec.make();
    std::size_t used = 0;
    const auto partners = dominant_weights(sys->rank(), 2);
    for (const auto& lambda : dominant_weights(sys->rank(), max_coord)) {
      if (used >= max_weights) break;
      if (lambda.is_zero()) continue;
      const auto base = minuscule_decomposition(*sys, lambda);
      auto alts = minuscule_decompositions(*sys, lambda, base.parts.size() + 2, 6);
      alts.erase(std::remove(alts.begin(), alts.end(), base), alts.end());
      if (alts.empty()) continue;
      ++used;
      const Block b0 = make_block(*sys, base);
      const ComponentTable A0(BlockedElement::tops(sys, {b0}).flat());
      for (const auto& alt : alts) {
        const Block b1 = make_block(*sys, alt);
        const ComponentTable A1(BlockedElement::tops(sys, {b1}).flat());
        const auto iso = table_isomorphism(A0, A1);
        for (const auto& mu : partners) {
          const Block bm = make_block(*sys, mu);
          const ComponentTable B(BlockedElement::tops(sys, {bm}).flat());
          const CommutorSweep s0(A0, B, Verify::Fast), s1(A1, B, Verify::Fast);
          ProbeFinding f{spec.name(), lambda, mu, format_entries(alt.parts), 0, 0};
          for (std::uint32_t u = 0; u < A0.size(); ++u)
            for (std::uint32_t v = 0; v < B.size(); ++v) {
              const std::uint32_t y0 = s0.jdt_ab(s0.ab(u, v));
              const std::uint32_t y1 = s1.jdt_ab(s1.ab(iso[u], v));
              const std::uint32_t v0 = y0 / static_cast<std::uint32_t>(A0.size());
              const std::uint32_t u0 = y0 % static_cast<std::uint32_t>(A0.size());
              ++f.elements;
              if (s1.ba(v0, iso[u0]) != y1) ++f.disagreements;
            }
          out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

}  // namespace crystal::checks
