#include "helpers.hpp"

using namespace crystal;
using th::W;

namespace {

ComponentTable table(const std::shared_ptr<const RootSystem>& s, const Weight& lambda) {
  return ComponentTable(BlockedElement::tops(s, {make_block(*s, lambda)}).flat());
}

}  // namespace

TEST_CASE("component tables", "[sweep]") {
  for (const auto& s : {th::A(2), th::B(2), th::C(3), th::D(4)}) {
    for (const auto& lambda : checks::dominant_weights(s->rank(), 2)) {
      const ComponentTable t = table(s, lambda);
      INFO(s->name() << " " << format_weight(lambda));
      CHECK(static_cast<long long>(t.size()) == th::weyl_dimension(*s, lambda));
      CHECK(t.highest_weight() == lambda);
      for (std::uint32_t u = 0; u < t.size(); ++u) {
        const TensorElement x = t.element(u);
        REQUIRE(t.find(x) == u);
        REQUIRE(t.find(t.entries(u)) == u);
        REQUIRE(t.find(lusztig_involution(x)) == t.involution()[u]);
        for (std::size_t i = 0; i < s->rank(); ++i) {
          REQUIRE(t.eps(u, i) == eps(x, i));
          REQUIRE(t.phi(u, i) == phi(x, i));
          auto d = lower(x, i);
          REQUIRE((t.lower(u, i) >= 0) == d.has_value());
          if (d) REQUIRE(t.element(static_cast<std::uint32_t>(t.lower(u, i))) == *d);
        }
      }
      CHECK(t.element(t.lowest()) == lowest_of_component(t.element(0)));
    }
  }
}

TEST_CASE("tabulated order matches the pointwise order", "[sweep]") {
  auto a2 = th::A(2);
  const ComponentTable t = table(a2, W({1, 1}));
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b) CHECK(t.leq(a, b) == crystal_leq(t.element(a), t.element(b)));
}

TEST_CASE("table pairs follow the tensor rule", "[sweep]") {
  auto b2 = th::B(2);
  const ComponentTable x = table(b2, W({1, 0})), y = table(b2, W({0, 1}));
  const detail::TablePair p(x, y);
  for (std::uint32_t c = 0; c < p.size(); ++c) {
    const TensorElement e = concat(x.element(p.first(c)), y.element(p.second(c)));
    for (std::size_t i = 0; i < 2; ++i) {
      REQUIRE(p.eps(c, i) == eps(e, i));
      REQUIRE(p.phi(c, i) == phi(e, i));
      auto up = raise(e, i);
      REQUIRE((p.raise(c, i) >= 0) == up.has_value());
      if (up) {
        const auto r = static_cast<std::uint32_t>(p.raise(c, i));
        REQUIRE(concat(x.element(p.first(r)), y.element(p.second(r))) == *up);
      }
    }
  }
}

TEST_CASE("sweep equals the pointwise commutors", "[sweep]") {
  for (const auto& s : {th::A(2), th::B(2), th::C(2)}) {
    const auto grid = checks::dominant_weights(s->rank(), 2);
    for (const auto& l : grid)
      for (const auto& r : grid) {
        const Block bl = make_block(*s, l), br = make_block(*s, r);
        const ComponentTable A = table(s, l), B = table(s, r);
        const CommutorSweep sw(A, B);
        for (std::uint32_t u = 0; u < A.size(); ++u)
          for (std::uint32_t v = 0; v < B.size(); ++v) {
            std::vector<Weight> flat = A.entries(u);
            for (const auto& w : B.entries(v)) flat.push_back(w);
            const auto x = BlockedElement::from_entries(s, {bl, br}, flat);
            const auto y = commutor(x, Backend::hk);
            const auto code = sw.ba(*B.find(y.part(0)), *A.find(y.part(1)));
            REQUIRE(sw.jdt_ab(sw.ab(u, v)) == code);
            REQUIRE(sw.hk_ab(sw.ab(u, v)) == code);
            REQUIRE(sw.hk_alt_ab(sw.ab(u, v)) == code);
            const auto z = lusztig_involution(x.flat());
            REQUIRE(sw.eta_ab(sw.ab(u, v)) == sw.ab(*A.find(z.slice(0, bl.length())),
                                                     *B.find(z.slice(bl.length(), z.size()))));
          }
      }
  }
}

TEST_CASE("property suites pass on a small grid", "[sweep]") {
  checks::GridOptions opt;
  opt.types = checks::parse_types("A1,A2,B2");
  opt.max_coord = 2;
  opt.jobs = 2;
  opt.pointwise_per_pair = 5;
  CHECK(checks::all_ok(checks::comagree_suite(opt)));
  CHECK(checks::all_ok(checks::axioms_suite(opt)));
  CHECK(checks::all_ok(checks::involution_suite(opt)));
  CHECK(checks::all_ok(checks::minuscule_left_suite(opt.types, 2)));
  CHECK(checks::all_ok(checks::cactus_relations(checks::parse_types("A1"), 2)));
  CHECK(checks::all_ok(checks::coboundary_c3(checks::parse_types("A1"), 2, 2)));
  CHECK_THROWS_AS(checks::parse_types("A0"), InvalidInput);
  CHECK_THROWS_AS(checks::parse_types("Q3"), InvalidInput);
}

TEST_CASE("tallies record failures", "[sweep]") {
  checks::Report r;
  auto& t = checks::tally(r, "x");
  t.check(true, [] { return std::string("unused"); });
  t.check(false, [] { return std::string("bad"); });
  checks::tally(r, "y").pass();
  CHECK(t.cases == 2);
  CHECK(t.failures == 1);
  CHECK(t.examples == std::vector<std::string>{"bad"});
  CHECK_FALSE(checks::all_ok(r));
  checks::Report merged;
  checks::merge_into(merged, r);
  checks::merge_into(merged, r);
  CHECK(checks::tally(merged, "x").cases == 4);
}

TEST_CASE("worker pool propagates exceptions", "[sweep]") {
  std::vector<int> hit(100, 0);
  checks::parallel_for(100, 4, [&](std::size_t i) { hit[i] = 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 100);
  CHECK_THROWS_AS(checks::parallel_for(10, 3,
                                       [](std::size_t i) {
                                         if (i == 7) throw InvalidInput("boom");
                                       }),
                  InvalidInput);
}

TEST_CASE("decomposition probe", "[sweep]") {
  const auto findings = checks::decomposition_probe(checks::parse_types("A2"), 2, 2);
  CHECK_FALSE(findings.empty());
  for (const auto& f : findings) CHECK(f.elements > 0);
  auto a2 = th::A(2);
  const ComponentTable t = table(a2, W({1, 1}));
  const auto iso = checks::table_isomorphism(t, t);
  for (std::uint32_t u = 0; u < t.size(); ++u) CHECK(iso[u] == u);
}
