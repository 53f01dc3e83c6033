#include "helpers.hpp"

#include <set>

using namespace crystal;
using th::eps_A;
using th::W;

namespace {

// A2 epsilons
const Weight e1 = eps_A(2, 1), e2 = eps_A(2, 2), e3 = eps_A(2, 3);

}  // namespace

TEST_CASE("elements validate their entries", "[tensor]") {
  auto a2 = th::A(2);
  auto shape = make_shape(a2, {W({1, 0}), W({1, 0})});
  CHECK_NOTHROW(TensorElement(shape, std::vector<Weight>{e1, e2}));
  CHECK_THROWS_AS(TensorElement(shape, std::vector<Weight>{e1, W({0, 1})}), InvalidInput);
  CHECK_THROWS_AS(TensorElement(shape, std::vector<Weight>{e1}), InvalidInput);
  CHECK_THROWS_AS(make_shape(a2, {W({1, 1})}), UnsupportedFactor);
  CHECK_THROWS_AS(make_shape(th::B(2), {W({1, 0})}), UnsupportedFactor);
  CHECK_THROWS_AS(make_shape(a2, {W({-1, 1})}), InvalidInput);
}

TEST_CASE("weights and string lengths", "[tensor]") {
  auto a2 = th::A(2);
  CHECK(weight(th::elem(a2, {e1, e1, e2})) == W({1, 1}));
  CHECK(weight(TensorElement(make_shape(a2, {}), {})) == W({0, 0}));
  CHECK(weight(th::elem(a2, {W({0, -1}), W({-1, 1})})) == W({-1, 0}));

  CHECK(string_data(th::elem(a2, {e1}), 0) == StringData{0, 1});
  CHECK(string_data(th::elem(a2, {e1, e2}), 0) == StringData{0, 0});
  CHECK(string_data(th::elem(a2, {e1, e1}), 0) == StringData{0, 2});

  auto a1 = th::A(1);
  CHECK(string_data(th::elem(a1, {W({-1}), W({1})}), 0) == StringData{1, 1});
  // ((1),(-1)) is the highest element of weight 0
  CHECK(string_data(th::elem(a1, {W({1}), W({-1})}), 0) == StringData{0, 0});
}

TEST_CASE("root operators", "[tensor]") {
  auto a2 = th::A(2);
  auto x = th::elem(a2, {e1});
  REQUIRE(lower(x, 0).has_value());
  CHECK(lower(x, 0)->entries() == std::vector<Weight>{W({-1, 1})});
  CHECK_FALSE(lower(x, 1).has_value());

  auto a1 = th::A(1);
  auto y = lower(th::elem(a1, {W({1}), W({1})}), 0);
  REQUIRE(y.has_value());
  // the leftmost unmatched '+' is in the first factor
  CHECK(y->entries() == std::vector<Weight>{W({-1}), W({1})});
  CHECK_THROWS_AS(lower(x, 2), std::out_of_range);
}

TEST_CASE("operators agree with the signature rule", "[tensor]") {
  struct Case {
    std::shared_ptr<const RootSystem> s;
    std::vector<Weight> factors;
  };
  const std::vector<Case> cases = {
      {th::A(1), {W({1}), W({1}), W({1}), W({1})}},
      {th::A(2), {W({1, 0}), W({0, 1}), W({1, 0})}},
      {th::A(3), {W({0, 1, 0}), W({1, 0, 0}), W({0, 0, 1})}},
      {th::B(2), {W({0, 1}), W({0, 1}), W({0, 1})}},
      {th::C(3), {W({1, 0, 0}), W({1, 0, 0}), W({1, 0, 0})}},
      {th::D(4), {W({1, 0, 0, 0}), W({0, 0, 1, 0}), W({0, 0, 0, 1})}},
      {th::E(6), {W({1, 0, 0, 0, 0, 0}), W({0, 0, 0, 0, 0, 1})}},
  };
  for (const auto& c : cases) {
    INFO(c.s->name());
    auto shape = make_shape(c.s, c.factors);
    for (const auto& t : th::all_tuples(*c.s, c.factors)) {
      const TensorElement x(shape, t);
      bool top = true;
      for (std::size_t i = 0; i < c.s->rank(); ++i) {
        const auto sig = th::signature(*c.s, t, i);
        REQUIRE(eps(x, i) == sig.eps);
        REQUIRE(phi(x, i) == sig.phi);
        auto up = raise(x, i);
        auto down = lower(x, i);
        REQUIRE(up.has_value() == (sig.eps > 0));
        REQUIRE(down.has_value() == (sig.phi > 0));
        if (up) {
          auto u = t;
          u[sig.raise_at] = c.s->simple_reflection(i, u[sig.raise_at]);
          REQUIRE(up->entries() == u);
        }
        if (down) {
          auto u = t;
          u[sig.lower_at] = c.s->simple_reflection(i, u[sig.lower_at]);
          REQUIRE(down->entries() == u);
        }
        top = top && sig.eps == 0;
      }
      REQUIRE(is_highest(x) == top);
      REQUIRE(is_highest_by_partial_sums(x) == top);
    }
  }
}

TEST_CASE("highest elements", "[tensor]") {
  auto a2 = th::A(2);
  CHECK(is_highest(th::elem(a2, {e1, e1, e2})));
  CHECK_FALSE(is_highest(th::elem(a2, {e2, e1})));
  CHECK_FALSE(is_highest_by_partial_sums(th::elem(a2, {e1, e3})));

  auto shape = make_shape(a2, {W({1, 0}), W({1, 0})});
  const auto m = max_elements(shape);
  REQUIRE(m.size() == 2);
  CHECK(m[0].entries() == std::vector<Weight>{e1, e2});
  CHECK(m[1].entries() == std::vector<Weight>{e1, e1});
  CHECK(max_elements(make_shape(th::A(1), {W({1})})).size() == 1);

  // brute force: filter all tuples
  for (auto s : {th::A(3), th::B(3), th::D(4)}) {
    std::vector<Weight> factors;
    for (int k = 0; k < 3; ++k) factors.push_back(s->minuscule_fundamentals()[k % s->minuscule_fundamentals().size()]);
    auto sh = make_shape(s, factors);
    std::set<std::vector<Weight>> brute;
    for (const auto& t : th::all_tuples(*s, factors)) {
      bool top = true;
      for (std::size_t i = 0; i < s->rank(); ++i) top = top && th::signature(*s, t, i).eps == 0;
      if (top) brute.insert(t);
    }
    std::set<std::vector<Weight>> got;
    for (const auto& x : max_elements(sh)) got.insert(x.entries());
    CHECK(got == brute);
  }

  // the golden pair is a max element of B_(1,1) (x) B_(2,0)
  auto big = make_shape(a2, {W({1, 0}), W({1, 0}), W({1, 0}), W({1, 0}), W({1, 0})});
  bool found = false;
  for (const auto& x : max_elements(big)) found = found || x.entries() == std::vector<Weight>{e1, e1, e2, e3, e2};
  CHECK(found);
}

TEST_CASE("raising to the highest element", "[tensor]") {
  auto a2 = th::A(2);
  auto top = th::elem(a2, {e1, e1});
  auto r0 = raise_to_highest(top);
  CHECK(r0.highest == top);
  CHECK(r0.path.empty());

  auto r1 = raise_to_highest(th::elem(a2, {e2, e1}));
  CHECK(r1.highest.entries() == std::vector<Weight>{e1, e1});
  CHECK(r1.path == std::vector<std::size_t>{0});

  // (e3, e2) has weight (-1,0); 2e1 - (e3 + e2) = 2 alpha_1 + alpha_2
  auto r2 = raise_to_highest(th::elem(a2, {e3, e2}));
  CHECK(r2.highest.entries() == std::vector<Weight>{e1, e1});
  CHECK(r2.path.size() == 3);
  CHECK(lower_along(r2.highest, r2.path)->entries() == std::vector<Weight>{e3, e2});
}

TEST_CASE("lowest elements and Lusztig's involution", "[tensor]") {
  auto a2 = th::A(2);
  CHECK(lowest_of_component(th::elem(a2, {e1, e1, e2})).entries() == std::vector<Weight>{e3, e2, e3});
  CHECK(lowest_of_component(th::elem(a2, {e1, e1})).entries() == std::vector<Weight>{e3, e3});
  CHECK(lowest_of_component(th::elem(th::A(1), {W({1})})).entries() == std::vector<Weight>{W({-1})});

  CHECK(lusztig_involution(th::elem(a2, {e1, e1, e2})).entries() == std::vector<Weight>{e3, e2, e3});
  CHECK(lusztig_involution(th::elem(a2, {e3, e2})).entries() == std::vector<Weight>{e2, e1});

  for (const auto& s : {th::A(2), th::B(2), th::C(3), th::D(4)}) {
    std::vector<Weight> factors(3, s->minuscule_fundamentals().front());
    auto sh = make_shape(s, factors);
    for (const auto& m : max_elements(sh)) {
      CHECK(lusztig_involution(m) == lowest_of_component(m));
      CHECK(weight(lowest_of_component(m)) == s->apply_w0(weight(m)));
    }
    std::set<std::vector<std::uint32_t>> image;
    const auto all = all_elements(sh);
    for (const auto& x : all) {
      const auto y = lusztig_involution(x);
      CHECK(lusztig_involution(y) == x);
      CHECK(weight(y) == s->apply_w0(weight(x)));
      // eta intertwines e_i and f_{i*}
      for (std::size_t i = 0; i < s->rank(); ++i) {
        auto f = lower(x, i);
        auto e = raise(y, s->star(i));
        REQUIRE(f.has_value() == e.has_value());
        if (f) CHECK(lusztig_involution(*f) == *e);
      }
      image.insert(th::idx(y));
    }
    CHECK(image.size() == all.size());
  }
}

TEST_CASE("embedding of highest weight crystals", "[tensor]") {
  auto a2 = th::A(2);
  auto e = embed_highest(a2, W({1, 1}));
  CHECK(e.shape->factors() == std::vector<Weight>{W({1, 0}), W({1, 0}), W({1, 0})});
  CHECK(e.highest.entries() == std::vector<Weight>{e1, e1, e2});
  auto f = embed_highest(a2, W({2, 0}));
  CHECK(f.highest.entries() == std::vector<Weight>{e1, e1});
  auto z = embed_highest(a2, W({0, 0}));
  CHECK(z.shape->empty());
  CHECK(z.highest.empty());
}

TEST_CASE("component sizes follow the Weyl dimension formula", "[tensor]") {
  auto a2 = th::A(2);
  CHECK(component_members(th::elem(a2, {e1})).size() == 3);
  CHECK(component_members(th::elem(a2, {e1, e1})).size() == 6);
  CHECK(component_members(th::elem(a2, {e1, e2})).size() == 3);

  // known dimensions anchor the formula itself
  CHECK(th::weyl_dimension(*a2, W({1, 1})) == 8);
  CHECK(th::weyl_dimension(*th::B(2), W({1, 0})) == 5);
  CHECK(th::weyl_dimension(*th::B(2), W({0, 1})) == 4);
  CHECK(th::weyl_dimension(*th::D(4), W({0, 1, 0, 0})) == 28);
  CHECK(th::weyl_dimension(*th::E(6), W({0, 1, 0, 0, 0, 0})) == 78);
  CHECK(th::weyl_dimension(*th::E(7), W({1, 0, 0, 0, 0, 0, 0})) == 133);

  for (const auto& s : {th::A(1), th::A(2), th::A(3), th::B(2), th::B(3), th::C(2), th::C(3), th::D(4)}) {
    for (const auto& lambda : checks::dominant_weights(s->rank(), 2)) {
      INFO(s->name() << " " << format_weight(lambda));
      auto e = embed_highest(s, lambda);
      CHECK(static_cast<long long>(component_members(e.highest).size()) == th::weyl_dimension(*s, lambda));
    }
  }
  auto e6 = th::E(6);
  for (const auto& lambda : {W({1, 0, 0, 0, 0, 0}), W({0, 1, 0, 0, 0, 0}), W({1, 0, 0, 0, 0, 1})}) {
    auto e = embed_highest(e6, lambda);
    CHECK(static_cast<long long>(component_members(e.highest).size()) == th::weyl_dimension(*e6, lambda));
  }
}

TEST_CASE("components partition the product", "[tensor]") {
  for (const auto& s : {th::A(2), th::B(2), th::C(2), th::D(4)}) {
    std::vector<Weight> factors;
    for (int k = 0; k < 3; ++k) factors.push_back(s->minuscule_fundamentals()[k % s->minuscule_fundamentals().size()]);
    auto sh = make_shape(s, factors);
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t total = 0;
    for (const auto& m : max_elements(sh)) {
      const auto members = component_members(m);
      total += members.size();
      CHECK(static_cast<long long>(members.size()) == th::weyl_dimension(*s, weight(m)));
      for (const auto& x : members) {
        CHECK(seen.insert(th::idx(x)).second);
        CHECK(raise_to_highest(x).highest == m);
      }
    }
    CHECK(total == sh->cardinality());
  }
}

TEST_CASE("crystal order", "[tensor]") {
  auto a2 = th::A(2);
  auto x = th::elem(a2, {e1});
  CHECK(crystal_leq(x, x));
  CHECK(crystal_leq(th::elem(a2, {e2}), th::elem(a2, {e1})));
  CHECK_FALSE(crystal_leq(th::elem(a2, {e1}), th::elem(a2, {e2})));
  // within a component: every member lies below the highest element
  auto top = th::elem(a2, {e1, e1, e2});
  for (const auto& m : component_members(top)) {
    CHECK(crystal_leq(m, top));
    CHECK(crystal_leq(lowest_of_component(top), m));
  }
}
