#include "helpers.hpp"

#include <set>

using namespace crystal;
using th::W;

namespace {

struct Expected {
  CartanType type;
  int rank;
  std::size_t roots;
};

const std::vector<Expected> kSystems = {
    {CartanType::A, 1, 2},  {CartanType::A, 2, 6},  {CartanType::A, 3, 12}, {CartanType::A, 5, 30},
    {CartanType::B, 2, 8},  {CartanType::B, 3, 18}, {CartanType::C, 2, 8},  {CartanType::C, 3, 18},
    {CartanType::C, 4, 32}, {CartanType::D, 3, 12}, {CartanType::D, 4, 24}, {CartanType::D, 5, 40},
    {CartanType::E, 6, 72}, {CartanType::E, 7, 126},
};

}  // namespace

TEST_CASE("Cartan matrices", "[root_system]") {
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    const std::size_t r = s->rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) {
          CHECK(s->cartan(i, j) == 2);
          continue;
        }
        CHECK(s->cartan(i, j) <= 0);
        CHECK(s->cartan(i, j) >= -3);
        CHECK((s->cartan(i, j) == 0) == (s->cartan(j, i) == 0));
      }
  }
  auto b2 = th::B(2);
  // alpha_2 short: <alpha_1, alpha_2^vee> = -2
  CHECK(b2->cartan(1, 0) == -2);
  CHECK(b2->cartan(0, 1) == -1);
  auto c2 = th::C(2);
  CHECK(c2->cartan(0, 1) == -2);
  CHECK(c2->cartan(1, 0) == -1);
  // D4: node 2 (1-based) is the branch point
  auto d4 = th::D(4);
  for (std::size_t j : {0u, 2u, 3u}) CHECK(d4->cartan(1, j) == -1);
  CHECK(d4->cartan(2, 3) == 0);
}

TEST_CASE("unsupported systems are rejected", "[root_system]") {
  CHECK_THROWS_AS(RootSystem::make(CartanType::A, 0), InvalidInput);
  CHECK_THROWS_AS(RootSystem::make(CartanType::B, 1), InvalidInput);
  CHECK_THROWS_AS(RootSystem::make(CartanType::C, 1), InvalidInput);
  CHECK_THROWS_AS(RootSystem::make(CartanType::D, 2), InvalidInput);
  CHECK_THROWS_AS(RootSystem::make(CartanType::E, 5), InvalidInput);
  CHECK_THROWS_AS(RootSystem::make(CartanType::E, 8), InvalidInput);
}

TEST_CASE("root counts and longest element", "[root_system]") {
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    INFO(s->name());
    CHECK(s->roots().size() == e.roots);
    CHECK(s->positive_roots().size() == e.roots / 2);
    CHECK(s->positive_coroots().size() == e.roots / 2);
    CHECK(s->longest_element_word().size() == e.roots / 2);
    Weight rho = s->rho();
    for (auto i : s->longest_element_word()) rho = s->simple_reflection(i, rho);
    CHECK(rho == -s->rho());
    CHECK(s->apply_w0(s->rho()) == -s->rho());
  }
  CHECK(th::A(1)->longest_element_word() == std::vector<std::size_t>{0});
  CHECK(th::A(2)->longest_element_word().size() == 3);
  CHECK(th::B(2)->longest_element_word().size() == 4);
}

TEST_CASE("pairing and simple reflections", "[root_system]") {
  auto a2 = th::A(2);
  CHECK(a2->pairing(W({1, 0}), 0) == 1);
  CHECK(a2->pairing(W({0, 0}), 1) == 0);
  CHECK(a2->pairing(W({-1, 1}), 0) == -1);
  CHECK(a2->simple_reflection(0, W({1, 0})) == W({-1, 1}));
  CHECK(a2->simple_reflection(1, W({1, 0})) == W({1, 0}));
  CHECK(th::A(1)->simple_reflection(0, W({1})) == W({-1}));
  CHECK_THROWS_AS(a2->pairing(W({1, 0}), 2), std::out_of_range);
  CHECK_THROWS_AS(a2->pairing(W({1, 0, 0}), 0), InvalidInput);
  // s_i is an involution and alpha_i pairs to 2 with alpha_i^vee
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    for (std::size_t i = 0; i < s->rank(); ++i) {
      CHECK(s->pairing(s->simple_root(i), i) == 2);
      const Weight mu = s->rho() + s->simple_root(0);
      CHECK(s->simple_reflection(i, s->simple_reflection(i, mu)) == mu);
    }
  }
}

TEST_CASE("dominant representative and orbits", "[root_system]") {
  auto a2 = th::A(2);
  CHECK(a2->dominant(W({0, -1})) == W({1, 0}));
  CHECK(a2->dominant(W({1, 1})) == W({1, 1}));
  CHECK(a2->dominant(W({1, -1})) == W({0, 1}));

  auto orbit = a2->weyl_orbit(W({1, 0}));
  CHECK(std::set<Weight>(orbit.begin(), orbit.end()) == std::set<Weight>{W({1, 0}), W({-1, 1}), W({0, -1})});
  CHECK(th::A(1)->weyl_orbit(W({0})) == std::vector<Weight>{W({0})});
  CHECK(th::A(3)->weyl_orbit(W({1, 0, 0})).size() == 4);

  // minuscule orbit sizes: binomials in type A, 2^r spin for B, 2r for C and
  // the D vector, 27 and 56 for E6 and E7
  CHECK(th::A(4)->weyl_orbit(W({0, 1, 0, 0})).size() == 10);
  CHECK(th::B(3)->weyl_orbit(W({0, 0, 1})).size() == 8);
  CHECK(th::C(3)->weyl_orbit(W({1, 0, 0})).size() == 6);
  CHECK(th::D(5)->weyl_orbit(W({1, 0, 0, 0, 0})).size() == 10);
  CHECK(th::D(5)->weyl_orbit(W({0, 0, 0, 0, 1})).size() == 16);
  CHECK(th::E(6)->weyl_orbit(W({1, 0, 0, 0, 0, 0})).size() == 27);
  CHECK(th::E(7)->weyl_orbit(W({0, 0, 0, 0, 0, 0, 1})).size() == 56);
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    const auto o = s->weyl_orbit(s->rho());
    for (const auto& w : o) CHECK(s->dominant(w) == s->rho());
  }
}

TEST_CASE("minuscule and quasi-minuscule weights", "[root_system]") {
  auto a2 = th::A(2);
  CHECK(a2->is_minuscule(W({1, 0})));
  CHECK(a2->is_minuscule(W({0, 0})));
  CHECK_FALSE(a2->is_minuscule(W({1, 1})));
  auto b2 = th::B(2);
  CHECK_FALSE(b2->is_minuscule(W({1, 0})));
  CHECK(b2->is_quasi_minuscule(W({1, 0})));
  CHECK_THROWS_AS(b2->minuscule_crystal(W({1, 0})), UnsupportedFactor);

  auto count = [](const std::shared_ptr<const RootSystem>& s) { return s->minuscule_fundamentals().size(); };
  CHECK(count(th::A(4)) == 4);
  CHECK(count(th::B(3)) == 1);
  CHECK(count(th::C(3)) == 1);
  CHECK(count(th::D(5)) == 3);
  CHECK(count(th::E(6)) == 2);
  CHECK(count(th::E(7)) == 1);
  CHECK(th::B(3)->minuscule_fundamentals().front() == W({0, 0, 1}));
  CHECK(th::C(3)->minuscule_fundamentals().front() == W({1, 0, 0}));
}

TEST_CASE("star involution", "[root_system]") {
  CHECK(th::A(2)->star(0) == 1);
  CHECK(th::A(1)->star(0) == 0);
  auto d4 = th::D(4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d4->star(i) == i);
  auto d5 = th::D(5);
  CHECK(d5->star(3) == 4);
  CHECK(d5->star(0) == 0);
  const std::vector<std::size_t> e6 = {5, 1, 4, 3, 2, 0};
  for (std::size_t i = 0; i < 6; ++i) CHECK(th::E(6)->star(i) == e6[i]);
  for (std::size_t i = 0; i < 7; ++i) CHECK(th::E(7)->star(i) == i);
  // -w0(alpha_i) = alpha_{i*}
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    for (std::size_t i = 0; i < s->rank(); ++i) CHECK(-s->apply_w0(s->simple_root(i)) == s->simple_root(s->star(i)));
  }
  auto a2 = th::A(2);
  CHECK(a2->apply_w0(W({1, 0})) == W({0, -1}));
  CHECK(th::A(1)->apply_w0(W({1})) == W({-1}));
  CHECK(a2->apply_w0(W({1, 1})) == W({-1, -1}));
}

TEST_CASE("root lattice order", "[root_system]") {
  auto a2 = th::A(2);
  CHECK(a2->root_leq(W({-1, 1}), W({1, 0})));
  CHECK_FALSE(a2->root_leq(W({1, 0}), W({-1, 1})));
  CHECK_FALSE(a2->root_leq(W({0, 1}), W({1, 0})));  // different cosets
  auto c = a2->root_coordinates(a2->simple_root(0) + a2->simple_root(1));
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<long long>{1, 1});
}

TEST_CASE("minuscule decompositions", "[root_system]") {
  auto a2 = th::A(2);
  CHECK(minuscule_decomposition(*a2, W({1, 1})).parts == std::vector<Weight>{W({1, 0}), W({1, 0}), W({-1, 1})});
  CHECK(minuscule_decomposition(*a2, W({2, 0})).parts == std::vector<Weight>{W({1, 0}), W({1, 0})});
  CHECK(minuscule_decomposition(*a2, W({0, 0})).parts.empty());
  auto b2 = minuscule_decomposition(*th::B(2), W({1, 0}));
  CHECK(b2.parts.size() == 2);
  CHECK(b2.parts.front().is_dominant());
  CHECK_THROWS_AS(minuscule_decomposition(*a2, W({1, -1})), InvalidInput);

  // decomposition invariants over many weights of every supported family
  for (const auto& e : kSystems) {
    auto s = RootSystem::make(e.type, e.rank);
    if (s->rank() > 5) continue;
    for (const auto& lambda : checks::dominant_weights(s->rank(), 3)) {
      const auto d = minuscule_decomposition(*s, lambda);
      Weight acc = s->zero();
      for (std::size_t k = 0; k < d.parts.size(); ++k) {
        CHECK(s->is_minuscule(d.parts[k]));
        CHECK(s->dominant(d.parts[k]) == d.dominant_orbits[k]);
        acc += d.parts[k];
        CHECK(acc.is_dominant());
      }
      CHECK(acc == lambda);
    }
  }
  for (const auto& lambda : checks::dominant_weights(6, 2)) {
    const auto d = minuscule_decomposition(*th::E(6), lambda);
    Weight acc(6);
    for (const auto& p : d.parts) acc += p;
    CHECK(acc == lambda);
  }

  const auto all = minuscule_decompositions(*a2, W({1, 1}), 4, 50);
  CHECK(all.size() > 1);
  std::set<std::vector<Weight>> distinct;
  for (const auto& d : all) {
    distinct.insert(d.parts);
    Weight acc = a2->zero();
    for (const auto& p : d.parts) {
      acc += p;
      CHECK(acc.is_dominant());
    }
    CHECK(acc == W({1, 1}));
  }
  CHECK(distinct.size() == all.size());
}
