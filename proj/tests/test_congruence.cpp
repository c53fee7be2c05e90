#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "pistar/congruence.hpp"
#include "pistar/enumerate.hpp"
#include "pistar/named.hpp"

#include "support/catch_print.hpp"
#include "support/oracles.hpp"

using namespace pistar;

namespace {
  std::string report(Verdict const& v) {
    std::string s;
    for (auto const& w : v.witnesses) {
      s += w + "\n";
    }
    return s;
  }

  std::set<EquivRelation> as_set(std::vector<EquivRelation> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("congruence lattices agree with brute force", "[congruence]") {
  SemigroupUniverse const semilattice(Product::Star,
                                      {identity(1), zero(1)});
  CHECK(enumerate_congruences(semilattice).size() == 2);
  CHECK(as_set(enumerate_congruences(semilattice))
        == as_set(oracle::all_congruences(semilattice)));

  auto const i2 = enumerate_family(Family::IStar, 2);
  CHECK(enumerate_congruences(i2).size() == 3);
  CHECK(as_set(enumerate_congruences(i2))
        == as_set(oracle::all_congruences(i2)));

  for (Product p : {Product::Star, Product::Circ}) {
    auto const u = enumerate_family(Family::PIStar, 2, p);
    auto const l = enumerate_congruences(u);
    CHECK(as_set(l) == as_set(oracle::all_congruences(u)));
    CHECK(l.front().is_trivial());
    CHECK(l.back().is_universal());
  }
  CHECK(enumerate_congruences(enumerate_family(Family::PIStar, 2, Product::Star))
            .size()
        == enumerate_congruences(
               enumerate_family(Family::PIStar, 2, Product::Circ))
               .size());
  CHECK_THROWS_AS(enumerate_congruences(enumerate_family(Family::C, 3)),
                  BudgetExceeded);
}

TEST_CASE("congruence lattice is closed under join and meet",
          "[congruence]") {
  auto const u = enumerate_family(Family::IStar, 3);
  auto const l = enumerate_congruences(u);
  auto const s = as_set(l);
  for (auto const& a : l) {
    CHECK(is_congruence(u, a));
    for (auto const& b : l) {
      CHECK(s.count(a.join(b)) == 1);
      CHECK(s.count(a.meet(b)) == 1);
    }
  }
}

TEST_CASE("principal congruences are least", "[congruence]") {
  auto const   u    = enumerate_family(Family::PIStar, 3, Product::Star);
  auto const   gens = generating_set(u);
  CHECK(closure_in(u, gens) == u.all());
  auto const   l = enumerate_congruences(u);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<index_type> pick(0, u.size() - 1);
  for (int t = 0; t < 40; ++t) {
    index_type const a = pick(rng), b = pick(rng);
    auto const       r = congruence_generated_by(u, gens, {{a, b}});
    REQUIRE(is_congruence(u, r));
    REQUIRE(r.related(a, b));
    for (auto const& c : l) {
      if (c.related(a, b)) {
        REQUIRE(r.is_contained_in(c));
      }
    }
  }
}

TEST_CASE("rho_{k,A}", "[congruence]") {
  auto const u  = enumerate_family(Family::IStar, 2);
  auto const s2 = symmetric(2);
  CHECK(build_rho(u, {1, trivial_group(2)}, Family::IStar).is_trivial());
  auto const r = build_rho(u, {1, s2}, Family::IStar);
  CHECK(r.number_of_classes() == 2);
  CHECK(r.related(*u.index_of(identity(2)), *u.index_of(perm(2, {1, 0}))));
  for (auto const& a : normal_subgroups(3)) {
    CHECK(build_rho(u, {2, a}, Family::IStar).is_universal());
  }
  CHECK(all_rho(u, Family::IStar).size() == 3);

  auto const v = enumerate_family(Family::IStar, 3);
  PermGroup  order_two{{0, 1, 2}, {1, 0, 2}};
  CHECK_THROWS_AS(build_rho(v, {2, order_two}, Family::IStar),
                  InvalidArgument);
  CHECK_THROWS_AS(build_rho(v, {0, trivial_group(1)}, Family::IStar),
                  InvalidArgument);
  CHECK_THROWS_AS(build_rho(v, {4, trivial_group(5)}, Family::IStar),
                  InvalidArgument);

  auto const w = enumerate_family(Family::PIStar, 3, Product::Star);
  CHECK(build_rho(w, {0, trivial_group(1)}, Family::PIStar).is_trivial());
  for (auto const& a : normal_subgroups(4)) {
    CHECK(build_rho(w, {3, a}, Family::PIStar).is_universal());
  }
  // On rank 3 the classes of rho_{2,A} are the cosets of A.
  for (auto const& a : normal_subgroups(3)) {
    auto const rho = build_rho(w, {2, a}, Family::PIStar);
    auto const one = *w.index_of(identity(3));
    std::size_t count = 0;
    for (index_type x = 0; x < w.size(); ++x) {
      count += rho.related(one, x);
    }
    CHECK(count == a.size());
  }
}

TEST_CASE("congruence pairs", "[congruence]") {
  auto const u = enumerate_family(Family::PIStar, 2, Product::Star);
  for (auto const& rho : enumerate_congruences(u)) {
    auto const p = kernel_trace(u, rho);
    CHECK(is_congruence_pair(u, p));
    CHECK(congruence_of_pair(u, p) == rho);
  }
  // The idempotents alone with the trivial trace form the pair of iota.
  CongruencePair p{make_element_set(u.idempotents()),
                   EquivRelation::trivial(u.idempotents().size())};
  CHECK(is_congruence_pair(u, p));
  CHECK(congruence_of_pair(u, p).is_trivial());
  // K without a non-trivial trace fails the second condition.
  p.K = u.all();
  CHECK_FALSE(is_congruence_pair(u, p));
}

TEST_CASE("normal congruences on idempotents", "[congruence]") {
  auto const u = enumerate_family(Family::IStar, 3);
  auto const l = normal_congruences_on_idempotents(u);
  std::set<EquivRelation> expected;
  for (std::size_t k = 1; k <= 3; ++k) {
    expected.insert(idempotent_rank_congruence(u, k));
  }
  CHECK(as_set(l) == expected);
  CHECK(enumerate_congruences(idempotent_universe(u)).size() > l.size());
}

TEST_CASE("classification of congruences", "[congruence]") {
  for (Family f : {Family::IStar, Family::PIStar}) {
    for (std::size_t n : {1, 2, 3}) {
      if (f == Family::IStar && n == 1) {
        continue;
      }
      auto const v = check_congruence_theorem(f, n);
      INFO(report(v));
      CHECK(v.ok);
    }
  }
  CHECK_THROWS_AS(check_congruence_theorem(Family::I, 2), InvalidArgument);
  CHECK_THROWS_AS(check_congruence_theorem(Family::IStar, 4),
                  InvalidArgument);
}
