#include <random>
#include <set>
#include <string>

#include "catch_amalgamated.hpp"

#include "pistar/checks.hpp"
#include "pistar/enumerate.hpp"
#include "pistar/io.hpp"

#include "support/catch_print.hpp"
#include "support/oracles.hpp"

using namespace pistar;

TEST_CASE("every registered check passes at small degree", "[checks]") {
  for (CheckInfo const& c : check_registry()) {
    for (std::size_t n = c.min_n; n <= std::min<std::size_t>(c.max_n, 3); ++n) {
      CheckReport const r = run_check(c.id, n);
      INFO(c.id << " n=" << n);
      for (auto const& w : r.witnesses) {
        UNSCOPED_INFO(w);
      }
      CHECK(r.pass);
      CHECK_FALSE(r.witnesses.empty());
    }
  }
}

TEST_CASE("check ids are unique and the registry rejects bad input",
          "[checks]") {
  std::set<std::string> ids;
  for (CheckInfo const& c : check_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.min_n <= c.max_n);
  }
  CHECK_THROWS_AS(run_check("no-such-check", 2), InvalidArgument);
  CHECK_THROWS_AS(run_check("maximal-subsemigroups", 2), InvalidArgument);
  CHECK_THROWS_AS(run_check("eq1-identities", 7), InvalidArgument);
}

TEST_CASE("check reports have the documented JSON shape", "[checks]") {
  auto const j = run_check("congruences-istar", 2).to_json();
  CHECK(j.at("id") == "congruences-istar");
  CHECK(j.at("n") == 2);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("witnesses").is_array());
  CHECK(j.at("runtime").is_number());
  CHECK(j.at("witnesses")[0].get<std::string>().find("3 congruences")
        != std::string::npos);
}

TEST_CASE("family and product options select one semigroup", "[checks]") {
  CheckOptions o;
  o.family = Family::IStar;
  auto const r = run_check("fundamental", 2, o);
  REQUIRE(r.pass);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].find("mu relates") != std::string::npos);
  o.product = Product::Star;
  CHECK_THROWS_AS(run_check("fundamental", 2, o), InvalidArgument);
}

TEST_CASE("non-closure witnesses agree with the oracles", "[checks]") {
  // Degree 1 is closed under both products, by the oracle products and
  // membership tests.
  for (Bipartition const& a : family_elements(Family::PIStar, 1)) {
    for (Bipartition const& b : family_elements(Family::PIStar, 1)) {
      CHECK(oracle::in_pistar(oracle::natural(a, b)));
    }
  }
  for (Bipartition const& a : family_elements(Family::IStar, 1)) {
    for (Bipartition const& b : family_elements(Family::IStar, 1)) {
      CHECK(oracle::in_istar(oracle::circ(a, b)));
    }
  }
  auto const p = find_non_closure(Family::PIStar, Product::Natural, 3);
  REQUIRE(p);
  CHECK(p->n == 2);
  CHECK(oracle::in_pistar(p->a));
  CHECK(oracle::in_pistar(p->b));
  CHECK(oracle::natural(p->a, p->b) == p->product);
  CHECK_FALSE(oracle::in_pistar(p->product));

  auto const q = find_non_closure(Family::IStar, Product::Circ, 3);
  REQUIRE(q);
  CHECK(q->n == 2);
  CHECK(oracle::in_istar(q->a));
  CHECK(oracle::in_istar(q->b));
  CHECK(oracle::circ(q->a, q->b) == q->product);
  CHECK_FALSE(oracle::in_istar(q->product));

  CHECK_FALSE(find_non_closure(Family::PIStar, Product::Star, 3));
  CHECK_FALSE(find_non_closure(Family::PIStar, Product::Circ, 3));
  CHECK_FALSE(find_non_closure(Family::IStar, Product::Natural, 3));
}

TEST_CASE("random elements are reproducible from the seed", "[checks]") {
  std::mt19937 r1(42), r2(42);
  for (int i = 0; i < 100; ++i) {
    Bipartition const a = random_bipartition(r1, 4);
    CHECK(a == random_bipartition(r2, 4));
    CHECK(oracle::as_sets(a) == oracle::as_sets(parse(to_string(a), 4)));
  }
}
