#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "pistar/isolated.hpp"

#include "support/catch_print.hpp"

using namespace pistar;

namespace {
  std::string report(Verdict const& v) {
    std::string s;
    for (auto const& w : v.witnesses) {
      s += w + "\n";
    }
    return s;
  }

  // Literal definitions over every non-empty subset of a small universe.
  struct Brute {
    std::set<ElementSet> completely_isolated, isolated;
  };

  Brute brute_force(SemigroupUniverse const& u) {
    REQUIRE(u.size() <= 14);
    std::size_t const m = u.size();
    Brute             out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
      auto in = [&](index_type x) { return (mask >> x & 1) != 0; };
      bool closed = true, complete = true, roots = true;
      for (index_type a = 0; a < m; ++a) {
        for (index_type b = 0; b < m; ++b) {
          bool const ab = in(u.mul(a, b));
          if (in(a) && in(b) && !ab) {
            closed = false;
          }
          if (ab && !in(a) && !in(b)) {
            complete = false;
          }
        }
        index_type p = a;
        for (std::size_t k = 1; k <= m + 1; ++k, p = u.mul(p, a)) {
          if (in(p) && !in(a)) {
            roots = false;
          }
        }
      }
      ElementSet t;
      for (index_type x = 0; x < m; ++x) {
        if (in(x)) {
          t.push_back(x);
        }
      }
      if (closed && complete) {
        out.completely_isolated.insert(t);
      }
      if (closed && roots) {
        out.isolated.insert(t);
      }
    }
    return out;
  }

  std::set<ElementSet> as_set(std::vector<ElementSet> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("isolated searches agree with brute force", "[isolated]") {
  std::vector<SemigroupUniverse> cases{
      enumerate_family(Family::PIStar, 2, Product::Star),
      enumerate_family(Family::PIStar, 2, Product::Circ),
      enumerate_family(Family::IStar, 2, Product::Natural),
      enumerate_family(Family::I, 2, Product::Star),
      enumerate_family(Family::PIStar, 1, Product::Star)};
  for (auto const& u : cases) {
    Brute const b = brute_force(u);
    CHECK(as_set(completely_isolated(u)) == b.completely_isolated);
    CHECK(as_set(isolated(u)) == b.isolated);
  }
}

TEST_CASE("completely isolated subsemigroups", "[isolated]") {
  auto const i3 = enumerate_family(Family::IStar, 3);
  auto const l  = completely_isolated(i3);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == i3.all());
  CHECK(l[1] == set_difference(i3.all(), units(i3)));
  CHECK(l[2] == units(i3));
  for (auto const& t : l) {
    CHECK(is_completely_isolated(i3, t));
  }
  CHECK_FALSE(is_completely_isolated(i3, ElementSet{}));
  CHECK_THROWS_AS(completely_isolated(enumerate_family(Family::I, 4)),
                  BudgetExceeded);
}

TEST_CASE("isolated subsemigroups", "[isolated]") {
  auto const i3 = enumerate_family(Family::IStar, 3);
  CHECK(isolated(i3).size() == 6);
  auto const p3 = enumerate_family(Family::PIStar, 3, Product::Star);
  auto const l  = isolated(p3);
  CHECK(l.size() == 17);
  CHECK(as_set(l) == as_set(expected_isolated_pistar(p3)));
  auto const w2 = enumerate_family(Family::PIStar, 2, Product::Circ);
  auto const lw = as_set(isolated(w2));
  for (index_type e : w2.idempotents()) {
    if (domain_data(w2.at(e)).corank <= 1) {
      CHECK(lw.count(subgroup_G(w2, e)) == 1);
    }
  }
  // Each listed G(e) is an H-class group that no outside element has a
  // power in.
  for (auto const* u : {&i3, &p3}) {
    for (ElementSet const& t : isolated(*u)) {
      CHECK(is_isolated(*u, t));
      if (t.size() <= 2 && u->is_idempotent(t.front())) {
        CHECK(is_group(*u, t));
      }
    }
  }
}

TEST_CASE("the isolated closure is a closure operator", "[isolated]") {
  auto const            u = enumerate_family(Family::PIStar, 3, Product::Star);
  IsolatedClosure const cl(u);
  std::mt19937          rng(7);
  std::uniform_int_distribution<index_type> pick(0, u.size() - 1);
  for (int t = 0; t < 200; ++t) {
    ElementSet x, y;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) {
      x.push_back(pick(rng));
    }
    x = make_element_set(x);
    y = x;
    y.push_back(pick(rng));
    y                = make_element_set(y);
    ElementSet const cx = cl(x), cy = cl(y);
    REQUIRE(std::includes(cx.begin(), cx.end(), x.begin(), x.end()));
    REQUIRE(cl(cx) == cx);
    REQUIRE(std::includes(cy.begin(), cy.end(), cx.begin(), cx.end()));
    REQUIRE((x.empty() ? cx.empty() : is_isolated(u, cx)));
  }
}

TEST_CASE("units split", "[isolated]") {
  for (auto const& u : {enumerate_family(Family::IStar, 3),
                        enumerate_family(Family::PIStar, 2, Product::Star),
                        enumerate_family(Family::PIStar, 3, Product::Circ)}) {
    auto const v = units_split_check(u);
    INFO(report(v));
    CHECK(v.ok);
  }
  auto const u = enumerate_family(Family::PIStar, 2, Product::Star);
  auto const l = as_set(completely_isolated(u));
  CHECK(l.count(set_union(set_difference(u.all(), units(u)), units(u))) == 1);
}

TEST_CASE("isolated classification", "[isolated]") {
  for (std::size_t n : {2, 3}) {
    auto const v = check_isolated(n);
    INFO(report(v));
    CHECK(v.ok);
  }
}
