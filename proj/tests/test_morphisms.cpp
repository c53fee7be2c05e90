#include <algorithm>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "pistar/morphisms.hpp"

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

  // Every product-preserving bijection that keeps rank and idempotency. The
  // J-classes of these semigroups form a chain ordered by rank, so every
  // automorphism keeps rank; the search runs over all permutations inside
  // each (rank, idempotent) class.
  std::set<AutMap> automorphisms_oracle(SemigroupUniverse const& u) {
    std::map<std::pair<std::size_t, bool>, std::vector<index_type>> cls;
    for (index_type a = 0; a < u.size(); ++a) {
      cls[{u.at(a).rank(), u.is_idempotent(a)}].push_back(a);
    }
    std::vector<std::vector<index_type>> parts;
    for (auto& [k, v] : cls) {
      parts.push_back(v);
    }
    std::vector<std::vector<index_type>> images = parts;
    std::set<AutMap>                     out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == parts.size()) {
        AutMap f{std::vector<index_type>(u.size())};
        for (std::size_t p = 0; p < parts.size(); ++p) {
          for (std::size_t q = 0; q < parts[p].size(); ++q) {
            f.image[parts[p][q]] = images[p][q];
          }
        }
        for (index_type a = 0; a < u.size(); ++a) {
          for (index_type b = 0; b < u.size(); ++b) {
            if (f.image[u.mul(a, b)] != u.mul(f.image[a], f.image[b])) {
              return;
            }
          }
        }
        out.insert(f);
        return;
      }
      std::sort(images[i].begin(), images[i].end());
      do {
        self(self, i + 1);
      } while (std::next_permutation(images[i].begin(), images[i].end()));
    };
    rec(rec, 0);
    return out;
  }
}  // namespace

TEST_CASE("automorphisms", "[morphisms]") {
  for (Product p : {Product::Star, Product::Circ}) {
    auto const u2 = enumerate_family(Family::PIStar, 2, p);
    auto const a2 = automorphisms(u2);
    CHECK(a2.size() == 2);
    CHECK(std::set<AutMap>(a2.begin(), a2.end()) == automorphisms_oracle(u2));
    for (std::size_t n : {2, 3}) {
      auto const v = check_automorphisms(enumerate_family(Family::PIStar, n, p));
      INFO(report(v));
      CHECK(v.ok);
    }
  }
  CHECK(automorphisms(enumerate_family(Family::PIStar, 3, Product::Star)).size()
        == 6);
  CHECK_THROWS_AS(
      automorphisms(enumerate_family(Family::PIStar, 4, Product::Star)),
      BudgetExceeded);
}

TEST_CASE("conjugation automorphisms", "[morphisms]") {
  auto const u  = enumerate_family(Family::PIStar, 3, Product::Star);
  auto const id = conjugation_aut(identity_permutation(3), u);
  for (index_type a = 0; a < u.size(); ++a) {
    CHECK(id.image[a] == a);
  }
  Permutation const t  = {1, 0, 2};
  auto const        f  = conjugation_aut(t, u);
  auto              at = [&](Bipartition const& x) {
    return u.at(f.image[*u.index_of(x)]);
  };
  CHECK(at(gamma(3, 1, 2)) == gamma(3, 2, 1));
  CHECK(at(alpha_set(3, PointSet{1, 2})) == alpha_set(3, PointSet{1, 2}));
  CHECK(at(alpha_set(3, PointSet{3})) == alpha_set(3, PointSet{3}));
  CHECK(at(alpha(3, 1)) == alpha(3, 2));
  for (Permutation const& pi : all_permutations(3)) {
    Bipartition const g = perm(3, pi);
    for (Bipartition const& a : u.elements()) {
      REQUIRE(relabel(a, pi) == star_mul(star_mul(inverse(g), a), g));
    }
  }
  // Under circ the same relabelling is an automorphism, but it is not
  // conjugation by the unit: a block with two bottom points meets no line.
  auto const w = enumerate_family(Family::PIStar, 2, Product::Circ);
  CHECK(is_automorphism(w, conjugation_aut({1, 0}, w)));
  Bipartition const tn = tau(2, 1, 2);
  CHECK(circ_mul(circ_mul(perm(2, {1, 0}), tn), perm(2, {1, 0})) == zero(2));
  CHECK(relabel(tn, {1, 0}) == tn);
}

TEST_CASE("natural partial order", "[morphisms]") {
  auto const u = enumerate_family(Family::PIStar, 2, Product::Star);
  auto const z = *u.index_of(zero(2));
  CHECK(omega_up(u, z) == u.all());
  for (index_type a = 0; a < u.size(); ++a) {
    CHECK(omega_leq(u, a, a));
    for (index_type b = 0; b < u.size(); ++b) {
      CHECK(omega_leq(u, a, b)
            == natural_order_leq(u.at(a), u.at(b), Product::Star));
    }
  }
}

TEST_CASE("coset spaces", "[morphisms]") {
  auto const u2 = enumerate_family(Family::PIStar, 2, Product::Star);
  auto const u3 = enumerate_family(Family::PIStar, 3, Product::Star);
  auto const e1 = omega_up(u2, *u2.index_of(epsilon(2, PointSet{1})));
  CHECK(coset_space(u2, e1).cosets.size() == 3);
  auto const e12 = omega_up(u3, *u3.index_of(epsilon(3, PointSet{1, 2})));
  CHECK(coset_space(u3, e12).cosets.size() == 7);
  CHECK(coset_space(u2, u2.all()).cosets.size() == 1);
  CHECK_THROWS_AS(coset_space(u2, ElementSet{*u2.index_of(zero(2))}),
                  InvalidArgument);
  // Every (epsilon_Y) omega is closed inverse and represents homomorphically.
  for (std::size_t n : {2, 3}) {
    auto const u = enumerate_family(Family::PIStar, n, Product::Star);
    for (std::uint32_t y = 1; y < (1u << n); ++y) {
      auto const h = omega_up(u, *u.index_of(epsilon(n, PointSet(y))));
      REQUIRE(is_closed_inverse_subsemigroup(u, h));
      auto const c = coset_space(u, h);
      auto       v = check_coset_space(u, c);
      v.merge(check_representation(u, representation(u, c)));
      INFO(report(v));
      CHECK(v.ok);
    }
  }
}

TEST_CASE("representations", "[morphisms]") {
  auto const u  = enumerate_family(Family::PIStar, 2, Product::Star);
  auto const e1 = omega_up(u, *u.index_of(epsilon(2, PointSet{1})));
  auto const e2 = omega_up(u, *u.index_of(epsilon(2, PointSet{2})));
  auto const r  = representation(u, e1);
  CHECK(r.degree == 3);
  CHECK(is_faithful(r));
  CHECK(image_size(r) == 12);
  for (auto const& f : r.images) {
    CHECK(is_member(Family::I, partial_injection(f)));
  }

  auto const all = representation(u, u.all());
  CHECK(image_size(all) == 1);
  CHECK_FALSE(is_faithful(all));

  auto const top = representation(u, omega_up(u, *u.index_of(identity(2))));
  CHECK_FALSE(is_faithful(top));
  for (index_type a = 0; a < u.size(); ++a) {
    if (u.at(a).rank() == 1) {
      CHECK(partial_injection(top.images[a]) == zero(top.degree));
    }
  }

  CHECK(representations_equivalent(u, e1, e1));
  CHECK(representations_equivalent(u, e1, e2));
  CHECK_FALSE(representations_equivalent(u, e1, u.all()));

  for (std::size_t n : {2, 3}) {
    for (Product p : {Product::Star, Product::Circ}) {
      auto const v
          = check_faithful_representation(enumerate_family(Family::PIStar, n, p));
      INFO(report(v));
      CHECK(v.ok);
    }
  }
}
