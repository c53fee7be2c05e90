// pistar - exact computation in finite partition semigroups
//
// A closed registry of verifications, each run at one degree n and
// reporting pass/fail with witnesses. The CLI `check` verb and the
// acceptance driver are thin layers over this.

#ifndef PISTAR_CHECKS_HPP_
#define PISTAR_CHECKS_HPP_

#include <algorithm>   // for count, find, sort
#include <chrono>      // for steady_clock
#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for function
#include <optional>    // for optional
#include <random>      // for mt19937
#include <string>      // for string
#include <vector>      // for vector

#include "json.hpp"

#include "bipartition.hpp"
#include "congruence.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "generation.hpp"
#include "green.hpp"
#include "io.hpp"
#include "isolated.hpp"
#include "morphisms.hpp"
#include "named.hpp"
#include "product.hpp"
#include "universe.hpp"
#include "verdict.hpp"

namespace pistar {

  struct CheckOptions {
    //! Restricts checks that run over several families to one of them.
    std::optional<Family>  family;
    std::optional<Product> product;
    std::uint32_t          seed   = 1;
    std::size_t            budget = kDefaultBudget;
  };

  ////////////////////////////////////////////////////////////////////////
  // Element-level identities
  ////////////////////////////////////////////////////////////////////////

  //! gamma_xy gamma_xy^-1 = tau_xy, gamma_xy^-1 gamma_xy = alpha_y and
  //! gamma_xy gamma_zy^-1 = xi_xyz under star, for all distinct x, y, z.
  inline Verdict check_named_identities(std::size_t n) {
    Verdict     v;
    std::size_t count = 0;
    int const   m     = static_cast<int>(n);
    for (int x = 1; x <= m; ++x) {
      for (int y = 1; y <= m; ++y) {
        if (x == y) {
          continue;
        }
        Bipartition const g  = gamma(n, x, y);
        Bipartition const gi = inverse(g);
        std::string const at = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        v.expect(star_mul(g, gi) == tau(n, x, y), "gamma gamma^-1 at " + at);
        v.expect(star_mul(gi, g) == alpha(n, y), "gamma^-1 gamma at " + at);
        count += 2;
        for (int z = 1; z <= m; ++z) {
          if (z != x && z != y) {
            v.expect(star_mul(g, inverse(gamma(n, z, y))) == xi(n, x, y, z),
                     "gamma_xy gamma_zy^-1 at " + at + " z="
                         + std::to_string(z));
            ++count;
          }
        }
      }
    }
    v.note(std::to_string(count) + " identities checked, e.g. "
           + to_string(gamma(n, 1, 2)) + " * "
           + to_string(inverse(gamma(n, 1, 2))) + " = "
           + to_string(tau(n, 1, 2)));
    return v;
  }

  //! g^-1 gamma_xy g = gamma_{g(x), g(y)} for every unit g.
  inline Verdict check_conjugation_law(std::size_t n) {
    Verdict     v;
    std::size_t count = 0;
    int const   m     = static_cast<int>(n);
    for (Permutation const& g : all_permutations(n)) {
      Bipartition const u  = perm(n, g);
      Bipartition const ui = inverse(u);
      for (int x = 1; x <= m; ++x) {
        for (int y = 1; y <= m; ++y) {
          if (x != y) {
            v.expect(star_mul(star_mul(ui, gamma(n, x, y)), u)
                         == gamma(n, g[x - 1] + 1, g[y - 1] + 1),
                     "conjugation fails for " + to_string(u));
            ++count;
          }
        }
      }
    }
    v.note(std::to_string(count) + " conjugates checked");
    return v;
  }

  namespace detail {
    inline Verdict associativity_on(Product                         p,
                                    std::vector<Bipartition> const& xs,
                                    std::string const&              name) {
      // Products of pairs are computed once; triples then need one more.
      std::size_t const        m = xs.size();
      std::vector<Bipartition> ab(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          ab[i * m + j] = multiply(p, xs[i], xs[j]);
        }
      }
      Verdict v;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = 0; k < m; ++k) {
            if (multiply(p, ab[i * m + j], xs[k])
                != multiply(p, xs[i], ab[j * m + k])) {
              v.fail(name + " is not associative at " + to_string(xs[i])
                     + ", " + to_string(xs[j]) + ", " + to_string(xs[k]));
              return v;
            }
          }
        }
      }
      v.note(name + ": " + std::to_string(m * m * m) + " triples");
      return v;
    }
  }  // namespace detail

  //! star and circ on all of PI*_n; the natural product on all of C_k,
  //! k = min(n, 2).
  inline Verdict check_associativity(std::size_t n) {
    Verdict    v;
    auto const pistar = family_elements(Family::PIStar, n);
    v.merge(detail::associativity_on(
        Product::Star, pistar, "star on PI*_" + std::to_string(n)));
    v.merge(detail::associativity_on(
        Product::Circ, pistar, "circ on PI*_" + std::to_string(n)));
    std::size_t const k = std::min<std::size_t>(n, 2);
    v.merge(detail::associativity_on(Product::Natural,
                                     family_elements(Family::C, k),
                                     "natural on C_" + std::to_string(k)));
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // The three inverse semigroups
  ////////////////////////////////////////////////////////////////////////

  struct NamedUniverse {
    std::string       name;
    SemigroupUniverse universe;
  };

  //! PI*_n (star), wPI*_n (circ) and I*_n (natural), or the ones selected.
  inline std::vector<NamedUniverse> inverse_semigroups(std::size_t         n,
                                                       CheckOptions const& o) {
    std::vector<NamedUniverse> out;
    std::string const          d = "_" + std::to_string(n);
    auto                       want = [&](Family f, Product p) {
      return (!o.family || *o.family == f) && (!o.product || *o.product == p);
    };
    if (want(Family::PIStar, Product::Star)) {
      out.push_back({"PI*" + d, enumerate_family(Family::PIStar, n, Product::Star)});
    }
    if (want(Family::PIStar, Product::Circ)) {
      out.push_back({"wPI*" + d, enumerate_family(Family::PIStar, n, Product::Circ)});
    }
    if (want(Family::IStar, Product::Natural)) {
      out.push_back({"I*" + d, enumerate_family(Family::IStar, n, Product::Natural)});
    }
    if (out.empty()) {
      throw InvalidArgument("no inverse semigroup matches the selected family "
                            "and product");
    }
    return out;
  }

  //! Idempotents commute and every element has exactly one inverse.
  inline Verdict check_inverse_axioms(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      auto const& es = u.idempotents();
      for (index_type e : es) {
        for (index_type f : es) {
          v.expect(u.mul(e, f) == u.mul(f, e),
                   name + ": idempotents do not commute: " + to_string(u.at(e))
                       + ", " + to_string(u.at(f)));
        }
      }
      for (index_type a = 0; a < u.size(); ++a) {
        std::size_t count = 0;
        for (index_type b = 0; b < u.size(); ++b) {
          count += u.mul(u.mul(a, b), a) == a && u.mul(u.mul(b, a), b) == b;
        }
        v.expect(count == 1,
                 name + ": " + std::to_string(count) + " inverses of "
                     + to_string(u.at(a)));
      }
      v.note(name + ": " + std::to_string(u.size()) + " elements, "
             + std::to_string(es.size()) + " idempotents");
    }
    return v;
  }

  //! Green's relations from dom, ran and rank equal the ideal-based ones,
  //! and there is one D-class per rank that occurs.
  inline Verdict check_green(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      for (GreenRelation g : {GreenRelation::R,
                              GreenRelation::L,
                              GreenRelation::H,
                              GreenRelation::D,
                              GreenRelation::J}) {
        v.expect(green_classes(u, g) == green_oracle(u, g),
                 name + ": " + green_name(g) + " differs from the oracle");
      }
      std::size_t const d
          = green_classes(u, GreenRelation::D).number_of_classes();
      std::vector<char> seen(n + 1, 0);
      for (Bipartition const& a : u.elements()) {
        seen[a.rank()] = 1;
      }
      auto const ranks
          = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
      v.expect(d == ranks, name + ": D-classes are not the ranks");
      v.note(name + ": " + std::to_string(d) + " D-classes, one per rank");
    }
    return v;
  }

  //! The non-empty ideals of PI*_n and wPI*_n are exactly J_1, ..., J_{n+1}.
  inline Verdict check_ideals(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      if (name.rfind("I*", 0) == 0) {
        continue;
      }
      std::vector<ElementSet> expected;
      for (std::size_t xi = 1; xi <= n + 1; ++xi) {
        expected.push_back(ideal(u, xi));
      }
      auto found = all_ideals(u);
      std::sort(found.begin(), found.end());
      std::sort(expected.begin(), expected.end());
      v.expect(found == expected, name + ": ideals differ from J_1..J_{n+1}");
      v.note(name + ": " + std::to_string(found.size()) + " ideals");
    }
    return v;
  }

  //! mu is trivial on PI*_n and wPI*_n and not on I*_n, where the pair
  //! (eta_{1}, {1 u (N \ 1)', (N \ 1) u 1'}) is mu-related.
  inline Verdict check_fundamental(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      EquivRelation const mu = mu_congruence(u);
      v.expect(is_congruence(u, mu), name + ": mu is not a congruence");
      v.expect(mu.is_contained_in(green_classes(u, GreenRelation::H)),
               name + ": mu is not inside H");
      if (name.rfind("I*", 0) == 0) {
        auto const w = mu_witness(u);
        v.expect(w.has_value(), name + ": mu is trivial");
        auto const [a, b] = mu_pair_in_istar(n, 1);
        bool const related = mu.related(index_or_throw(u, a), index_or_throw(u, b));
        v.expect(a != b && related, name + ": the listed pair is not mu-related");
        v.note(name + ": mu relates " + to_string(a) + " and " + to_string(b)
               + "; " + std::to_string(mu.number_of_classes()) + " classes");
      } else {
        v.expect(mu.is_trivial(), name + ": mu is not trivial");
        v.note(name + ": mu is trivial");
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation and maximal subsemigroups
  ////////////////////////////////////////////////////////////////////////

  //! <S_n, gamma_12, gamma_12^-1> under star is PI*_n, element for
  //! element. At n = 2 the outcome is reported, not asserted.
  inline Verdict check_closure_generation(std::size_t n, CheckOptions const& o) {
    Verdict      v;
    GeneratorSet g{Product::Star, symmetric_group(n), false};
    g.generators.push_back(gamma(n, 1, 2));
    g.generators.push_back(inverse(gamma(n, 1, 2)));
    auto c = closure_elements(g, o.budget);
    sort_canonical(c);
    auto const all = family_elements(Family::PIStar, n, o.budget);
    v.note("|<S_n, gamma, gamma^-1>| = " + std::to_string(c.size())
           + ", |PI*_" + std::to_string(n) + "| = " + std::to_string(all.size()));
    if (n >= 3) {
      v.expect(c == all, "the closure is not PI*_n");
    }
    return v;
  }

  inline Verdict check_irreducibility_at(std::size_t n) {
    return check_irreducibility(pistar_universe(n));
  }

  inline Verdict check_generating_theorem_at(std::size_t n) {
    return check_generating_theorem(pistar_universe(n));
  }

  inline Verdict check_rank_factorization_at(std::size_t n) {
    return check_rank_factorization(pistar_universe(n));
  }

  inline Verdict check_maximal_at(std::size_t n) {
    return check_maximal_subsemigroups(pistar_universe(n), n == 3);
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-closure witnesses
  ////////////////////////////////////////////////////////////////////////

  struct ClosureWitness {
    std::size_t n = 0;
    Bipartition a, b, product;
  };

  //! The first pair (in canonical order) at the least degree <= max_n whose
  //! product under p leaves the family f.
  inline std::optional<ClosureWitness>
  find_non_closure(Family f, Product p, std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto const xs = family_elements(f, n);
      for (Bipartition const& a : xs) {
        for (Bipartition const& b : xs) {
          Bipartition c = multiply(p, a, b);
          if (!is_member(f, c)) {
            return ClosureWitness{n, a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  //! PI* is not closed under the natural product and I* is not closed under
  //! circ; witnesses at the least degree, re-verified.
  inline Verdict check_non_closure(std::size_t max_n) {
    Verdict v;
    struct Case {
      Family      f;
      Product     p;
      char const* what;
    };
    for (Case c : {Case{Family::PIStar, Product::Natural, "PI* under natural"},
                   Case{Family::IStar, Product::Circ, "I* under circ"}}) {
      auto const w = find_non_closure(c.f, c.p, max_n);
      if (!v.expect(w.has_value(),
                    std::string("no witness for ") + c.what + " up to n = "
                        + std::to_string(max_n))) {
        continue;
      }
      bool const again = multiply(c.p, w->a, w->b) == w->product
                         && is_member(c.f, w->a) && is_member(c.f, w->b)
                         && !is_member(c.f, w->product);
      v.expect(again, std::string("witness for ") + c.what
                          + " does not re-verify");
      v.note(std::string(c.what) + ": n = " + std::to_string(w->n) + ", "
             + to_string(w->a) + " " + product_name(c.p) + " "
             + to_string(w->b) + " = " + to_string(w->product));
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences, isolated subsemigroups, morphisms
  ////////////////////////////////////////////////////////////////////////

  inline Verdict check_completely_isolated(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      auto const found    = completely_isolated(u);
      auto const expected = detail::sorted_unique(units_split(u));
      v.expect(found == expected,
               name + ": completely isolated subsemigroups are not S, S_n, "
                      "S \\ S_n");
      v.note(name + ": completely isolated sizes " + detail::sizes(found));
      v.merge(units_split_check(u));
    }
    return v;
  }

  inline Verdict check_isolated_family(std::size_t n, Family f, Product p) {
    SemigroupUniverse const u = enumerate_family(f, n, p);
    std::vector<ElementSet> expected;
    std::string             name;
    if (f == Family::IStar) {
      expected = expected_isolated_istar(u);
      name     = "I*_";
    } else if (p == Product::Circ) {
      expected = expected_isolated_wpistar(u);
      name     = "wPI*_";
    } else {
      expected = expected_isolated_pistar(u);
      name     = "PI*_";
    }
    Verdict    v;
    auto const found = isolated(u);
    detail::compare_lists(v, "isolated in " + name + std::to_string(n), found, expected);
    for (ElementSet const& t : completely_isolated(u)) {
      v.expect(std::find(found.begin(), found.end(), t) != found.end(),
               "a completely isolated subsemigroup is not isolated");
    }
    return v;
  }

  inline Verdict check_automorphism_count(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      if (name.rfind("I*", 0) == 0) {
        continue;
      }
      Verdict w = check_automorphisms(u);
      for (auto& s : w.witnesses) {
        s = name + ": " + s;
      }
      v.merge(w);
    }
    return v;
  }

  inline Verdict check_representation_degree(std::size_t n, CheckOptions const& o) {
    Verdict v;
    for (auto const& [name, u] : inverse_semigroups(n, o)) {
      if (name.rfind("I*", 0) == 0) {
        continue;
      }
      Verdict w = check_faithful_representation(u, n <= 3);
      for (auto& s : w.witnesses) {
        s = name + ": " + s;
      }
      v.merge(w);
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Round trip
  ////////////////////////////////////////////////////////////////////////

  //! A uniformly random labelling of the 2n points, canonicalized.
  inline Bipartition random_bipartition(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * n) - 1);
    std::vector<std::uint8_t>          labels(2 * n);
    for (auto& l : labels) {
      l = static_cast<std::uint8_t>(pick(rng));
    }
    return Bipartition::from_labels(n, labels);
  }

  //! parse(to_string(a)) = a and from_json(to_json(a)) = a for every
  //! element of PI*_min(n,3) and 10^4 random elements of C_n.
  inline Verdict check_roundtrip(std::size_t n, CheckOptions const& o) {
    Verdict      v;
    std::mt19937 rng(o.seed);
    std::size_t  count = 0;
    auto         one   = [&](Bipartition const& a) {
      ++count;
      return v.expect(parse(to_string(a), a.degree()) == a
                          && from_json(to_json(a)) == a,
                      "round trip fails for " + to_string(a));
    };
    for (Bipartition const& a : family_elements(Family::PIStar, std::min<std::size_t>(n, 3))) {
      if (!one(a)) {
        return v;
      }
    }
    for (int t = 0; t < 10000; ++t) {
      if (!one(random_bipartition(rng, n))) {
        return v;
      }
    }
    v.note(std::to_string(count) + " elements, seed " + std::to_string(o.seed));
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  struct CheckInfo {
    std::string                                                id;
    std::string                                                summary;
    std::size_t                                                min_n;
    std::size_t                                                max_n;
    std::function<Verdict(std::size_t, CheckOptions const&)> run;
  };

  inline std::vector<CheckInfo> const& check_registry() {
    using O = CheckOptions;
    static std::vector<CheckInfo> const registry{
        {"eq1-identities", "gamma gamma^-1 = tau, gamma^-1 gamma = alpha, "
                           "gamma_xy gamma_zy^-1 = xi", 3, 6,
         [](std::size_t n, O const&) { return check_named_identities(n); }},
        {"eq2-conjugation", "g^-1 gamma_xy g = gamma_{g(x),g(y)}", 3, 6,
         [](std::size_t n, O const&) { return check_conjugation_law(n); }},
        {"associativity", "star and circ on PI*_n, natural on C_min(n,2)", 1, 3,
         [](std::size_t n, O const&) { return check_associativity(n); }},
        {"roundtrip", "text and JSON round trip", 1, 6, check_roundtrip},
        {"inverse-axioms", "idempotents commute, inverses are unique", 1, 3,
         check_inverse_axioms},
        {"green-oracle", "structural Green's relations equal the ideal oracle",
         1, 3, check_green},
        {"ideals", "the ideals of PI*_n and wPI*_n are J_1..J_{n+1}", 1, 2,
         check_ideals},
        {"fundamental", "mu trivial on PI*_n, wPI*_n; not on I*_n", 2, 3,
         check_fundamental},
        {"closure-generation", "<S_n, gamma, gamma^-1> = PI*_n", 2, 4,
         check_closure_generation},
        {"rank-factorization", "rank n-1 elements factor through five named "
                               "elements", 3, 4,
         [](std::size_t n, O const&) { return check_rank_factorization_at(n); }},
        {"irreducibility", "gamma^-1 outside <S_n, gamma, tau, xi, alpha>", 3, 4,
         [](std::size_t n, O const&) { return check_irreducibility_at(n); }},
        {"generating-theorem", "<S_n, u, u^-1> = PI*_n iff u in S_n gamma^{+-1} "
                               "S_n", 3, 4,
         [](std::size_t n, O const&) { return check_generating_theorem_at(n); }},
        {"maximal-subsemigroups", "the listed maximal (inverse) subsemigroups",
         3, 3, [](std::size_t n, O const&) { return check_maximal_at(n); }},
        {"congruences-istar", "congruences of I*_n are the rho_{k,A}", 2, 3,
         [](std::size_t n, O const&) {
           return check_congruence_theorem(Family::IStar, n);
         }},
        {"congruences-pistar", "congruences of PI*_n are the rho_{k,A} and "
                               "equal those of wPI*_n", 1, 3,
         [](std::size_t n, O const&) {
           return check_congruence_theorem(Family::PIStar, n);
         }},
        {"completely-isolated", "completely isolated: S, S_n, S \\ S_n", 2, 3,
         check_completely_isolated},
        {"isolated-istar", "isolated subsemigroups of I*_n", 2, 3,
         [](std::size_t n, O const&) {
           return check_isolated_family(n, Family::IStar, Product::Natural);
         }},
        {"isolated-wpistar", "isolated subsemigroups of wPI*_n", 2, 3,
         [](std::size_t n, O const&) {
           return check_isolated_family(n, Family::PIStar, Product::Circ);
         }},
        {"isolated-pistar", "isolated subsemigroups of PI*_n", 3, 3,
         [](std::size_t n, O const&) {
           return check_isolated_family(n, Family::PIStar, Product::Star);
         }},
        {"aut-count", "Aut(PI*_n) and Aut(wPI*_n) are the n! conjugations", 2,
         3, check_automorphism_count},
        {"representation-degree", "faithful representation on 2^n - 1 cosets "
                                  "iff rank(f) = 1", 2, 4,
         check_representation_degree},
        {"non-closure", "PI* not closed under natural, I* not under circ", 2,
         3, [](std::size_t n, O const&) { return check_non_closure(n); }},
    };
    return registry;
  }

  inline CheckInfo const* find_check(std::string const& id) {
    for (CheckInfo const& c : check_registry()) {
      if (c.id == id) {
        return &c;
      }
    }
    return nullptr;
  }

  struct CheckReport {
    std::string              id;
    std::size_t              n = 0;
    bool                     pass = false;
    std::vector<std::string> witnesses;
    double                   runtime = 0;

    nlohmann::json to_json() const {
      return {{"id", id},
              {"n", n},
              {"status", pass ? "pass" : "fail"},
              {"witnesses", witnesses},
              {"runtime", runtime}};
    }
  };

  //! Runs one registered check; throws InvalidArgument for an unknown id or
  //! a degree outside the check's range.
  inline CheckReport run_check(std::string const&  id,
                               std::size_t         n,
                               CheckOptions const& o = {}) {
    CheckInfo const* c = find_check(id);
    if (c == nullptr) {
      throw InvalidArgument("unknown check id: " + id);
    }
    if (n < c->min_n || n > c->max_n) {
      throw InvalidArgument("check " + id + " runs for "
                            + std::to_string(c->min_n)
                            + " <= n <= " + std::to_string(c->max_n));
    }
    auto const  start = std::chrono::steady_clock::now();
    Verdict     v     = c->run(n, o);
    CheckReport r;
    r.id        = id;
    r.n         = n;
    r.pass      = v.ok;
    r.witnesses = std::move(v.witnesses);
    r.runtime   = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - start)
                    .count();
    return r;
  }

}  // namespace pistar

#endif  // PISTAR_CHECKS_HPP_
