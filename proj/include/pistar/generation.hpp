// pistar - exact computation in finite partition semigroups
//
// Generating sets of PI*_n and its maximal (inverse) subsemigroups, checked
// by closure inside the full star universe.

#ifndef PISTAR_GENERATION_HPP_
#define PISTAR_GENERATION_HPP_

#include <algorithm>  // for includes
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "bipartition.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "groups.hpp"
#include "io.hpp"
#include "named.hpp"
#include "product.hpp"
#include "universe.hpp"
#include "verdict.hpp"

namespace pistar {

  inline ElementSet units(SemigroupUniverse const& u) {
    return u.filter([](Bipartition const& a) { return is_member(Family::S, a); });
  }

  //! {g x h : x in xs, g, h in gs}.
  inline ElementSet double_coset_set(SemigroupUniverse const& u,
                                     ElementSet const&        gs,
                                     ElementSet const&        xs) {
    ElementSet out;
    for (index_type x : xs) {
      for (index_type g : gs) {
        index_type const gx = u.mul(g, x);
        for (index_type h : gs) {
          out.push_back(u.mul(gx, h));
        }
      }
    }
    return make_element_set(std::move(out));
  }

  //! Orbits of the action (g, h) : x -> g^-1 x h of gs x gs.
  inline EquivRelation two_sided_orbits(SemigroupUniverse const& u,
                                        ElementSet const&        gs) {
    std::vector<index_type> key(u.size());
    for (index_type x = 0; x < u.size(); ++x) {
      key[x] = double_coset_set(u, gs, {x}).front();
    }
    return EquivRelation::from_keys(key);
  }

  inline index_type index_or_throw(SemigroupUniverse const& u,
                                   Bipartition const&       x) {
    auto i = u.index_of(x);
    if (!i) {
      throw InvalidArgument("element " + to_string(x)
                            + " is not in the universe");
    }
    return *i;
  }

  inline SemigroupUniverse pistar_universe(std::size_t n) {
    return enumerate_family(Family::PIStar, n, Product::Star);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank n - 1 factorization
  ////////////////////////////////////////////////////////////////////////

  //! Every element of rank n - 1 has the form g u h with u one of tau_12,
  //! alpha_1, xi_123, gamma_12, gamma_12^-1 and g, h units.
  inline Verdict check_rank_factorization(SemigroupUniverse const& u) {
    std::size_t const n = u.degree();
    if (n < 3) {
      throw InvalidArgument("rank factorization needs n >= 3");
    }
    std::vector<std::pair<std::string, Bipartition>> const targets{
        {"tau_12", tau(n, 1, 2)},
        {"alpha_1", alpha(n, 1)},
        {"xi_123", xi(n, 1, 2, 3)},
        {"gamma_12", gamma(n, 1, 2)},
        {"gamma_12^-1", inverse(gamma(n, 1, 2))}};
    ElementSet const s = units(u);
    Verdict          v;
    std::size_t      count = 0;
    for (index_type x = 0; x < u.size(); ++x) {
      if (u.at(x).rank() != n - 1) {
        continue;
      }
      ++count;
      bool found = false;
      for (index_type g : s) {
        index_type const gx = u.mul(g, x);
        for (index_type h : s) {
          Bipartition const& y = u.at(u.mul(gx, h));
          for (auto const& [name, t] : targets) {
            if (y == t) {
              if (count <= 3) {
                v.note(to_string(u.at(g)) + " * " + to_string(u.at(x))
                       + " * " + to_string(u.at(h)) + " = " + name);
              }
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (found) {
          break;
        }
      }
      v.expect(found, "no factorization for " + to_string(u.at(x)));
    }
    v.note(std::to_string(count) + " elements of rank " + std::to_string(n - 1)
           + " checked");
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // The maximal subsemigroups listed for PI*_n
  ////////////////////////////////////////////////////////////////////////

  struct MaximalList {
    //! S_n u J_{n-1} u S_n {tau_12, alpha_1, gamma_12, xi_123} S_n
    ElementSet with_gamma;
    //! the same with gamma_12^-1 in place of gamma_12
    ElementSet with_gamma_inverse;
    //! G u J_n for each maximal subgroup G of S_n
    std::vector<ElementSet> from_subgroups;
    //! S_n u J_{n-1} u S_n {tau_12, alpha_1, xi_123} S_n
    ElementSet inverse_item;
  };

  inline MaximalList maximal_list(SemigroupUniverse const& u) {
    std::size_t const n = u.degree();
    if (n < 3 || n > 4) {
      throw InvalidArgument("the listed maximal subsemigroups need 3 <= n <= 4");
    }
    ElementSet const s    = units(u);
    ElementSet const low  = ideal(u, n - 1);
    ElementSet const jn   = ideal(u, n);
    auto             item = [&](std::vector<Bipartition> const& gens) {
      ElementSet xs;
      for (Bipartition const& x : gens) {
        xs.push_back(index_or_throw(u, x));
      }
      return set_union(set_union(s, low),
                       double_coset_set(u, s, make_element_set(xs)));
    };
    Bipartition const t = tau(n, 1, 2), a = alpha(n, 1), g = gamma(n, 1, 2),
                      x = xi(n, 1, 2, 3);
    MaximalList out;
    out.with_gamma         = item({t, a, g, x});
    out.with_gamma_inverse = item({t, a, inverse(g), x});
    out.inverse_item       = item({t, a, x});
    for (PermGroup const& h : maximal_subgroups(n)) {
      ElementSet m = jn;
      for (Permutation const& p : h) {
        m.push_back(index_or_throw(u, perm(n, p)));
      }
      out.from_subgroups.push_back(make_element_set(std::move(m)));
    }
    return out;
  }

  //! True when m is a proper subsemigroup and adding any outside element
  //! generates everything.
  inline bool is_maximal_subsemigroup(SemigroupUniverse const& u,
                                      ElementSet const&        m) {
    if (m.size() >= u.size() || !u.is_closed(m)) {
      return false;
    }
    for (index_type s = 0; s < u.size(); ++s) {
      if (!contains(m, s) && extend_closure(u, m, s).size() != u.size()) {
        return false;
      }
    }
    return true;
  }

  inline bool is_inverse_closed(SemigroupUniverse const& u,
                                ElementSet const&        m) {
    for (index_type x : m) {
      if (!contains(m, u.inverse_of(x))) {
        return false;
      }
    }
    return true;
  }

  inline bool is_maximal_inverse_subsemigroup(SemigroupUniverse const& u,
                                              ElementSet const&        m) {
    if (m.size() >= u.size() || !u.is_closed(m) || !is_inverse_closed(u, m)) {
      return false;
    }
    for (index_type s = 0; s < u.size(); ++s) {
      if (contains(m, s)) {
        continue;
      }
      ElementSet g = m;
      g.push_back(s);
      if (inverse_closure_in(u, make_element_set(std::move(g))).size()
          != u.size()) {
        return false;
      }
    }
    return true;
  }

  //! All maximal subsemigroups, using that the complement of a maximal
  //! subsemigroup of a finite semigroup lies in one J-class (Graham, Graham
  //! and Rhodes). For the class of units the candidates are J_n together with
  //! a subgroup (or nothing); for every other class the candidates contain
  //! all units, so they are unions of two-sided unit orbits.
  inline std::vector<ElementSet> maximal_subsemigroups_by_j_class(
      SemigroupUniverse const& u,
      std::size_t              orbit_limit = 16) {
    std::size_t const       n = u.degree();
    ElementSet const        s = units(u);
    auto const              one = u.index_of(identity(n));
    bool                    monoid = one.has_value();
    for (index_type x = 0; monoid && x < u.size(); ++x) {
      monoid = u.mul(*one, x) == x && u.mul(x, *one) == x;
    }
    if (!monoid) {
      throw InvalidArgument("the J-class search needs the identity to be a "
                            "two-sided identity");
    }
    EquivRelation const     d = green_classes(u, GreenRelation::J);
    EquivRelation const     o = two_sided_orbits(u, s);
    std::vector<ElementSet> out;
    auto consider = [&](ElementSet const& m) {
      if (is_maximal_subsemigroup(u, m)) {
        out.push_back(m);
      }
    };
    for (ElementSet const& j : d.classes()) {
      ElementSet const rest = set_difference(u.all(), j);
      if (u.at(j.front()).rank() == n) {
        consider(rest);
        for (PermGroup const& h : all_subgroups(n)) {
          ElementSet m = rest;
          for (Permutation const& p : h) {
            m.push_back(index_or_throw(u, perm(n, p)));
          }
          consider(make_element_set(std::move(m)));
        }
        continue;
      }
      std::vector<ElementSet> orbits;
      for (ElementSet const& c : o.classes()) {
        if (contains(j, c.front())) {
          orbits.push_back(c);
        }
      }
      if (orbits.size() > orbit_limit) {
        throw BudgetExceeded("too many unit orbits in one J-class: "
                             + std::to_string(orbits.size()));
      }
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << orbits.size());
           ++mask) {
        ElementSet m = rest;
        for (std::size_t k = 0; k < orbits.size(); ++k) {
          if (mask >> k & 1) {
            m.insert(m.end(), orbits[k].begin(), orbits[k].end());
          }
        }
        consider(make_element_set(std::move(m)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! All maximal subsemigroups by testing every subset (at most 20
  //! elements).
  inline std::vector<ElementSet> maximal_subsemigroups_exhaustive(
      SemigroupUniverse const& u) {
    if (u.size() > 20) {
      throw BudgetExceeded("exhaustive subset search needs at most 20 "
                           "elements");
    }
    std::vector<ElementSet> closed;
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t(1) << u.size());
         ++mask) {
      ElementSet m;
      for (index_type i = 0; i < u.size(); ++i) {
        if (mask >> i & 1) {
          m.push_back(i);
        }
      }
      if (u.is_closed(m)) {
        closed.push_back(std::move(m));
      }
    }
    std::vector<ElementSet> out;
    for (ElementSet const& m : closed) {
      bool maximal = true;
      for (ElementSet const& k : closed) {
        if (k.size() > m.size()
            && std::includes(k.begin(), k.end(), m.begin(), m.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(m);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The checks
  ////////////////////////////////////////////////////////////////////////

  //! gamma_12^-1 lies outside <S_n, gamma_12, tau_12, xi_123, alpha_1>. The
  //! closure is contained in the first listed maximal subsemigroup; the
  //! elements of rank < n - 1 it misses are reported.
  inline Verdict check_irreducibility(SemigroupUniverse const& u) {
    std::size_t const n = u.degree();
    ElementSet        gens = units(u);
    for (Bipartition const& x :
         {gamma(n, 1, 2), tau(n, 1, 2), xi(n, 1, 2, 3), alpha(n, 1)}) {
      gens.push_back(index_or_throw(u, x));
    }
    ElementSet const c = closure_in(u, make_element_set(std::move(gens)));
    ElementSet const m = maximal_list(u).with_gamma;
    Verdict          v;
    v.note("closure has " + std::to_string(c.size()) + " of "
           + std::to_string(u.size()) + " elements");
    v.expect(!contains(c, index_or_throw(u, inverse(gamma(n, 1, 2)))),
             "gamma_12^-1 lies in the closure");
    v.expect(contains(c, index_or_throw(u, gamma(n, 1, 2))),
             "gamma_12 missing from the closure");
    v.expect(std::includes(m.begin(), m.end(), c.begin(), c.end()),
             "closure is not inside S_n u J_{n-1} u "
             "S_n{tau,alpha,gamma,xi}S_n");
    ElementSet const missed = set_difference(m, c);
    v.note("S_n u J_{n-1} u S_n{tau,alpha,gamma,xi}S_n has "
           + std::to_string(m.size()) + " elements; "
           + std::to_string(missed.size())
           + " of rank < n - 1 are not products of the generators"
           + (missed.empty() ? std::string()
                             : ", e.g. " + to_string(u.at(missed.front()))));
    return v;
  }

  //! For every non-unit u: <S_n, u, u^-1> is everything iff u lies in
  //! S_n {gamma_12, gamma_12^-1} S_n.
  inline Verdict check_generating_theorem(SemigroupUniverse const& u) {
    std::size_t const n = u.degree();
    ElementSet const  s = units(u);
    ElementSet const  g = double_coset_set(
        u,
        s,
        make_element_set({index_or_throw(u, gamma(n, 1, 2)),
                          index_or_throw(u, inverse(gamma(n, 1, 2)))}));
    Verdict     v;
    std::size_t tested = 0, generating = 0;
    for (index_type x = 0; x < u.size(); ++x) {
      if (contains(s, x)) {
        continue;
      }
      ++tested;
      ElementSet gens = s;
      gens.push_back(x);
      gens.push_back(u.inverse_of(x));
      bool const all
          = closure_in(u, make_element_set(std::move(gens))).size() == u.size();
      generating += all;
      v.expect(all == contains(g, x),
               to_string(u.at(x)) + (all ? " generates" : " does not generate")
                   + " but membership in S_n{gamma, gamma^-1}S_n is "
                   + (contains(g, x) ? "true" : "false"));
    }
    v.note(std::to_string(tested) + " non-units tested, "
           + std::to_string(generating) + " generate, |S_n gamma S_n u S_n "
           + "gamma^-1 S_n| = " + std::to_string(g.size()));
    return v;
  }

  inline Verdict check_maximal_subsemigroups(SemigroupUniverse const& u,
                                             bool completeness = true) {
    MaximalList const l = maximal_list(u);
    Verdict           v;
    v.expect(is_maximal_subsemigroup(u, l.with_gamma),
             "item with gamma is not a maximal subsemigroup");
    v.expect(is_maximal_subsemigroup(u, l.with_gamma_inverse),
             "item with gamma^-1 is not a maximal subsemigroup");
    for (ElementSet const& m : l.from_subgroups) {
      v.expect(is_maximal_subsemigroup(u, m),
               "G u J_n is not maximal for a subgroup of order "
                   + std::to_string(m.size() - ideal(u, u.degree()).size()));
      v.expect(is_maximal_inverse_subsemigroup(u, m),
               "G u J_n is not a maximal inverse subsemigroup");
    }
    v.expect(is_maximal_inverse_subsemigroup(u, l.inverse_item),
             "S_n u J_{n-1} u S_n{tau,alpha,xi}S_n is not a maximal inverse "
             "subsemigroup");
    v.expect(set_intersection(l.with_gamma, l.with_gamma_inverse)
                 == l.inverse_item,
             "the two gamma items do not meet in the inverse item");
    // <I*_n, I_n> by closure: an inverse subsemigroup inside the inverse
    // item, reported rather than asserted equal to it.
    ElementSet const gens = u.filter([](Bipartition const& a) {
      return is_member(Family::IStar, a) || is_member(Family::I, a);
    });
    ElementSet const generated = closure_in(u, gens);
    v.expect(std::includes(l.inverse_item.begin(),
                           l.inverse_item.end(),
                           generated.begin(),
                           generated.end()),
             "<I*_n, I_n> is not inside the inverse item");
    ElementSet const missed = set_difference(l.inverse_item, generated);
    v.note("<I*_n, I_n> has " + std::to_string(generated.size())
           + " elements"
           + (missed.empty()
                  ? std::string(", equal to the inverse item")
                  : ", missing e.g. " + to_string(u.at(missed.front()))));
    v.note("sizes: " + std::to_string(l.with_gamma.size()) + ", "
           + std::to_string(l.with_gamma_inverse.size()) + ", inverse item "
           + std::to_string(l.inverse_item.size()) + ", "
           + std::to_string(l.from_subgroups.size()) + " subgroup items");
    if (completeness) {
      std::vector<ElementSet> listed{l.with_gamma, l.with_gamma_inverse};
      listed.insert(
          listed.end(), l.from_subgroups.begin(), l.from_subgroups.end());
      std::sort(listed.begin(), listed.end());
      auto const found = maximal_subsemigroups_by_j_class(u);
      v.expect(found == listed,
               "search finds " + std::to_string(found.size())
                   + " maximal subsemigroups, the list has "
                   + std::to_string(listed.size()));
      v.note("J-class search found " + std::to_string(found.size())
             + " maximal subsemigroups");
    }
    return v;
  }

}  // namespace pistar

#endif  // PISTAR_GENERATION_HPP_
