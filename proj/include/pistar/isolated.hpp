// pistar - exact computation in finite partition semigroups
//
// Isolated and completely isolated subsemigroups, found by exhaustive search
// in a universe with a Cayley table.
//
// T is completely isolated when ab in T implies a in T or b in T; T is
// isolated when a^k in T for some k >= 1 implies a in T. Both are taken to be
// non-empty subsemigroups.

#ifndef PISTAR_ISOLATED_HPP_
#define PISTAR_ISOLATED_HPP_

#include <algorithm>  // for sort, includes
#include <cstddef>    // for size_t
#include <cstdint>    // for int8_t
#include <set>        // for set
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "bipartition.hpp"
#include "congruence.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "generation.hpp"
#include "green.hpp"
#include "io.hpp"
#include "named.hpp"
#include "universe.hpp"
#include "verdict.hpp"

namespace pistar {

  //! Largest universe accepted by the searches here.
  inline constexpr std::size_t kIsolatedLimit = 200;

  namespace detail {
    inline void require_searchable(SemigroupUniverse const& u,
                                   std::size_t              limit,
                                   char const*              what) {
      if (u.size() > limit) {
        throw BudgetExceeded(std::string(what) + ": "
                             + std::to_string(u.size())
                             + " elements exceed the limit of "
                             + std::to_string(limit));
      }
      if (!u.has_table()) {
        throw BudgetExceeded(std::string(what) + " needs a Cayley table");
      }
    }

    inline std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      std::stable_sort(v.begin(), v.end(), [](auto const& x, auto const& y) {
        return x.size() > y.size();
      });
      return v;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Completely isolated
  ////////////////////////////////////////////////////////////////////////

  inline bool is_completely_isolated(SemigroupUniverse const& u,
                                     ElementSet const&        t) {
    if (t.empty() || !u.is_closed(t)) {
      return false;
    }
    return u.is_closed(set_difference(u.all(), t));
  }

  //! All completely isolated subsemigroups: T and its complement are both
  //! closed, so they are the 2-colourings in which equal colours propagate
  //! to products. Generators are decided first. Sorted by size, descending.
  inline std::vector<ElementSet>
  completely_isolated(SemigroupUniverse const& u,
                      std::size_t              limit = kIsolatedLimit) {
    detail::require_searchable(u, limit, "completely_isolated");
    std::size_t const       m = u.size();
    std::vector<index_type> order = generating_set(u);
    for (index_type x = 0; x < m; ++x) {
      if (!contains(order, x)) {
        order.push_back(x);
      }
    }
    std::vector<std::int8_t> colour(m, -1);
    std::vector<index_type>  trail;
    std::vector<ElementSet>  out;

    // Colours x with c and propagates; false on a conflict. Every change is
    // pushed onto trail so it can be undone.
    auto assign = [&](index_type x, std::int8_t c) {
      std::vector<index_type> queue{x};
      if (colour[x] != -1) {
        return colour[x] == c;
      }
      colour[x] = c;
      trail.push_back(x);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        index_type const a = queue[i];
        for (index_type b = 0; b < m; ++b) {
          if (colour[b] != colour[a]) {
            continue;
          }
          for (index_type p : {u.mul(a, b), u.mul(b, a)}) {
            if (colour[p] == -1) {
              colour[p] = colour[a];
              trail.push_back(p);
              queue.push_back(p);
            } else if (colour[p] != colour[a]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto undo = [&](std::size_t mark) {
      while (trail.size() > mark) {
        colour[trail.back()] = -1;
        trail.pop_back();
      }
    };
    auto search = [&](auto&& self, std::size_t i) -> void {
      while (i < m && colour[order[i]] != -1) {
        ++i;
      }
      if (i == m) {
        ElementSet t;
        for (index_type x = 0; x < m; ++x) {
          if (colour[x] == 0) {
            t.push_back(x);
          }
        }
        if (!t.empty()) {
          out.push_back(std::move(t));
        }
        return;
      }
      for (std::int8_t c : {std::int8_t(0), std::int8_t(1)}) {
        std::size_t const mark = trail.size();
        if (assign(order[i], c)) {
          self(self, i + 1);
        }
        undo(mark);
      }
    };
    search(search, 0);
    return detail::sorted_unique(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isolated
  ////////////////////////////////////////////////////////////////////////

  //! The closure operator whose closed sets are the isolated subsemigroups
  //! (and the empty set): close under products and under roots.
  class IsolatedClosure {
   public:
    explicit IsolatedClosure(SemigroupUniverse const& u)
        : _u(&u), _roots(u.size()) {
      for (index_type a = 0; a < u.size(); ++a) {
        // The distinct powers of a.
        std::vector<char> seen(u.size(), 0);
        for (index_type p = a; !seen[p]; p = u.mul(p, a)) {
          seen[p] = 1;
          _roots[p].push_back(a);
        }
      }
    }

    ElementSet operator()(ElementSet const& x) const {
      SemigroupUniverse const& u = *_u;
      std::vector<char>        in(u.size(), 0);
      std::vector<index_type>  all;
      auto                     add = [&](index_type y) {
        if (!in[y]) {
          in[y] = 1;
          all.push_back(y);
        }
      };
      for (index_type y : x) {
        add(y);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        index_type const y = all[i];
        for (std::size_t j = 0; j <= i; ++j) {
          add(u.mul(y, all[j]));
          add(u.mul(all[j], y));
        }
        for (index_type r : _roots[y]) {
          add(r);
        }
      }
      return make_element_set(std::move(all));
    }

   private:
    SemigroupUniverse const*             _u;
    std::vector<std::vector<index_type>> _roots;
  };

  inline bool is_isolated(SemigroupUniverse const& u, ElementSet const& t) {
    if (t.empty() || !u.is_closed(t)) {
      return false;
    }
    for (index_type a = 0; a < u.size(); ++a) {
      if (contains(t, a)) {
        continue;
      }
      std::vector<char> seen(u.size(), 0);
      for (index_type p = a; !seen[p]; p = u.mul(p, a)) {
        if (contains(t, p)) {
          return false;
        }
        seen[p] = 1;
      }
    }
    return true;
  }

  //! All isolated subsemigroups, as the non-empty closed sets of
  //! IsolatedClosure: each is reached from a smaller closed set by adding one
  //! element and closing. Sorted by size, descending.
  inline std::vector<ElementSet> isolated(SemigroupUniverse const& u,
                                          std::size_t limit = kIsolatedLimit) {
    detail::require_searchable(u, limit, "isolated");
    IsolatedClosure const   cl(u);
    std::set<ElementSet>    found;
    std::vector<ElementSet> frontier{ElementSet{}};
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (ElementSet const& c : frontier) {
        for (index_type a = 0; a < u.size(); ++a) {
          if (contains(c, a)) {
            continue;
          }
          ElementSet x = c;
          x.push_back(a);
          ElementSet y = cl(make_element_set(std::move(x)));
          if (found.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    return detail::sorted_unique({found.begin(), found.end()});
  }

  ////////////////////////////////////////////////////////////////////////
  // Expected lists
  ////////////////////////////////////////////////////////////////////////

  //! The elements of u lying in the family f.
  inline ElementSet family_part(SemigroupUniverse const& u, Family f) {
    return u.filter([f](Bipartition const& a) { return is_member(f, a); });
  }

  //! The universe S together with S_n and S \ S_n.
  inline std::vector<ElementSet> units_split(SemigroupUniverse const& u) {
    ElementSet const g = units(u);
    return {u.all(), g, set_difference(u.all(), g)};
  }

  //! I*_n, S_n, I*_n \ S_n and G(e) for the idempotents e of rank n - 1.
  inline std::vector<ElementSet>
  expected_isolated_istar(SemigroupUniverse const& u) {
    std::vector<ElementSet> out = units_split(u);
    for (index_type e : u.idempotents()) {
      if (u.at(e).rank() + 1 == u.degree()) {
        out.push_back(subgroup_G(u, e));
      }
    }
    return detail::sorted_unique(std::move(out));
  }

  //! wPI*_n, S_n, wPI*_n \ S_n and G(e) for the idempotents of corank <= 1.
  inline std::vector<ElementSet>
  expected_isolated_wpistar(SemigroupUniverse const& u) {
    std::vector<ElementSet> out = units_split(u);
    for (index_type e : u.idempotents()) {
      if (domain_data(u.at(e)).corank <= 1) {
        out.push_back(subgroup_G(u, e));
      }
    }
    return detail::sorted_unique(std::move(out));
  }

  //! For PI*_n, n >= 3:
  //! * I*_n, I*_n \ S_n, S_n and G(e), e in I*_n of rank n - 1;
  //! * for Y = N \ {t}: I*_Y, I*_Y \ S_Y, S_Y and G(e), e in I*_Y of rank
  //!   n - 2, where I*_Y is the elements whose generalised lines lie in
  //!   Y u Y' and cover it, t and t' being points;
  //! * PI*_n and PI*_n \ S_n.
  inline std::vector<ElementSet>
  expected_isolated_pistar(SemigroupUniverse const& u) {
    std::size_t const       n = u.degree();
    std::vector<ElementSet> out;
    auto                    add_istar = [&](ElementSet const& istar,
                         ElementSet const& group,
                         std::size_t       rank) {
      out.push_back(istar);
      out.push_back(group);
      out.push_back(set_difference(istar, group));
      for (index_type e : istar) {
        if (u.is_idempotent(e) && u.at(e).rank() == rank) {
          out.push_back(set_intersection(subgroup_G(u, e), istar));
        }
      }
    };
    ElementSet const istar = family_part(u, Family::IStar);
    add_istar(istar, units(u), n - 1);
    for (int t = 1; t <= static_cast<int>(n); ++t) {
      PointSet const y = PointSet::full(n) - PointSet{t};
      ElementSet     istar_y, s_y;
      for (index_type a = 0; a < u.size(); ++a) {
        Bipartition const& x = u.at(a);
        if (!is_invariant(x, y)) {
          continue;
        }
        DomainData const d = domain_data(x);
        if (d.codom != PointSet{t} || d.coran != PointSet{t}) {
          continue;
        }
        istar_y.push_back(a);
        if (d.rank == n - 1) {
          s_y.push_back(a);
        }
      }
      add_istar(istar_y, s_y, n - 2);
    }
    out.push_back(u.all());
    out.push_back(set_difference(u.all(), units(u)));
    return detail::sorted_unique(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  //! For the group of units G (here S_n), with S \ G closed: G is completely
  //! isolated, every completely isolated T contains G or misses it, and
  //! T -> T u G is a bijection from those missing G onto those properly
  //! containing G.
  inline Verdict units_split_check(SemigroupUniverse const& u) {
    Verdict          v;
    ElementSet const g    = units(u);
    ElementSet const rest = set_difference(u.all(), g);
    if (!v.expect(!g.empty() && is_group(u, g), "S_n is not a group here")
        || !v.expect(u.is_closed(rest), "S \\ S_n is not closed")) {
      return v;
    }
    auto const           list = completely_isolated(u);
    std::set<ElementSet> all(list.begin(), list.end());
    v.expect(all.count(g) == 1, "S_n is not completely isolated");
    std::set<ElementSet> missing, containing;
    for (ElementSet const& t : list) {
      ElementSet const meet = set_intersection(t, g);
      if (meet.empty()) {
        missing.insert(t);
      } else if (meet == g) {
        if (t != g) {
          containing.insert(t);
        }
      } else {
        v.fail("completely isolated set meets S_n partially: "
               + std::to_string(t.size()) + " elements");
      }
    }
    std::set<ElementSet> image;
    for (ElementSet const& t : missing) {
      image.insert(set_union(t, g));
    }
    v.expect(image == containing,
             "T -> T u S_n is not a bijection onto the sets containing S_n");
    v.note(std::to_string(list.size()) + " completely isolated: "
           + std::to_string(missing.size()) + " miss S_n, "
           + std::to_string(containing.size()) + " properly contain it");
    return v;
  }

  namespace detail {
    inline std::string sizes(std::vector<ElementSet> const& v) {
      std::string s;
      for (ElementSet const& t : v) {
        s += (s.empty() ? "" : ", ") + std::to_string(t.size());
      }
      return "[" + s + "]";
    }

    inline void compare_lists(Verdict&                       v,
                              std::string const&             what,
                              std::vector<ElementSet> const& found,
                              std::vector<ElementSet> const& expected) {
      v.note(what + ": found sizes " + sizes(found) + ", expected sizes "
             + sizes(expected));
      v.expect(std::set<ElementSet>(found.begin(), found.end())
                   == std::set<ElementSet>(expected.begin(), expected.end()),
               what + " differs from the expected list");
    }
  }  // namespace detail

  //! The completely isolated subsemigroups of I*_n, PI*_n and wPI*_n are
  //! S, S_n and S \ S_n; the isolated ones are the expected lists above.
  inline Verdict check_isolated(std::size_t n) {
    if (n < 2 || n > 3) {
      throw InvalidArgument("check_isolated needs 2 <= n <= 3");
    }
    Verdict     v;
    std::string suffix = "_" + std::to_string(n);
    auto const  i  = enumerate_family(Family::IStar, n, Product::Natural);
    auto const  p  = enumerate_family(Family::PIStar, n, Product::Star);
    auto const  w  = enumerate_family(Family::PIStar, n, Product::Circ);
    for (auto const& [name, u] : {std::pair{"I*", &i},
                                  std::pair{"PI*", &p},
                                  std::pair{"wPI*", &w}}) {
      auto const ci = completely_isolated(*u);
      detail::compare_lists(v,
                            std::string("completely isolated in ") + name
                                + suffix,
                            ci,
                            detail::sorted_unique(units_split(*u)));
      auto const is = isolated(*u);
      for (ElementSet const& t : ci) {
        v.expect(std::find(is.begin(), is.end(), t) != is.end(),
                 "a completely isolated set is not isolated");
      }
      v.merge(units_split_check(*u));
    }
    detail::compare_lists(v,
                          "isolated in I*" + suffix,
                          isolated(i),
                          expected_isolated_istar(i));
    detail::compare_lists(v,
                          "isolated in wPI*" + suffix,
                          isolated(w),
                          expected_isolated_wpistar(w));
    if (n >= 3) {
      detail::compare_lists(v,
                            "isolated in PI*" + suffix,
                            isolated(p),
                            expected_isolated_pistar(p));
    } else {
      v.note("isolated in PI*_2: " + std::to_string(isolated(p).size())
             + " sets (the listed classification needs n >= 3)");
    }
    return v;
  }

}  // namespace pistar

#endif  // PISTAR_ISOLATED_HPP_
