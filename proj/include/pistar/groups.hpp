// pistar - exact computation in finite partition semigroups
//
// Subgroups of the symmetric group S_m for small m, as sorted lists of
// permutations.

#ifndef PISTAR_GROUPS_HPP_
#define PISTAR_GROUPS_HPP_

#include <algorithm>  // for sort, unique, includes, binary_search
#include <cstddef>    // for size_t
#include <set>        // for set
#include <vector>     // for vector

#include "error.hpp"
#include "named.hpp"

namespace pistar {

  //! A subgroup of S_m, sorted lexicographically.
  using PermGroup = std::vector<Permutation>;

  inline bool group_contains(PermGroup const& g, Permutation const& p) {
    return std::binary_search(g.begin(), g.end(), p);
  }

  //! The subgroup generated by gens inside S_m.
  inline PermGroup generate_group(std::size_t                     m,
                                  std::vector<Permutation> const& gens) {
    std::set<Permutation>    seen{identity_permutation(m)};
    std::vector<Permutation> queue{identity_permutation(m)};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Permutation const& g : gens) {
        Permutation p = compose(queue[i], g);
        if (seen.insert(p).second) {
          queue.push_back(p);
        }
      }
    }
    return PermGroup(seen.begin(), seen.end());
  }

  inline PermGroup symmetric(std::size_t m) {
    return all_permutations(m);
  }

  inline PermGroup alternating(std::size_t m) {
    PermGroup out;
    for (Permutation const& p : all_permutations(m)) {
      if (is_even(p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  inline PermGroup trivial_group(std::size_t m) {
    return {identity_permutation(m)};
  }

  //! The Klein four-group {id, (12)(34), (13)(24), (14)(23)} inside S_4.
  inline PermGroup klein_four() {
    return PermGroup{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  }

  inline bool is_subgroup(std::size_t m, PermGroup const& h) {
    if (!group_contains(h, identity_permutation(m))) {
      return false;
    }
    for (Permutation const& a : h) {
      for (Permutation const& b : h) {
        if (!group_contains(h, compose(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_normal(std::size_t m, PermGroup const& h) {
    for (Permutation const& g : all_permutations(m)) {
      Permutation const gi = inverse(g);
      for (Permutation const& x : h) {
        if (!group_contains(h, compose(compose(gi, x), g))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every subgroup of S_m, found as joins of cyclic subgroups until no new
  //! subgroup appears. Sorted by size, then lexicographically.
  inline std::vector<PermGroup> all_subgroups(std::size_t m) {
    std::set<PermGroup> found;
    for (Permutation const& p : all_permutations(m)) {
      found.insert(generate_group(m, {p}));
    }
    std::vector<PermGroup> cyclic(found.begin(), found.end());
    std::vector<PermGroup> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<PermGroup> next;
      for (PermGroup const& h : frontier) {
        for (PermGroup const& c : cyclic) {
          std::vector<Permutation> gens(h.begin(), h.end());
          gens.insert(gens.end(), c.begin(), c.end());
          PermGroup j = generate_group(m, gens);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<PermGroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.size() < y.size();
    });
    return out;
  }

  namespace detail {
    inline void require_small(std::size_t m) {
      if (m == 0 || m > 4) {
        throw InvalidArgument("subgroup tables cover 1 <= m <= 4");
      }
    }

    inline PermGroup sorted(PermGroup g) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      return g;
    }
  }  // namespace detail

  //! The normal subgroups of S_m for m <= 4: {1}, A_m, S_m and, for m = 4,
  //! the Klein four-group. Duplicates (e.g. A_2 = {1}) are removed.
  inline std::vector<PermGroup> normal_subgroups(std::size_t m) {
    detail::require_small(m);
    std::set<PermGroup> out{trivial_group(m), alternating(m), symmetric(m)};
    if (m == 4) {
      out.insert(klein_four());
    }
    std::vector<PermGroup> v(out.begin(), out.end());
    std::stable_sort(v.begin(), v.end(), [](auto const& x, auto const& y) {
      return x.size() < y.size();
    });
    return v;
  }

  //! The maximal subgroups of S_m for m <= 4.
  //!
  //! * S_1: none;
  //! * S_2: the trivial group;
  //! * S_3: A_3 and the three subgroups of order 2;
  //! * S_4: A_4, the three dihedral groups of order 8 and the four point
  //!   stabilizers (copies of S_3).
  inline std::vector<PermGroup> maximal_subgroups(std::size_t m) {
    detail::require_small(m);
    std::vector<PermGroup> out;
    if (m == 2) {
      out.push_back(trivial_group(2));
    } else if (m == 3) {
      out.push_back(alternating(3));
      out.push_back(generate_group(3, {{1, 0, 2}}));
      out.push_back(generate_group(3, {{2, 1, 0}}));
      out.push_back(generate_group(3, {{0, 2, 1}}));
    } else if (m == 4) {
      out.push_back(alternating(4));
      // Dihedral groups: stabilizers of the three splittings into pairs.
      out.push_back(generate_group(4, {{1, 0, 2, 3}, {2, 3, 0, 1}}));
      out.push_back(generate_group(4, {{2, 1, 0, 3}, {1, 0, 3, 2}}));
      out.push_back(generate_group(4, {{3, 1, 2, 0}, {1, 0, 3, 2}}));
      for (int fixed = 0; fixed < 4; ++fixed) {
        PermGroup h;
        for (Permutation const& p : all_permutations(4)) {
          if (p[static_cast<std::size_t>(fixed)] == fixed) {
            h.push_back(p);
          }
        }
        out.push_back(h);
      }
    }
    for (PermGroup& g : out) {
      g = detail::sorted(std::move(g));
    }
    return out;
  }

  //! Maximal subgroups found from all_subgroups by inclusion.
  inline std::vector<PermGroup> maximal_subgroups_by_search(std::size_t m) {
    std::vector<PermGroup> const all  = all_subgroups(m);
    PermGroup const              full = symmetric(m);
    std::vector<PermGroup>       out;
    for (PermGroup const& h : all) {
      if (h == full) {
        continue;
      }
      bool maximal = true;
      for (PermGroup const& k : all) {
        if (k != h && k != full && k.size() > h.size()
            && std::includes(k.begin(), k.end(), h.begin(), h.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(h);
      }
    }
    return out;
  }

  inline std::vector<PermGroup> normal_subgroups_by_search(std::size_t m) {
    std::vector<PermGroup> out;
    for (PermGroup const& h : all_subgroups(m)) {
      if (is_normal(m, h)) {
        out.push_back(h);
      }
    }
    return out;
  }

}  // namespace pistar

#endif  // PISTAR_GROUPS_HPP_
