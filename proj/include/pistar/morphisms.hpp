// pistar - exact computation in finite partition semigroups
//
// Automorphisms by backtracking search, and the effective transitive
// representation of an inverse semigroup on the right omega-cosets of a
// closed inverse subsemigroup, where omega is the natural partial order.

#ifndef PISTAR_MORPHISMS_HPP_
#define PISTAR_MORPHISMS_HPP_

#include <algorithm>  // for includes, find
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <map>        // for map
#include <set>        // for set
#include <string>     // for string, to_string
#include <tuple>      // for tuple
#include <vector>     // for vector

#include "bipartition.hpp"
#include "congruence.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "named.hpp"
#include "universe.hpp"
#include "verdict.hpp"

namespace pistar {

  ////////////////////////////////////////////////////////////////////////
  // Automorphisms
  ////////////////////////////////////////////////////////////////////////

  //! A bijection of the element indices of one universe; image[i] is the
  //! image of element i. The universe is not stored.
  struct AutMap {
    std::vector<index_type> image;

    bool operator==(AutMap const&) const = default;
    auto operator<=>(AutMap const&) const = default;
  };

  inline bool is_automorphism(SemigroupUniverse const& u, AutMap const& f) {
    if (f.image.size() != u.size()) {
      return false;
    }
    std::vector<char> hit(u.size(), 0);
    for (index_type y : f.image) {
      if (y >= u.size() || hit[y]) {
        return false;
      }
      hit[y] = 1;
    }
    for (index_type a = 0; a < u.size(); ++a) {
      for (index_type b = 0; b < u.size(); ++b) {
        if (f.image[u.mul(a, b)] != u.mul(f.image[a], f.image[b])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Moves every point x to pi(x) and x' to pi(x)'. Under star this is
  //! pi^-1 a pi with pi read as a unit.
  inline Bipartition relabel(Bipartition const& a, Permutation const& pi) {
    std::size_t const n = a.degree();
    if (pi.size() != n || !is_permutation(pi)) {
      throw InvalidArgument("relabel: not a permutation of degree "
                            + std::to_string(n));
    }
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const y = static_cast<std::size_t>(pi[x]);
      labels[y]           = a.label(x);
      labels[n + y]       = a.label(n + x);
    }
    return Bipartition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  //! The inner automorphism a -> pi^-1 a pi, checked to preserve products.
  inline AutMap conjugation_aut(Permutation const&       pi,
                                SemigroupUniverse const& u) {
    AutMap f;
    for (Bipartition const& a : u.elements()) {
      auto j = u.index_of(relabel(a, pi));
      if (!j) {
        throw InvalidArgument("conjugation leaves the universe");
      }
      f.image.push_back(*j);
    }
    if (!is_automorphism(u, f)) {
      throw InvalidArgument("conjugation is not an automorphism here");
    }
    return f;
  }

  namespace detail {
    //! Data preserved by every automorphism.
    inline std::vector<std::tuple<std::size_t,
                                  std::size_t,
                                  std::size_t,
                                  std::size_t,
                                  std::size_t>>
    automorphism_invariants(SemigroupUniverse const& u) {
      std::vector<std::tuple<std::size_t,
                             std::size_t,
                             std::size_t,
                             std::size_t,
                             std::size_t>>
          out;
      for (index_type a = 0; a < u.size(); ++a) {
        // index and period of a
        std::map<index_type, std::size_t> first;
        index_type                        p = a;
        std::size_t                       k = 1;
        while (first.emplace(p, k).second) {
          p = u.mul(p, a);
          ++k;
        }
        std::size_t const index = first[p], period = k - first[p];
        out.emplace_back(right_ideal(u, a).size(),
                         left_ideal(u, a).size(),
                         two_sided_ideal(u, a).size(),
                         index,
                         period);
      }
      return out;
    }
  }  // namespace detail

  //! Every automorphism of u, by backtracking over the images of a
  //! generating set. Candidate images share the invariants above; each
  //! partial assignment is extended to the subsemigroup it generates and
  //! rejected on a clash or a repeated image. Sorted.
  inline std::vector<AutMap> automorphisms(SemigroupUniverse const& u,
                                           std::size_t limit
                                           = kCongruenceLimit) {
    if (u.size() > limit || !u.has_table()) {
      throw BudgetExceeded("automorphisms: " + std::to_string(u.size())
                           + " elements exceed the limit of "
                           + std::to_string(limit));
    }
    index_type const        none = static_cast<index_type>(-1);
    std::size_t const       m    = u.size();
    ElementSet const        gens = generating_set(u);
    auto const              inv  = detail::automorphism_invariants(u);
    std::vector<AutMap>     out;
    std::vector<index_type> chosen;

    // Extends gens[i] -> chosen[i] to the subsemigroup they generate.
    auto extend = [&](std::vector<index_type>& phi) {
      std::vector<char>       used(m, 0);
      std::vector<index_type> queue;
      std::fill(phi.begin(), phi.end(), none);
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        index_type const g = gens[i], h = chosen[i];
        if (phi[g] == none) {
          if (used[h]) {
            return false;
          }
          phi[g] = h;
          used[h] = 1;
          queue.push_back(g);
        } else if (phi[g] != h) {
          return false;
        }
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        index_type const x = queue[q];
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          index_type const y = u.mul(x, gens[i]);
          index_type const z = u.mul(phi[x], chosen[i]);
          if (phi[y] == none) {
            if (used[z]) {
              return false;
            }
            phi[y]  = z;
            used[z] = 1;
            queue.push_back(y);
          } else if (phi[y] != z) {
            return false;
          }
        }
      }
      return true;
    };

    std::vector<index_type> phi(m);
    auto search = [&](auto&& self) -> void {
      if (chosen.size() == gens.size()) {
        if (extend(phi)) {
          AutMap f{phi};
          if (is_automorphism(u, f)) {
            out.push_back(std::move(f));
          }
        }
        return;
      }
      index_type const g = gens[chosen.size()];
      for (index_type h = 0; h < m; ++h) {
        if (inv[h] != inv[g]) {
          continue;
        }
        chosen.push_back(h);
        if (extend(phi)) {
          self(self);
        }
        chosen.pop_back();
      }
    };
    search(search);
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Every automorphism of PI*_n (star) or wPI*_n (circ) is a -> pi^-1 a pi
  //! for a unique pi in S_n.
  inline Verdict check_automorphisms(SemigroupUniverse const& u) {
    Verdict          v;
    auto const       found = automorphisms(u);
    std::set<AutMap> inner;
    for (Permutation const& pi : all_permutations(u.degree())) {
      inner.insert(conjugation_aut(pi, u));
    }
    v.note(std::to_string(found.size()) + " automorphisms found, "
           + std::to_string(inner.size()) + " inner");
    v.expect(std::set<AutMap>(found.begin(), found.end()) == inner,
             "the automorphisms are not exactly the conjugations");
    v.expect(inner.size() == all_permutations(u.degree()).size(),
             "distinct permutations give equal conjugations");
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // The natural partial order
  ////////////////////////////////////////////////////////////////////////

  //! a <= b iff a = (a a^-1) b.
  inline bool omega_leq(SemigroupUniverse const& u, index_type a, index_type b) {
    return u.mul(u.mul(a, u.inverse_of(a)), b) == a;
  }

  //! {b : a <= b}.
  inline ElementSet omega_up(SemigroupUniverse const& u, index_type a) {
    ElementSet out;
    for (index_type b = 0; b < u.size(); ++b) {
      if (omega_leq(u, a, b)) {
        out.push_back(b);
      }
    }
    return out;
  }

  //! X omega, the up-closure of X: b lies in it iff e b is in X for some
  //! idempotent e, since a <= b iff a = e b for an idempotent e.
  inline ElementSet omega_closure(SemigroupUniverse const& u,
                                  ElementSet const&        x) {
    ElementSet out;
    for (index_type b = 0; b < u.size(); ++b) {
      for (index_type e : u.idempotents()) {
        if (contains(x, u.mul(e, b))) {
          out.push_back(b);
          break;
        }
      }
    }
    return out;
  }

  inline bool is_closed_inverse_subsemigroup(SemigroupUniverse const& u,
                                             ElementSet const&        h) {
    if (h.empty() || !u.is_closed(h) || omega_closure(u, h) != h) {
      return false;
    }
    return std::all_of(h.begin(), h.end(), [&](index_type x) {
      return contains(h, u.inverse_of(x));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets and representations
  ////////////////////////////////////////////////////////////////////////

  //! (H x) omega.
  inline ElementSet right_coset(SemigroupUniverse const& u,
                                ElementSet const&        h,
                                index_type               x) {
    ElementSet hx;
    for (index_type a : h) {
      hx.push_back(u.mul(a, x));
    }
    return omega_closure(u, make_element_set(std::move(hx)));
  }

  struct CosetSpace {
    ElementSet H;
    //! The distinct (Hs) omega with s s^-1 in H, in order of first
    //! discovery over s.
    std::vector<ElementSet> cosets;
    //! representative[i] is the first s found with (Hs) omega = cosets[i].
    std::vector<index_type> representative;
    //! coset_of[s] is the position of (Hs) omega, or -1 when s s^-1 is not
    //! in H.
    std::vector<int> coset_of;

    std::size_t size() const noexcept {
      return cosets.size();
    }
  };

  //! The right omega-cosets of H. Elements s, t with s s^-1, t t^-1 in H
  //! are grouped by (Hs) omega = (Ht) omega iff s t^-1 in H, and each coset
  //! is computed once from its representative; check_coset_space compares
  //! the grouping with the sets themselves.
  inline CosetSpace coset_space(SemigroupUniverse const& u,
                                ElementSet const&        h) {
    if (!u.has_inverses() || !is_closed_inverse_subsemigroup(u, h)) {
      throw InvalidArgument("coset_space needs a closed inverse "
                            "subsemigroup");
    }
    CosetSpace        c;
    std::vector<char> in(u.size(), 0);
    for (index_type x : h) {
      in[x] = 1;
    }
    c.H = h;
    c.coset_of.assign(u.size(), -1);
    for (index_type s = 0; s < u.size(); ++s) {
      if (!in[u.mul(s, u.inverse_of(s))]) {
        continue;
      }
      for (std::size_t i = 0; i < c.representative.size(); ++i) {
        if (in[u.mul(s, u.inverse_of(c.representative[i]))]) {
          c.coset_of[s] = static_cast<int>(i);
          break;
        }
      }
      if (c.coset_of[s] < 0) {
        c.coset_of[s] = static_cast<int>(c.representative.size());
        c.representative.push_back(s);
        c.cosets.push_back(right_coset(u, h, s));
      }
    }
    return c;
  }

  //! Recomputes (Hs) omega for every s with s s^-1 in H and compares with
  //! the stored grouping; also checks the cosets are distinct.
  inline Verdict check_coset_space(SemigroupUniverse const& u,
                                   CosetSpace const&        c) {
    Verdict v;
    v.expect(std::set<ElementSet>(c.cosets.begin(), c.cosets.end()).size()
                 == c.size(),
             "two cosets coincide");
    for (index_type s = 0; s < u.size(); ++s) {
      bool const in = contains(c.H, u.mul(s, u.inverse_of(s)));
      if (!v.expect(in == (c.coset_of[s] >= 0), "coset domain is wrong")) {
        return v;
      }
      if (in
          && !v.expect(right_coset(u, c.H, s)
                           == c.cosets[static_cast<std::size_t>(
                               c.coset_of[s])],
                       "(Hs) omega differs from its recorded coset for s = "
                           + to_string(u.at(s)))) {
        return v;
      }
    }
    return v;
  }

  //! A partial map of {0, ..., degree - 1}; -1 means undefined.
  using PartialMap = std::vector<int>;

  //! phi_H: the image of every element as a partial injection of the
  //! cosets, numbered in discovery order.
  struct RepresentationMap {
    std::size_t             degree = 0;
    std::vector<PartialMap> images;
  };

  //! The element of I_k with lines {i, f(i)'}, points numbered from 1.
  inline Bipartition partial_injection(PartialMap const& f) {
    std::size_t const  n = f.size();
    std::vector<Block> blocks;
    PointSet           hit;
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] >= 0) {
        blocks.push_back({PointSet{static_cast<int>(i + 1)},
                          PointSet{f[i] + 1}});
        hit = hit | PointSet{f[i] + 1};
      } else {
        blocks.push_back({PointSet{static_cast<int>(i + 1)}, PointSet{}});
      }
    }
    for (int j : (PointSet::full(n) - hit).to_vector()) {
      blocks.push_back({PointSet{}, PointSet{j}});
    }
    return Bipartition::from_blocks(n, blocks);
  }

  inline RepresentationMap representation(SemigroupUniverse const& u,
                                          CosetSpace const&        c) {
    RepresentationMap r;
    r.degree = c.size();
    for (index_type s = 0; s < u.size(); ++s) {
      PartialMap f(c.size(), -1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        f[i] = c.coset_of[u.mul(c.representative[i], s)];
      }
      r.images.push_back(std::move(f));
    }
    return r;
  }

  inline RepresentationMap representation(SemigroupUniverse const& u,
                                          ElementSet const&        h) {
    return representation(u, coset_space(u, h));
  }

  inline bool is_faithful(RepresentationMap const& r) {
    std::set<PartialMap> distinct(r.images.begin(), r.images.end());
    return distinct.size() == r.images.size();
  }

  inline std::size_t image_size(RepresentationMap const& r) {
    return std::set<PartialMap>(r.images.begin(), r.images.end()).size();
  }

  //! Apply f, then g.
  inline PartialMap compose_partial(PartialMap const& f, PartialMap const& g) {
    PartialMap out(f.size(), -1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= 0) {
        out[i] = g[static_cast<std::size_t>(f[i])];
      }
    }
    return out;
  }

  inline bool is_partial_injection(PartialMap const& f) {
    std::vector<char> hit(f.size(), 0);
    for (int j : f) {
      if (j >= static_cast<int>(f.size())) {
        return false;
      } else if (j >= 0) {
        if (hit[static_cast<std::size_t>(j)]) {
          return false;
        }
        hit[static_cast<std::size_t>(j)] = 1;
      }
    }
    return true;
  }

  //! Every image is a partial injection and phi(a b) = phi(a) phi(b) for
  //! all pairs.
  inline Verdict check_representation(SemigroupUniverse const& u,
                                      RepresentationMap const& r) {
    Verdict v;
    for (index_type a = 0; a < u.size(); ++a) {
      if (!v.expect(is_partial_injection(r.images[a]),
                    "image is not a partial injection")) {
        return v;
      }
    }
    for (index_type a = 0; a < u.size(); ++a) {
      PartialMap const& f = r.images[a];
      for (index_type b = 0; b < u.size(); ++b) {
        PartialMap const& g  = r.images[b];
        PartialMap const& fg = r.images[u.mul(a, b)];
        for (std::size_t i = 0; i < r.degree; ++i) {
          int const expected = f[i] < 0 ? -1 : g[static_cast<std::size_t>(f[i])];
          if (fg[i] != expected) {
            v.fail("not a homomorphism at " + to_string(u.at(a)) + ", "
                   + to_string(u.at(b)));
            return v;
          }
        }
      }
    }
    return v;
  }

  //! Some a has a^-1 H a inside K and a K a^-1 inside H.
  inline bool representations_equivalent(SemigroupUniverse const& u,
                                          ElementSet const&        h,
                                          ElementSet const&        k) {
    for (index_type a = 0; a < u.size(); ++a) {
      index_type const ai = u.inverse_of(a);
      bool             ok = true;
      for (index_type x : h) {
        ok = ok && contains(k, u.mul(u.mul(ai, x), a));
      }
      for (index_type x : k) {
        ok = ok && contains(h, u.mul(u.mul(a, x), ai));
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  //! For every idempotent f of PI*_n or wPI*_n, n >= 2: H = (f) omega is
  //! closed inverse and phi_H is faithful iff rank(f) = 1, in which case
  //! there are 2^n - 1 cosets; for f = 0 the image is one element. The
  //! representations for rank-1 idempotents are homomorphisms and pairwise
  //! equivalent. With `exhaustive` every phi_H is also checked to be a
  //! homomorphism and every coset space is recomputed from the definition.
  inline Verdict check_faithful_representation(SemigroupUniverse const& u,
                                               bool exhaustive = true) {
    std::size_t const n = u.degree();
    if (n < 2) {
      throw InvalidArgument("check_faithful_representation needs n >= 2");
    }
    Verdict                 v;
    std::vector<ElementSet> rank_one;
    std::size_t const       degree = (std::size_t(1) << n) - 1;
    for (index_type f : u.idempotents()) {
      ElementSet const h = omega_up(u, f);
      std::string const name = to_string(u.at(f));
      if (!v.expect(is_closed_inverse_subsemigroup(u, h),
                    "f omega is not closed inverse for f = " + name)) {
        continue;
      }
      CosetSpace const        c     = coset_space(u, h);
      RepresentationMap const r     = representation(u, c);
      std::size_t const       rank  = u.at(f).rank();
      if (exhaustive) {
        v.merge(check_coset_space(u, c));
      }
      if (exhaustive || rank <= 1) {
        v.merge(check_representation(u, r));
      }
      v.expect(is_faithful(r) == (rank == 1),
               "faithfulness does not match rank(f) = 1 for f = " + name);
      if (rank == 0) {
        v.expect(image_size(r) == 1, "f = 0 gives more than one image");
      } else if (rank == 1) {
        rank_one.push_back(h);
        v.expect(c.size() == degree,
                 std::to_string(c.size()) + " cosets for f = " + name);
      }
    }
    for (ElementSet const& h : rank_one) {
      v.expect(representations_equivalent(u, rank_one.front(), h),
               "rank-1 representations are not all equivalent");
    }
    v.note(std::to_string(u.idempotents().size()) + " idempotents, "
           + std::to_string(rank_one.size())
           + " of rank 1 give faithful representations of degree "
           + std::to_string(degree));
    return v;
  }

}  // namespace pistar

#endif  // PISTAR_MORPHISMS_HPP_
