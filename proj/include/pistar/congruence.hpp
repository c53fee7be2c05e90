// pistar - exact computation in finite partition semigroups
//
// Congruences: the full lattice by brute force, normal congruences on the
// semilattice of idempotents, congruence pairs (kernel and trace), and the
// explicit congruences rho_{k,A} of I*_n and PI*_n.
//
// rho_{k,A} glues every element of rank at most k into one class and, on
// rank k + 1, relates H-related x and y whenever x y^-1 lies in the copy of
// the normal subgroup A of S_{k+1} inside the group H-class of x x^-1.

#ifndef PISTAR_CONGRUENCE_HPP_
#define PISTAR_CONGRUENCE_HPP_

#include <algorithm>  // for sort, stable_sort
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <set>        // for set
#include <string>     // for string, to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "bipartition.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "groups.hpp"
#include "io.hpp"
#include "named.hpp"
#include "universe.hpp"
#include "verdict.hpp"

namespace pistar {

  //! Largest universe accepted by enumerate_congruences.
  inline constexpr std::size_t kCongruenceLimit = 200;

  //! A small generating set, chosen greedily from the highest rank down.
  inline ElementSet generating_set(SemigroupUniverse const& u) {
    std::vector<index_type> order(u.size());
    std::iota(order.begin(), order.end(), index_type(0));
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return u.at(x).rank() > u.at(y).rank();
    });
    ElementSet gens, closed;
    for (index_type x : order) {
      if (!contains(closed, x)) {
        gens.push_back(x);
        gens   = make_element_set(std::move(gens));
        closed = closure_in(u, gens);
      }
    }
    return gens;
  }

  //! The least congruence containing the given pairs, by saturating under
  //! left and right translation by the generators.
  inline EquivRelation
  congruence_generated_by(SemigroupUniverse const&                          u,
                          ElementSet const&                                 gens,
                          std::vector<std::pair<index_type, index_type>> pairs) {
    std::vector<index_type> parent(u.size());
    std::iota(parent.begin(), parent.end(), index_type(0));
    auto find = [&](index_type x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    while (!pairs.empty()) {
      auto const [x, y] = pairs.back();
      pairs.pop_back();
      index_type const rx = find(x), ry = find(y);
      if (rx == ry) {
        continue;
      }
      parent[rx] = ry;
      for (index_type s : gens) {
        pairs.emplace_back(u.mul(x, s), u.mul(y, s));
        pairs.emplace_back(u.mul(s, x), u.mul(s, y));
      }
    }
    for (index_type i = 0; i < u.size(); ++i) {
      parent[i] = find(i);
    }
    return EquivRelation::from_keys(parent);
  }

  //! Every congruence on u: principal congruences for all pairs, then joins
  //! until nothing new appears. Sorted by number of classes, descending, so
  //! the trivial congruence comes first.
  inline std::vector<EquivRelation>
  enumerate_congruences(SemigroupUniverse const& u,
                        std::size_t              limit = kCongruenceLimit) {
    if (u.size() > limit) {
      throw BudgetExceeded("enumerate_congruences: " + std::to_string(u.size())
                           + " elements exceed the limit of "
                           + std::to_string(limit));
    }
    if (!u.has_table()) {
      throw BudgetExceeded("enumerate_congruences needs a Cayley table");
    }
    ElementSet const        gens = generating_set(u);
    std::set<EquivRelation> found{EquivRelation::trivial(u.size())};
    std::vector<EquivRelation> principal;
    for (index_type a = 0; a < u.size(); ++a) {
      for (index_type b = a + 1; b < u.size(); ++b) {
        EquivRelation r = congruence_generated_by(u, gens, {{a, b}});
        if (found.insert(r).second) {
          principal.push_back(std::move(r));
        }
      }
    }
    std::vector<EquivRelation> frontier = principal;
    while (!frontier.empty()) {
      std::vector<EquivRelation> next;
      for (EquivRelation const& r : frontier) {
        for (EquivRelation const& p : principal) {
          EquivRelation j = r.join(p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<EquivRelation> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.number_of_classes() > y.number_of_classes();
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents
  ////////////////////////////////////////////////////////////////////////

  //! Position of an idempotent inside u.idempotents().
  inline std::size_t idempotent_position(SemigroupUniverse const& u,
                                         index_type               e) {
    auto const& es = u.idempotents();
    auto        it = std::lower_bound(es.begin(), es.end(), e);
    if (it == es.end() || *it != e) {
      throw InvalidArgument("element is not idempotent");
    }
    return static_cast<std::size_t>(it - es.begin());
  }

  //! The semilattice E(u) as a universe of its own, in the order of
  //! u.idempotents().
  inline SemigroupUniverse idempotent_universe(SemigroupUniverse const& u) {
    std::vector<Bipartition> es;
    for (index_type e : u.idempotents()) {
      es.push_back(u.at(e));
    }
    return SemigroupUniverse(u.product(), std::move(es));
  }

  //! Lambda, an equivalence on the positions of u.idempotents(), is normal
  //! when e Lambda f implies s^-1 e s Lambda s^-1 f s for every s.
  inline bool is_normal_on_idempotents(SemigroupUniverse const& u,
                                       EquivRelation const&     lambda) {
    auto const& es = u.idempotents();
    for (ElementSet const& c : lambda.classes()) {
      for (std::size_t t = 1; t < c.size(); ++t) {
        index_type const e = es[c[0]], f = es[c[t]];
        for (index_type s = 0; s < u.size(); ++s) {
          index_type const si = u.inverse_of(s);
          if (!lambda.related(
                  idempotent_position(u, u.mul(u.mul(si, e), s)),
                  idempotent_position(u, u.mul(u.mul(si, f), s)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Every normal congruence on E(u).
  inline std::vector<EquivRelation>
  normal_congruences_on_idempotents(SemigroupUniverse const& u) {
    std::vector<EquivRelation> out;
    for (EquivRelation& r : enumerate_congruences(idempotent_universe(u))) {
      if (is_normal_on_idempotents(u, r)) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  //! iota u (E^(k) x E^(k)), E^(k) the idempotents of rank at most k.
  inline EquivRelation idempotent_rank_congruence(SemigroupUniverse const& u,
                                                  std::size_t              k) {
    auto const&             es = u.idempotents();
    std::vector<index_type> key(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
      key[i] = u.at(es[i]).rank() <= k ? 0 : static_cast<index_type>(i + 1);
    }
    return EquivRelation::from_keys(key);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence pairs
  ////////////////////////////////////////////////////////////////////////

  struct CongruencePair {
    //! The kernel: a normal subsemigroup containing every idempotent.
    ElementSet K;
    //! The trace, on the positions of u.idempotents().
    EquivRelation Lambda;

    bool operator==(CongruencePair const&) const = default;
  };

  //! Kernel (union of the classes meeting E) and trace of a congruence.
  inline CongruencePair kernel_trace(SemigroupUniverse const& u,
                                     EquivRelation const&     rho) {
    std::vector<char> marked(rho.number_of_classes(), 0);
    for (index_type e : u.idempotents()) {
      marked[rho.class_of(e)] = 1;
    }
    CongruencePair p;
    for (index_type a = 0; a < u.size(); ++a) {
      if (marked[rho.class_of(a)]) {
        p.K.push_back(a);
      }
    }
    std::vector<index_type> key;
    for (index_type e : u.idempotents()) {
      key.push_back(rho.class_of(e));
    }
    p.Lambda = EquivRelation::from_keys(key);
    return p;
  }

  //! Checks every condition in the definition of a congruence pair.
  inline Verdict check_congruence_pair(SemigroupUniverse const& u,
                                       CongruencePair const&    p) {
    Verdict     v;
    auto const& es = u.idempotents();
    if (p.Lambda.size() != es.size()) {
      v.fail("trace has the wrong size");
      return v;
    }
    for (index_type e : es) {
      if (!v.expect(contains(p.K, e),
                    "idempotent " + to_string(u.at(e)) + " outside K")) {
        return v;
      }
    }
    if (!v.expect(u.is_closed(p.K), "K is not a subsemigroup")) {
      return v;
    }
    for (index_type s = 0; s < u.size(); ++s) {
      index_type const si = u.inverse_of(s);
      for (index_type k : p.K) {
        if (!v.expect(contains(p.K, u.mul(u.mul(si, k), s)),
                      "K is not normal: " + to_string(u.at(s)))) {
          return v;
        }
      }
    }
    if (!v.expect(is_congruence(idempotent_universe(u), p.Lambda),
                  "trace is not a congruence on E")
        || !v.expect(is_normal_on_idempotents(u, p.Lambda),
                     "trace is not normal")) {
      return v;
    }
    // a e in K and e Lambda a^-1 a imply a in K.
    for (index_type a = 0; a < u.size(); ++a) {
      if (contains(p.K, a)) {
        continue;
      }
      std::size_t const aa = idempotent_position(u, u.mul(u.inverse_of(a), a));
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (!v.expect(!(contains(p.K, u.mul(a, es[i]))
                        && p.Lambda.related(i, aa)),
                      "a e in K, e Lambda a^-1 a, a outside K for a = "
                          + to_string(u.at(a)))) {
          return v;
        }
      }
    }
    // k in K implies k k^-1 Lambda k^-1 k.
    for (index_type k : p.K) {
      index_type const ki = u.inverse_of(k);
      v.expect(p.Lambda.related(idempotent_position(u, u.mul(k, ki)),
                                idempotent_position(u, u.mul(ki, k))),
               "k k^-1 and k^-1 k not related for k = " + to_string(u.at(k)));
    }
    return v;
  }

  inline bool is_congruence_pair(SemigroupUniverse const& u,
                                 CongruencePair const&    p) {
    return check_congruence_pair(u, p).ok;
  }

  //! The congruence of a congruence pair: a rho b iff a^-1 a Lambda b^-1 b
  //! and a b^-1 in K.
  inline EquivRelation congruence_of_pair(SemigroupUniverse const& u,
                                          CongruencePair const&    p) {
    std::vector<index_type> id(u.size());
    std::iota(id.begin(), id.end(), index_type(0));
    for (index_type a = 0; a < u.size(); ++a) {
      if (id[a] != a) {
        continue;
      }
      std::size_t const ea = idempotent_position(u, u.mul(u.inverse_of(a), a));
      for (index_type b = a + 1; b < u.size(); ++b) {
        index_type const bi = u.inverse_of(b);
        if (p.Lambda.related(ea, idempotent_position(u, u.mul(bi, b)))
            && contains(p.K, u.mul(a, bi))) {
          id[b] = a;
        }
      }
    }
    return EquivRelation::from_keys(id);
  }

  ////////////////////////////////////////////////////////////////////////
  // rho_{k,A}
  ////////////////////////////////////////////////////////////////////////

  struct RhoSpec {
    std::size_t k = 1;
    //! A normal subgroup of S_{k+1}.
    PermGroup A;
  };

  //! Normal subgroups of S_m. For m >= 5 these are {1}, A_m and S_m.
  inline std::vector<PermGroup> normal_subgroups_of_symmetric(std::size_t m) {
    if (m <= 4) {
      return normal_subgroups(m);
    }
    return {trivial_group(m), alternating(m), symmetric(m)};
  }

  //! Smallest k allowed for the family: 1 for I*_n, 0 for PI*_n.
  inline std::size_t rho_min_k(Family f) {
    if (f == Family::IStar) {
      return 1;
    } else if (f == Family::PIStar) {
      return 0;
    }
    throw InvalidArgument("rho_{k,A} is defined for I* and PI* only");
  }

  //! All (k, A) for the family at degree n.
  inline std::vector<RhoSpec> rho_specs(Family f, std::size_t n) {
    std::vector<RhoSpec> out;
    for (std::size_t k = rho_min_k(f); k <= n; ++k) {
      for (PermGroup& a : normal_subgroups_of_symmetric(k + 1)) {
        out.push_back({k, std::move(a)});
      }
    }
    return out;
  }

  //! The permutation of the blocks of dom(g), sorted by minimal point, for a
  //! group element g with dom(g) = ran(g).
  inline Permutation block_permutation(Bipartition const& g) {
    DomainData const d = domain_data(g);
    if (d.dom != d.ran) {
      throw InvalidArgument("block_permutation needs dom = ran");
    }
    Permutation p(d.rank);
    for (Block const& b : g.blocks()) {
      if (!b.is_generalised_line()) {
        continue;
      }
      auto pos = [&](PointSet x) {
        return static_cast<int>(
            std::find(d.dom.begin(), d.dom.end(), x) - d.dom.begin());
      };
      p[pos(b.top)] = pos(b.bottom);
    }
    return p;
  }

  inline EquivRelation build_rho(SemigroupUniverse const& u,
                                 RhoSpec const&           spec,
                                 Family                   f) {
    std::size_t const n = u.degree();
    if (spec.k < rho_min_k(f) || spec.k > n) {
      throw InvalidArgument("rho_{k,A}: k = " + std::to_string(spec.k)
                            + " out of range");
    }
    std::size_t const m = spec.k + 1;
    if (!is_subgroup(m, spec.A) || !is_normal(m, spec.A)) {
      throw InvalidArgument("rho_{k,A}: A is not a normal subgroup of S_"
                            + std::to_string(m));
    }
    if (!u.has_inverses()) {
      throw InvalidArgument("rho_{k,A} needs an inverse semigroup");
    }
    EquivRelation const     h = green_classes(u, GreenRelation::H);
    std::vector<index_type> id(u.size());
    std::iota(id.begin(), id.end(), index_type(0));
    index_type low = static_cast<index_type>(-1);
    for (index_type x = 0; x < u.size(); ++x) {
      std::size_t const r = u.at(x).rank();
      if (r <= spec.k) {
        if (low == static_cast<index_type>(-1)) {
          low = x;
        }
        id[x] = low;
      } else if (r == m && id[x] == x) {
        for (index_type y = x + 1; y < u.size(); ++y) {
          if (h.related(x, y)
              && group_contains(
                  spec.A,
                  block_permutation(u.at(u.mul(x, u.inverse_of(y)))))) {
            id[y] = x;
          }
        }
      }
    }
    EquivRelation rho = EquivRelation::from_keys(id);
    if (!is_congruence(u, rho)) {
      throw InvalidArgument("rho_{k,A} is not a congruence on this universe");
    }
    return rho;
  }

  //! {rho_{k,A}} over every spec, without repeats.
  inline std::vector<EquivRelation> all_rho(SemigroupUniverse const& u,
                                            Family                   f) {
    std::set<EquivRelation> out;
    for (RhoSpec const& s : rho_specs(f, u.degree())) {
      out.insert(build_rho(u, s, f));
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // The classification, checked
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::set<EquivRelation> as_set(std::vector<EquivRelation> const& v) {
      return {v.begin(), v.end()};
    }
  }  // namespace detail

  //! For I*_n (natural) or PI*_n (star), n in {1, 2, 3}:
  //! * the congruences found by brute force are exactly the rho_{k,A};
  //! * the normal congruences on E are iota u (E^(k) x E^(k));
  //! * every congruence has a congruence pair as kernel and trace and is
  //!   recovered from it;
  //! * for PI*_n, wPI*_n (circ) has the same congruences.
  inline Verdict check_congruence_theorem(Family f, std::size_t n) {
    if (n < 1 || n > 3) {
      throw InvalidArgument("check_congruence_theorem needs 1 <= n <= 3");
    }
    rho_min_k(f);
    SemigroupUniverse const u = enumerate_family(f, n, default_product(f));
    Verdict                 v;
    auto const              lattice = enumerate_congruences(u);
    auto const              rhos    = all_rho(u, f);
    v.note(std::string(family_name(f)) + "_" + std::to_string(n) + ": "
           + std::to_string(u.size()) + " elements, "
           + std::to_string(lattice.size()) + " congruences, "
           + std::to_string(rho_specs(f, n).size()) + " specs giving "
           + std::to_string(rhos.size()) + " distinct rho_{k,A}");
    v.expect(detail::as_set(lattice) == detail::as_set(rhos),
             "the congruences differ from the rho_{k,A}");

    std::set<EquivRelation> expected_lambda;
    for (std::size_t k = rho_min_k(f); k <= n; ++k) {
      expected_lambda.insert(idempotent_rank_congruence(u, k));
    }
    auto const lambdas = normal_congruences_on_idempotents(u);
    v.note(std::to_string(lambdas.size())
           + " normal congruences on E, of "
           + std::to_string(u.idempotents().size()) + " idempotents");
    v.expect(detail::as_set(lambdas) == expected_lambda,
             "normal congruences on E are not iota u (E^(k) x E^(k))");

    for (EquivRelation const& rho : lattice) {
      CongruencePair const p = kernel_trace(u, rho);
      Verdict const        c = check_congruence_pair(u, p);
      v.merge(c);
      v.expect(!c.ok || congruence_of_pair(u, p) == rho,
               "a congruence is not recovered from its kernel and trace");
    }

    if (f == Family::PIStar) {
      SemigroupUniverse const w  = enumerate_family(f, n, Product::Circ);
      auto const              wl = enumerate_congruences(w);
      v.note("wPI*_" + std::to_string(n) + ": " + std::to_string(wl.size())
             + " congruences");
      v.expect(detail::as_set(wl) == detail::as_set(lattice),
               "congruences of PI*_n and wPI*_n differ");
    }
    return v;
  }

}  // namespace pistar

#endif  // PISTAR_CONGRUENCE_HPP_
