// pistar - exact computation in finite partition semigroups
//
// Green's relations, ideals, maximal subgroups and the maximal
// idempotent-separating congruence mu.
//
// In PI*_n (star), wPI*_n (circ) and I*_n (natural) the relations are read
// off the domain data: a R b iff dom(a) = dom(b), a L b iff ran(a) = ran(b),
// a D b iff a J b iff rank(a) = rank(b). green_oracle recomputes them from
// principal one-sided and two-sided ideals of the Cayley table.

#ifndef PISTAR_GREEN_HPP_
#define PISTAR_GREEN_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "bipartition.hpp"
#include "error.hpp"
#include "named.hpp"
#include "universe.hpp"

namespace pistar {

  enum class GreenRelation { R, L, H, D, J };

  inline char const* green_name(GreenRelation g) noexcept {
    switch (g) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::H:
        return "H";
      case GreenRelation::D:
        return "D";
      case GreenRelation::J:
        return "J";
    }
    return "?";
  }

  namespace detail {
    inline std::vector<std::uint32_t> partition_key(
        std::vector<PointSet> const& blocks) {
      std::vector<std::uint32_t> key;
      for (PointSet b : blocks) {
        key.push_back(b.bits());
      }
      return key;
    }
  }  // namespace detail

  //! Structural Green's relations from dom, ran and rank.
  inline EquivRelation green_classes(SemigroupUniverse const& u,
                                     GreenRelation            which) {
    using Key = std::vector<std::uint32_t>;
    std::vector<Key> keys;
    keys.reserve(u.size());
    for (Bipartition const& a : u.elements()) {
      DomainData const d = domain_data(a);
      Key              k;
      switch (which) {
        case GreenRelation::R:
          k = detail::partition_key(d.dom);
          break;
        case GreenRelation::L:
          k = detail::partition_key(d.ran);
          break;
        case GreenRelation::H:
          k = detail::partition_key(d.dom);
          k.push_back(0);  // separator; no block is empty
          for (auto x : detail::partition_key(d.ran)) {
            k.push_back(x);
          }
          break;
        case GreenRelation::D:
        case GreenRelation::J:
          k = {static_cast<std::uint32_t>(d.rank)};
          break;
      }
      keys.push_back(std::move(k));
    }
    return EquivRelation::from_keys(keys);
  }

  //! Principal right ideal a S^1 as a sorted set.
  inline ElementSet right_ideal(SemigroupUniverse const& u, index_type a) {
    ElementSet s{a};
    for (index_type x = 0; x < u.size(); ++x) {
      s.push_back(u.mul(a, x));
    }
    return make_element_set(std::move(s));
  }

  inline ElementSet left_ideal(SemigroupUniverse const& u, index_type a) {
    ElementSet s{a};
    for (index_type x = 0; x < u.size(); ++x) {
      s.push_back(u.mul(x, a));
    }
    return make_element_set(std::move(s));
  }

  inline ElementSet two_sided_ideal(SemigroupUniverse const& u, index_type a) {
    ElementSet l = left_ideal(u, a);
    ElementSet s = l;
    for (index_type y : l) {
      for (index_type x = 0; x < u.size(); ++x) {
        s.push_back(u.mul(y, x));
      }
    }
    return make_element_set(std::move(s));
  }

  //! Green's relations from the classical ideal-based definitions.
  inline EquivRelation green_oracle(SemigroupUniverse const& u,
                                    GreenRelation            which) {
    if (!u.has_table()) {
      throw BudgetExceeded("green_oracle needs a materialized Cayley table");
    }
    auto by = [&](auto ideal) {
      std::vector<ElementSet> keys;
      for (index_type a = 0; a < u.size(); ++a) {
        keys.push_back(ideal(u, a));
      }
      return EquivRelation::from_keys(keys);
    };
    switch (which) {
      case GreenRelation::R:
        return by(right_ideal);
      case GreenRelation::L:
        return by(left_ideal);
      case GreenRelation::H:
        return by(right_ideal).meet(by(left_ideal));
      case GreenRelation::D:
        return by(right_ideal).join(by(left_ideal));
      case GreenRelation::J:
        return by(two_sided_ideal);
    }
    throw InvalidArgument("unknown Green's relation");
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  //! The elements of rank less than xi, 1 <= xi <= n + 1.
  inline ElementSet ideal(SemigroupUniverse const& u, std::size_t xi) {
    if (xi < 1 || xi > u.degree() + 1) {
      throw InvalidArgument("ideal index must lie in [1, n + 1]");
    }
    return u.filter([xi](Bipartition const& a) { return a.rank() < xi; });
  }

  inline bool is_ideal(SemigroupUniverse const& u, ElementSet const& s) {
    for (index_type a : s) {
      for (index_type x = 0; x < u.size(); ++x) {
        if (!contains(s, u.mul(a, x)) || !contains(s, u.mul(x, a))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every non-empty two-sided ideal, by checking all subsets (so only for
  //! universes of at most 20 elements).
  inline std::vector<ElementSet> all_ideals(SemigroupUniverse const& u) {
    if (u.size() > 20) {
      throw BudgetExceeded("all_ideals enumerates subsets; at most 20 "
                           "elements");
    }
    std::vector<ElementSet> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << u.size());
         ++mask) {
      ElementSet s;
      for (index_type i = 0; i < u.size(); ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
        }
      }
      if (is_ideal(u, s)) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maximal subgroups
  ////////////////////////////////////////////////////////////////////////

  //! The maximal subgroup with identity e: the H-class of e.
  inline ElementSet subgroup_G(SemigroupUniverse const& u, index_type e) {
    if (!u.is_idempotent(e)) {
      throw InvalidArgument("subgroup_G: element is not idempotent");
    }
    DomainData const d = domain_data(u.at(e));
    return u.filter([&](Bipartition const& a) {
      DomainData const x = domain_data(a);
      return x.dom == d.dom && x.ran == d.ran;
    });
  }

  //! Checks that s is a group under the universe product.
  inline bool is_group(SemigroupUniverse const& u, ElementSet const& s) {
    if (s.empty() || !u.is_closed(s)) {
      return false;
    }
    std::optional<index_type> unit;
    for (index_type e : s) {
      bool ok = true;
      for (index_type x : s) {
        if (u.mul(e, x) != x || u.mul(x, e) != x) {
          ok = false;
          break;
        }
      }
      if (ok) {
        unit = e;
        break;
      }
    }
    if (!unit) {
      return false;
    }
    for (index_type x : s) {
      bool has_inverse = false;
      for (index_type y : s) {
        if (u.mul(x, y) == *unit && u.mul(y, x) == *unit) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // mu
  ////////////////////////////////////////////////////////////////////////

  //! a mu b iff a^-1 e a = b^-1 e b for every idempotent e.
  inline EquivRelation mu_congruence(SemigroupUniverse const& u) {
    std::vector<std::vector<index_type>> keys(u.size());
    for (index_type a = 0; a < u.size(); ++a) {
      index_type const ai = u.inverse_of(a);
      for (index_type e : u.idempotents()) {
        keys[a].push_back(u.mul(u.mul(ai, e), a));
      }
    }
    return EquivRelation::from_keys(keys);
  }

  inline bool is_fundamental(SemigroupUniverse const& u) {
    return mu_congruence(u).is_trivial();
  }

  //! The first pair (a, b), a < b, related by mu, if any.
  inline std::optional<std::pair<index_type, index_type>> mu_witness(
      SemigroupUniverse const& u) {
    EquivRelation const mu = mu_congruence(u);
    for (ElementSet const& c : mu.classes()) {
      if (c.size() > 1) {
        return std::pair{c[0], c[1]};
      }
    }
    return std::nullopt;
  }

  //! The pair (eta_{x}, b) of I*_n, n >= 2, with b = {x u (X \ x)',
  //! (X \ x) u x'}: distinct, H-related and mu-related.
  inline std::pair<Bipartition, Bipartition> mu_pair_in_istar(std::size_t n,
                                                              int x) {
    if (n < 2 || x < 1 || x > static_cast<int>(n)) {
      throw InvalidArgument("mu_pair_in_istar needs n >= 2 and x in [1, n]");
    }
    PointSet const   one{x};
    PointSet const   rest = PointSet::full(n) - one;
    Block const      blocks[] = {Block{one, rest}, Block{rest, one}};
    return {eta(n, one), Bipartition::from_blocks(n, blocks)};
  }

}  // namespace pistar

#endif  // PISTAR_GREEN_HPP_
