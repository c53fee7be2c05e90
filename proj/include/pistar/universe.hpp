// pistar - exact computation in finite partition semigroups
//
// SemigroupUniverse: a finite set of elements closed under one product, with
// an index, an optional Cayley table, idempotents and inverses.
// EquivRelation: a partition of the index set of a universe.

#ifndef PISTAR_UNIVERSE_HPP_
#define PISTAR_UNIVERSE_HPP_

#include <algorithm>      // for sort, all_of
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <numeric>        // for iota
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "bipartition.hpp"
#include "error.hpp"
#include "product.hpp"

namespace pistar {

  using index_type = std::uint32_t;

  //! A set of element indices, sorted ascending without repeats.
  using ElementSet = std::vector<index_type>;

  inline ElementSet make_element_set(std::vector<index_type> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  inline bool contains(ElementSet const& s, index_type x) {
    return std::binary_search(s.begin(), s.end(), x);
  }

  inline ElementSet set_union(ElementSet const& a, ElementSet const& b) {
    ElementSet out;
    std::set_union(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  inline ElementSet set_difference(ElementSet const& a, ElementSet const& b) {
    ElementSet out;
    std::set_difference(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  inline ElementSet set_intersection(ElementSet const& a, ElementSet const& b) {
    ElementSet out;
    std::set_intersection(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupUniverse
  ////////////////////////////////////////////////////////////////////////

  //! Elements are kept in the order supplied; indices are stable. The Cayley
  //! table is built at construction when size() <= table_limit, otherwise
  //! products are computed on demand. Immutable after construction.
  class SemigroupUniverse {
   public:
    static constexpr std::size_t kDefaultTableLimit = 2500;

    SemigroupUniverse(Product                  p,
                      std::vector<Bipartition> elements,
                      std::size_t table_limit = kDefaultTableLimit)
        : _product(p), _elements(std::move(elements)) {
      if (_elements.empty()) {
        throw InvalidArgument("a universe needs at least one element");
      }
      std::size_t const n = _elements.front().degree();
      _index.reserve(_elements.size());
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        if (_elements[i].degree() != n) {
          throw DegreeMismatch("universe elements must share one degree");
        }
        if (!_index.emplace(_elements[i], static_cast<index_type>(i)).second) {
          throw InvalidArgument("universe elements must be distinct");
        }
      }
      if (_elements.size() <= table_limit) {
        build_table();
      }
      for (index_type i = 0; i < size(); ++i) {
        if (mul(i, i) == i) {
          _idempotents.push_back(i);
        }
      }
      bool const all_pistar
          = std::all_of(_elements.begin(), _elements.end(), [](auto const& x) {
              return is_member(Family::PIStar, x);
            });
      if (all_pistar) {
        std::vector<index_type> inv(size());
        bool                    closed = true;
        for (index_type i = 0; i < size() && closed; ++i) {
          auto j = index_of(inverse(_elements[i]));
          if (j) {
            inv[i] = *j;
          } else {
            closed = false;
          }
        }
        if (closed) {
          _inverses = std::move(inv);
        }
      }
    }

    Product product() const noexcept {
      return _product;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t degree() const noexcept {
      return _elements.front().degree();
    }

    Bipartition const& at(index_type i) const {
      return _elements.at(i);
    }

    std::vector<Bipartition> const& elements() const noexcept {
      return _elements;
    }

    std::optional<index_type> index_of(Bipartition const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool contains(Bipartition const& x) const {
      return _index.count(x) != 0;
    }

    //! Throws when the product leaves the universe.
    index_type mul(index_type i, index_type j) const {
      if (!_table.empty()) {
        return _table[static_cast<std::size_t>(i) * size() + j];
      }
      return lookup(multiply(_product, _elements[i], _elements[j]));
    }

    bool has_table() const noexcept {
      return !_table.empty();
    }

    //! i^k for k >= 1.
    index_type power(index_type i, std::size_t k) const {
      index_type r = i;
      for (std::size_t t = 1; t < k; ++t) {
        r = mul(r, i);
      }
      return r;
    }

    std::vector<index_type> const& idempotents() const noexcept {
      return _idempotents;
    }

    bool is_idempotent(index_type i) const {
      return mul(i, i) == i;
    }

    //! True when every element lies in PI* and the universe is closed under
    //! inverse.
    bool has_inverses() const noexcept {
      return !_inverses.empty();
    }

    index_type inverse_of(index_type i) const {
      if (_inverses.empty()) {
        throw InvalidArgument("universe is not closed under inverse");
      }
      return _inverses[i];
    }

    ElementSet all() const {
      ElementSet s(size());
      std::iota(s.begin(), s.end(), index_type(0));
      return s;
    }

    ElementSet filter(auto&& pred) const {
      ElementSet s;
      for (index_type i = 0; i < size(); ++i) {
        if (pred(_elements[i])) {
          s.push_back(i);
        }
      }
      return s;
    }

    //! Checks that every product of two elements lies in the set.
    bool is_closed(ElementSet const& s) const {
      for (index_type a : s) {
        for (index_type b : s) {
          if (!pistar::contains(s, mul(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_associative() const {
      for (index_type a = 0; a < size(); ++a) {
        for (index_type b = 0; b < size(); ++b) {
          index_type const ab = mul(a, b);
          for (index_type c = 0; c < size(); ++c) {
            if (mul(ab, c) != mul(a, mul(b, c))) {
              return false;
            }
          }
        }
      }
      return true;
    }

   private:
    index_type lookup(Bipartition const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        throw Error("product leaves the universe");
      }
      return it->second;
    }

    void build_table() {
      std::size_t const m = size();
      _table.resize(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          _table[i * m + j]
              = lookup(multiply(_product, _elements[i], _elements[j]));
        }
      }
    }

    Product                                                     _product;
    std::vector<Bipartition>                                    _elements;
    std::unordered_map<Bipartition, index_type, BipartitionHash> _index;
    std::vector<index_type>                                     _table;
    std::vector<index_type>                                     _idempotents;
    std::vector<index_type>                                     _inverses;
  };

  ////////////////////////////////////////////////////////////////////////
  // EquivRelation
  ////////////////////////////////////////////////////////////////////////

  //! A partition of {0, ..., size - 1}, stored as class ids numbered in order
  //! of first occurrence, so equal relations have equal representations.
  class EquivRelation {
   public:
    EquivRelation() = default;

    //! Normalizes an arbitrary class-id (or key) vector.
    template <typename T>
    static EquivRelation from_keys(std::vector<T> const& keys) {
      EquivRelation             r;
      std::vector<std::size_t>  order(keys.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
        return keys[x] < keys[y];
      });
      std::vector<index_type> group(keys.size());
      index_type              g = 0;
      for (std::size_t t = 0; t < order.size(); ++t) {
        if (t > 0 && keys[order[t - 1]] < keys[order[t]]) {
          ++g;
        }
        group[order[t]] = g;
      }
      r._ids = normalize(group);
      return r;
    }

    static EquivRelation trivial(std::size_t size) {
      EquivRelation r;
      r._ids.resize(size);
      std::iota(r._ids.begin(), r._ids.end(), index_type(0));
      return r;
    }

    static EquivRelation universal(std::size_t size) {
      EquivRelation r;
      r._ids.assign(size, 0);
      return r;
    }

    std::size_t size() const noexcept {
      return _ids.size();
    }

    index_type class_of(index_type i) const {
      return _ids.at(i);
    }

    std::vector<index_type> const& class_ids() const noexcept {
      return _ids;
    }

    bool related(index_type i, index_type j) const {
      return _ids.at(i) == _ids.at(j);
    }

    std::size_t number_of_classes() const noexcept {
      return _ids.empty()
                 ? 0
                 : static_cast<std::size_t>(
                       *std::max_element(_ids.begin(), _ids.end()))
                       + 1;
    }

    //! Classes in order of their least member.
    std::vector<ElementSet> classes() const {
      std::vector<ElementSet> out(number_of_classes());
      for (index_type i = 0; i < size(); ++i) {
        out[_ids[i]].push_back(i);
      }
      return out;
    }

    bool is_trivial() const noexcept {
      return number_of_classes() == size();
    }

    bool is_universal() const noexcept {
      return number_of_classes() <= 1;
    }

    //! True when every pair related here is related in other.
    bool is_contained_in(EquivRelation const& other) const {
      std::vector<index_type> seen(number_of_classes(), kUnset);
      for (index_type i = 0; i < size(); ++i) {
        index_type& s = seen[_ids[i]];
        if (s == kUnset) {
          s = other._ids[i];
        } else if (s != other._ids[i]) {
          return false;
        }
      }
      return true;
    }

    EquivRelation meet(EquivRelation const& other) const {
      std::vector<std::pair<index_type, index_type>> keys(size());
      for (index_type i = 0; i < size(); ++i) {
        keys[i] = {_ids[i], other._ids[i]};
      }
      return from_keys(keys);
    }

    EquivRelation join(EquivRelation const& other) const {
      std::vector<index_type> parent(size());
      std::iota(parent.begin(), parent.end(), index_type(0));
      auto find = [&](index_type x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      std::vector<index_type> first_a(number_of_classes(), kUnset);
      std::vector<index_type> first_b(other.number_of_classes(), kUnset);
      for (index_type i = 0; i < size(); ++i) {
        for (auto [first, id] : {std::pair{&first_a, _ids[i]},
                                 std::pair{&first_b, other._ids[i]}}) {
          index_type& f = (*first)[id];
          if (f == kUnset) {
            f = i;
          } else {
            parent[find(i)] = find(f);
          }
        }
      }
      for (index_type i = 0; i < size(); ++i) {
        parent[i] = find(i);
      }
      return from_keys(parent);
    }

    bool operator==(EquivRelation const&) const = default;
    auto operator<=>(EquivRelation const&) const = default;

   private:
    static constexpr index_type kUnset = static_cast<index_type>(-1);

    static std::vector<index_type> normalize(std::vector<index_type> const& v) {
      std::unordered_map<index_type, index_type> renum;
      std::vector<index_type>                    out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto it = renum.emplace(v[i], static_cast<index_type>(renum.size()));
        out[i]  = it.first->second;
      }
      return out;
    }

    std::vector<index_type> _ids;
  };

  //! Checks that r is compatible with multiplication on both sides.
  inline bool is_congruence(SemigroupUniverse const& u, EquivRelation const& r) {
    if (r.size() != u.size()) {
      return false;
    }
    auto const classes = r.classes();
    for (ElementSet const& c : classes) {
      for (std::size_t t = 1; t < c.size(); ++t) {
        index_type const a = c[0], b = c[t];
        for (index_type s = 0; s < u.size(); ++s) {
          if (!r.related(u.mul(a, s), u.mul(b, s))
              || !r.related(u.mul(s, a), u.mul(s, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace pistar

#endif  // PISTAR_UNIVERSE_HPP_
