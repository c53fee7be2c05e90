// pistar - exact computation in finite partition semigroups
//
// Closure of generating sets and direct enumeration of the families.

#ifndef PISTAR_ENUMERATE_HPP_
#define PISTAR_ENUMERATE_HPP_

#include <algorithm>      // for sort, lexicographical_compare
#include <array>          // for array
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t, uint8_t
#include <limits>         // for numeric_limits
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "bipartition.hpp"
#include "error.hpp"
#include "product.hpp"
#include "universe.hpp"

namespace pistar {

  inline constexpr std::size_t kDefaultBudget = 1'000'000;

  //! Order used for enumerated families: lexicographic on the canonical
  //! labelling of 1, ..., n, 1', ..., n'.
  inline bool canonical_less(Bipartition const& a, Bipartition const& b) {
    if (a.degree() != b.degree()) {
      return a.degree() < b.degree();
    }
    auto la = a.labels();
    auto lb = b.labels();
    return std::lexicographical_compare(
        la.begin(), la.end(), lb.begin(), lb.end());
  }

  inline void sort_canonical(std::vector<Bipartition>& v) {
    std::sort(v.begin(), v.end(), canonical_less);
  }

  ////////////////////////////////////////////////////////////////////////
  // Family sizes
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    using wide = unsigned __int128;

    // Stirling numbers of the second kind S(i, k) for i, k <= m.
    inline std::vector<std::vector<wide>> stirling2(std::size_t m) {
      std::vector<std::vector<wide>> s(m + 1, std::vector<wide>(m + 1, 0));
      s[0][0] = 1;
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t k = 1; k <= i; ++k) {
          s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
        }
      }
      return s;
    }

    inline wide factorial(std::size_t k) {
      wide f = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }

    inline wide binomial(std::size_t n, std::size_t k) {
      wide r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    inline std::uint64_t saturate(wide x) {
      constexpr auto top = std::numeric_limits<std::uint64_t>::max();
      return x > top ? top : static_cast<std::uint64_t>(x);
    }
  }  // namespace detail

  //! Number of elements of degree n in the family (saturating at 2^64 - 1).
  //!
  //! * C: Bell(2n);
  //! * I*: sum_k S(n, k)^2 k!;
  //! * PI*: sum_k S(n + 1, k + 1)^2 k!  (the extra point absorbs the points);
  //! * I: sum_k C(n, k)^2 k!;
  //! * S: n!.
  inline std::uint64_t family_size(Family f, std::size_t n) {
    using detail::wide;
    auto const s   = detail::stirling2(2 * n + 1);
    wide       sum = 0;
    switch (f) {
      case Family::C:
        for (std::size_t k = 0; k <= 2 * n; ++k) {
          sum += s[2 * n][k];
        }
        break;
      case Family::IStar:
        for (std::size_t k = 1; k <= n; ++k) {
          sum += s[n][k] * s[n][k] * detail::factorial(k);
        }
        break;
      case Family::PIStar:
        for (std::size_t k = 0; k <= n; ++k) {
          sum += s[n + 1][k + 1] * s[n + 1][k + 1] * detail::factorial(k);
        }
        break;
      case Family::I:
        for (std::size_t k = 0; k <= n; ++k) {
          sum += detail::binomial(n, k) * detail::binomial(n, k)
                 * detail::factorial(k);
        }
        break;
      case Family::S:
        sum = detail::factorial(n);
        break;
    }
    return detail::saturate(sum);
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Visits every set partition of the 2n points as a restricted growth
    // string, pruning partial labellings that can no longer lie in f.
    template <typename Visit>
    void for_each_partition(Family f, std::size_t n, Visit&& visit) {
      std::array<std::uint8_t, 2 * kMaxDegree> labels{};
      // Per block: number of top and bottom points so far.
      std::array<std::uint8_t, 2 * kMaxDegree> tops{}, bottoms{};
      std::size_t const                        m = 2 * n;

      auto ok_partial = [&](std::uint8_t b) {
        switch (f) {
          case Family::C:
          case Family::IStar:
          case Family::PIStar:
            return true;
          case Family::I:
          case Family::S:
            return tops[b] <= 1 && bottoms[b] <= 1;
        }
        return true;
      };

      auto ok_final = [&](std::size_t nr_blocks) {
        for (std::size_t b = 0; b < nr_blocks; ++b) {
          bool const line = tops[b] > 0 && bottoms[b] > 0;
          bool const point = tops[b] + bottoms[b] == 1;
          switch (f) {
            case Family::C:
              break;
            case Family::IStar:
              if (!line) {
                return false;
              }
              break;
            case Family::PIStar:
              if (!line && !point) {
                return false;
              }
              break;
            case Family::I:
              break;
            case Family::S:
              if (!line) {
                return false;
              }
              break;
          }
        }
        return true;
      };

      auto recurse = [&](auto&& self, std::size_t p, std::size_t nr_blocks)
          -> void {
        if (p == m) {
          if (ok_final(nr_blocks)) {
            visit(Bipartition::from_labels(n, std::span(labels.data(), m)));
          }
          return;
        }
        bool const top = p < n;
        for (std::size_t b = 0; b <= nr_blocks; ++b) {
          auto const bb = static_cast<std::uint8_t>(b);
          labels[p]     = bb;
          if (b == nr_blocks) {
            tops[b] = bottoms[b] = 0;
          }
          ++(top ? tops[b] : bottoms[b]);
          // In the top row a non-singleton block cannot later become a
          // point, so PI* and I* need no check there; the final test decides.
          if (ok_partial(bb)) {
            self(self, p + 1, b == nr_blocks ? nr_blocks + 1 : nr_blocks);
          }
          --(top ? tops[b] : bottoms[b]);
        }
      };
      recurse(recurse, 0, 0);
    }
  }  // namespace detail

  inline Product default_product(Family f) noexcept {
    return f == Family::C || f == Family::IStar ? Product::Natural
                                                : Product::Star;
  }

  //! All elements of the family at degree n, sorted by canonical_less.
  //! Throws BudgetExceeded when the family has more than `budget` elements
  //! or when the search space (Bell(2n) partitions) is out of reach.
  inline std::vector<Bipartition> family_elements(Family      f,
                                                  std::size_t n,
                                                  std::size_t budget
                                                  = kDefaultBudget) {
    if (n == 0 || n > kMaxDegree) {
      throw InvalidArgument("degree must lie in [1, "
                            + std::to_string(kMaxDegree) + "]");
    }
    std::uint64_t const size = family_size(f, n);
    if (size > budget || family_size(Family::C, n) > 50 * kDefaultBudget) {
      throw BudgetExceeded(std::string("the family ") + family_name(f)
                           + " of degree " + std::to_string(n) + " has "
                           + std::to_string(size)
                           + " elements, over the budget of "
                           + std::to_string(budget));
    }
    std::vector<Bipartition> out;
    out.reserve(size);
    detail::for_each_partition(
        f, n, [&](Bipartition const& x) { out.push_back(x); });
    sort_canonical(out);
    return out;
  }

  inline SemigroupUniverse enumerate_family(
      Family      f,
      std::size_t n,
      Product     p,
      std::size_t budget      = kDefaultBudget,
      std::size_t table_limit = SemigroupUniverse::kDefaultTableLimit) {
    return SemigroupUniverse(p, family_elements(f, n, budget), table_limit);
  }

  inline SemigroupUniverse enumerate_family(Family f, std::size_t n) {
    return enumerate_family(f, n, default_product(f));
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  struct GeneratorSet {
    Product                  product = Product::Natural;
    std::vector<Bipartition> generators;
    bool                     with_inverses = false;
  };

  //! The subsemigroup generated, in order of discovery: the generators first
  //! (then their inverses when requested), then breadth-first right
  //! multiplication by the generators.
  inline std::vector<Bipartition> closure_elements(GeneratorSet const& g,
                                                   std::size_t budget
                                                   = kDefaultBudget) {
    if (g.generators.empty()) {
      throw InvalidArgument("closure needs at least one generator");
    }
    std::vector<Bipartition> gens = g.generators;
    if (g.with_inverses) {
      for (Bipartition const& x : g.generators) {
        gens.push_back(inverse(x));
      }
    }
    std::vector<Bipartition>                                      out;
    std::unordered_set<Bipartition, BipartitionHash>               seen;
    auto add = [&](Bipartition const& x) {
      if (seen.insert(x).second) {
        if (out.size() == budget) {
          throw BudgetExceeded("closure exceeds " + std::to_string(budget)
                               + " elements");
        }
        out.push_back(x);
      }
    };
    for (Bipartition const& x : gens) {
      add(x);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Bipartition const& x : gens) {
        add(multiply(g.product, out[i], x));
      }
    }
    return out;
  }

  inline SemigroupUniverse closure(GeneratorSet const& g,
                                   std::size_t budget = kDefaultBudget) {
    return SemigroupUniverse(g.product, closure_elements(g, budget));
  }

  //! Closure inside a universe, on indices.
  inline ElementSet closure_in(SemigroupUniverse const& u,
                               ElementSet const&        gens) {
    std::vector<char>       in(u.size(), 0);
    std::vector<index_type> out;
    for (index_type x : gens) {
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
    std::vector<index_type> const g(out);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (index_type x : g) {
        index_type const y = u.mul(out[i], x);
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    }
    return make_element_set(std::move(out));
  }

  //! Closure of a set already closed under products together with one more
  //! element; only products involving new elements are formed.
  inline ElementSet extend_closure(SemigroupUniverse const& u,
                                   ElementSet const&        closed,
                                   index_type               s) {
    std::vector<char> in(u.size(), 0);
    for (index_type x : closed) {
      in[x] = 1;
    }
    if (in[s]) {
      return closed;
    }
    std::vector<index_type> all(closed), fresh{s};
    in[s] = 1;
    all.push_back(s);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      index_type const y = fresh[i];
      for (std::size_t j = 0; j < all.size(); ++j) {
        index_type const x = all[j];
        for (index_type z : {u.mul(x, y), u.mul(y, x)}) {
          if (!in[z]) {
            in[z] = 1;
            all.push_back(z);
            fresh.push_back(z);
          }
        }
      }
    }
    return make_element_set(std::move(all));
  }

  //! Inverse-closed closure inside a universe with inverses.
  inline ElementSet inverse_closure_in(SemigroupUniverse const& u,
                                       ElementSet const&        gens) {
    ElementSet g = gens;
    for (index_type x : gens) {
      g.push_back(u.inverse_of(x));
    }
    return closure_in(u, make_element_set(std::move(g)));
  }

}  // namespace pistar

#endif  // PISTAR_ENUMERATE_HPP_
