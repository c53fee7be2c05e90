// pistar - exact computation in finite partition semigroups
//
// The three multiplications.
//
// * natural: stack a over b, identify the bottom row of a with the top row of
//   b and take connected components (union-find over 3n vertices);
// * star: as natural, but every point (singleton block) of either factor is
//   joined to one auxiliary vertex, and every outer vertex connected to it
//   becomes a point of the product;
// * circ: a generalised line A of a and a generalised line B of b produce the
//   line top(A) u bottom(B)' exactly when bottom(A) = top(B); every other
//   vertex becomes a point.

#ifndef PISTAR_PRODUCT_HPP_
#define PISTAR_PRODUCT_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <string>   // for string

#include "bipartition.hpp"
#include "error.hpp"

namespace pistar {

  enum class Product { Natural, Star, Circ };

  inline char const* product_name(Product p) noexcept {
    switch (p) {
      case Product::Natural:
        return "natural";
      case Product::Star:
        return "star";
      case Product::Circ:
        return "circ";
    }
    return "?";
  }

  namespace detail {
    // Union-find over at most 3 * kMaxDegree + 1 vertices.
    class SmallDisjointSets {
     public:
      explicit SmallDisjointSets(std::size_t size) noexcept {
        for (std::size_t i = 0; i < size; ++i) {
          _parent[i] = static_cast<std::uint8_t>(i);
        }
      }

      std::uint8_t find(std::uint8_t x) noexcept {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::uint8_t x, std::uint8_t y) noexcept {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[y] = x;
        }
      }

     private:
      std::array<std::uint8_t, 3 * kMaxDegree + 1> _parent;
    };

    inline void check_degrees(Bipartition const& a, Bipartition const& b) {
      if (a.degree() != b.degree()) {
        throw DegreeMismatch("cannot multiply elements of degree "
                             + std::to_string(a.degree()) + " and "
                             + std::to_string(b.degree()));
      }
    }

    // Joins the vertices of x placed with its top row at `top` and its bottom
    // row at `bottom`. When `aux` is non-negative, singleton blocks are joined
    // to it.
    inline void place(SmallDisjointSets& dsu,
                      Bipartition const& x,
                      std::size_t        top,
                      std::size_t        bottom,
                      int                aux = -1) {
      std::size_t const                       n = x.degree();
      std::array<std::uint8_t, 2 * kMaxDegree> first;
      std::array<std::uint8_t, 2 * kMaxDegree> count{};
      first.fill(0xFF);
      for (std::size_t p = 0; p < 2 * n; ++p) {
        auto v = static_cast<std::uint8_t>(p < n ? top + p : bottom + p - n);
        std::uint8_t l = x.label(p);
        ++count[l];
        if (first[l] == 0xFF) {
          first[l] = v;
        } else {
          dsu.unite(first[l], v);
        }
      }
      if (aux >= 0) {
        for (std::size_t l = 0; l < x.number_of_blocks(); ++l) {
          if (count[l] == 1) {
            dsu.unite(static_cast<std::uint8_t>(aux), first[l]);
          }
        }
      }
    }
  }  // namespace detail

  inline Bipartition natural_mul(Bipartition const& a, Bipartition const& b) {
    detail::check_degrees(a, b);
    std::size_t const         n = a.degree();
    detail::SmallDisjointSets dsu(3 * n);
    detail::place(dsu, a, 0, n);
    detail::place(dsu, b, n, 2 * n);
    std::array<std::uint8_t, 2 * kMaxDegree> labels;
    for (std::size_t p = 0; p < n; ++p) {
      labels[p]     = dsu.find(static_cast<std::uint8_t>(p));
      labels[n + p] = dsu.find(static_cast<std::uint8_t>(2 * n + p));
    }
    return Bipartition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  inline Bipartition star_mul(Bipartition const& a, Bipartition const& b) {
    detail::check_degrees(a, b);
    require_member(Family::PIStar, a, "star_mul");
    require_member(Family::PIStar, b, "star_mul");
    std::size_t const         n   = a.degree();
    int const                 aux = static_cast<int>(3 * n);
    detail::SmallDisjointSets dsu(3 * n + 1);
    detail::place(dsu, a, 0, n, aux);
    detail::place(dsu, b, n, 2 * n, aux);
    std::uint8_t const aux_root = dsu.find(static_cast<std::uint8_t>(aux));
    // Roots are < 3n + 1 <= 49; points get the unused labels 64 + p.
    std::array<std::uint8_t, 2 * kMaxDegree> labels;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto v = static_cast<std::uint8_t>(p < n ? p : n + p);
      std::uint8_t r = dsu.find(v);
      labels[p]      = r == aux_root ? static_cast<std::uint8_t>(64 + p) : r;
    }
    return Bipartition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  inline Bipartition circ_mul(Bipartition const& a, Bipartition const& b) {
    detail::check_degrees(a, b);
    require_member(Family::PIStar, a, "circ_mul");
    require_member(Family::PIStar, b, "circ_mul");
    std::size_t const                       n = a.degree();
    std::array<std::uint8_t, 2 * kMaxDegree> labels;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      labels[p] = static_cast<std::uint8_t>(64 + p);
    }
    BlockList const  a_blocks = a.blocks();
    BlockList const  b_blocks = b.blocks();
    std::uint8_t     next     = 0;
    for (Block const& x : a_blocks) {
      if (!x.is_generalised_line()) {
        continue;
      }
      for (Block const& y : b_blocks) {
        if (y.is_generalised_line() && x.bottom == y.top) {
          for (int p : x.top.to_vector()) {
            labels[static_cast<std::size_t>(p - 1)] = next;
          }
          for (int p : y.bottom.to_vector()) {
            labels[n + static_cast<std::size_t>(p - 1)] = next;
          }
          ++next;
          break;
        }
      }
    }
    return Bipartition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  inline Bipartition multiply(Product            p,
                              Bipartition const& a,
                              Bipartition const& b) {
    switch (p) {
      case Product::Natural:
        return natural_mul(a, b);
      case Product::Star:
        return star_mul(a, b);
      case Product::Circ:
        return circ_mul(a, b);
    }
    throw InvalidArgument("unknown product");
  }

  //! Swaps the top and bottom part of every block: for a generalised line
  //! A u B' the inverse has B u A'; points are mirrored.
  inline Bipartition inverse(Bipartition const& a) {
    require_member(Family::PIStar, a, "inverse");
    std::size_t const                       n = a.degree();
    std::array<std::uint8_t, 2 * kMaxDegree> labels;
    for (std::size_t p = 0; p < n; ++p) {
      labels[p]     = a.label(n + p);
      labels[n + p] = a.label(p);
    }
    return Bipartition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  inline bool is_idempotent(Product p, Bipartition const& a) {
    return multiply(p, a, a) == a;
  }

  //! The family on which `p` is an inverse-semigroup product: I* for the
  //! natural product, PI* for star and circ.
  inline Family inverse_carrier(Product p) noexcept {
    return p == Product::Natural ? Family::IStar : Family::PIStar;
  }

  //! Natural partial order of the inverse semigroup (carrier, p):
  //! a <= b iff a = (a a^-1) b.
  inline bool natural_order_leq(Bipartition const& a,
                                Bipartition const& b,
                                Product            p) {
    Family const f = inverse_carrier(p);
    require_member(f, a, "natural_order_leq");
    require_member(f, b, "natural_order_leq");
    return multiply(p, multiply(p, a, inverse(a)), b) == a;
  }

}  // namespace pistar

#endif  // PISTAR_PRODUCT_HPP_
