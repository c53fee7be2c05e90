// pistar - exact computation in finite partition semigroups
//
// Constructors for the named elements used throughout (all 1-based points):
//
//   alpha(x)       lines {t, t'} for t != x; x and x' are points
//   alpha_set(Y)   lines {t, t'} for t not in Y; everything else points
//   tau(x, y)      block {x, y, x', y'}; lines {t, t'} elsewhere
//   tau_set(Y)     block Y u Y'; lines {t, t'} elsewhere
//   gamma(x, y)    block {x, y, x'}; point y'; lines {t, t'} elsewhere
//   xi(x, y, z)    blocks {x, y, x'} and {z, y', z'}; lines elsewhere
//   epsilon(Y)     block Y u Y'; everything else points (rank 1)
//   eta(Y)         blocks Y u Y' and (X \ Y) u (X \ Y)'
//   zero           all points
//   identity       all lines {t, t'}
//   perm(g)        lines {t, g(t)'}

#ifndef PISTAR_NAMED_HPP_
#define PISTAR_NAMED_HPP_

#include <algorithm>  // for next_permutation, sort
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <span>       // for span
#include <string>     // for string
#include <vector>     // for vector

#include "bipartition.hpp"
#include "error.hpp"

namespace pistar {

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  //! A permutation of {0, ..., m - 1} stored as its list of images.
  using Permutation = std::vector<int>;

  inline Permutation identity_permutation(std::size_t m) {
    Permutation p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  inline bool is_permutation(Permutation const& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= p.size()
          || seen[static_cast<std::size_t>(x)]) {
        return false;
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
  }

  //! Left-to-right composition: apply p, then q.
  inline Permutation compose(Permutation const& p, Permutation const& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[static_cast<std::size_t>(p[i])];
    }
    return r;
  }

  inline Permutation inverse(Permutation const& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    }
    return r;
  }

  inline bool is_even(Permutation const& p) {
    std::size_t       inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        inversions += p[i] > p[j];
      }
    }
    return inversions % 2 == 0;
  }

  //! All m! permutations in lexicographic order.
  inline std::vector<Permutation> all_permutations(std::size_t m) {
    std::vector<Permutation> out;
    Permutation              p = identity_permutation(m);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named elements
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void check_point(std::size_t n, int x) {
      if (x < 1 || x > static_cast<int>(n)) {
        throw InvalidArgument("point " + std::to_string(x)
                              + " is outside {1, ..., " + std::to_string(n)
                              + "}");
      }
    }

    inline void check_subset(std::size_t n, PointSet y, bool non_empty) {
      if (!y.is_subset_of(PointSet::full(n))) {
        throw InvalidArgument("subset is not contained in {1, ..., "
                              + std::to_string(n) + "}");
      }
      if (non_empty && y.empty()) {
        throw InvalidArgument("subset must be non-empty");
      }
    }

    inline void check_distinct(std::initializer_list<int> xs) {
      std::vector<int> v(xs);
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw InvalidArgument("parameters must be pairwise distinct");
      }
    }

    // Lines {t, t'} for every t in `lines`, points for all other vertices not
    // already covered by `blocks`.
    inline Bipartition assemble(std::size_t        n,
                                std::vector<Block> blocks,
                                PointSet           lines) {
      for (int t : lines.to_vector()) {
        blocks.push_back(Block{PointSet{t}, PointSet{t}});
      }
      PointSet top, bottom;
      for (Block const& b : blocks) {
        top    = top | b.top;
        bottom = bottom | b.bottom;
      }
      for (int t : (PointSet::full(n) - top).to_vector()) {
        blocks.push_back(Block{PointSet{t}, PointSet{}});
      }
      for (int t : (PointSet::full(n) - bottom).to_vector()) {
        blocks.push_back(Block{PointSet{}, PointSet{t}});
      }
      return Bipartition::from_blocks(n, blocks);
    }
  }  // namespace detail

  inline Bipartition identity(std::size_t n) {
    return detail::assemble(n, {}, PointSet::full(n));
  }

  inline Bipartition zero(std::size_t n) {
    return detail::assemble(n, {}, PointSet{});
  }

  inline Bipartition alpha_set(std::size_t n, PointSet y) {
    detail::check_subset(n, y, false);
    return detail::assemble(n, {}, PointSet::full(n) - y);
  }

  inline Bipartition alpha(std::size_t n, int x) {
    detail::check_point(n, x);
    return alpha_set(n, PointSet{x});
  }

  inline Bipartition tau_set(std::size_t n, PointSet y) {
    detail::check_subset(n, y, true);
    return detail::assemble(n, {Block{y, y}}, PointSet::full(n) - y);
  }

  inline Bipartition tau(std::size_t n, int x, int y) {
    detail::check_point(n, x);
    detail::check_point(n, y);
    detail::check_distinct({x, y});
    return tau_set(n, PointSet{x, y});
  }

  inline Bipartition gamma(std::size_t n, int x, int y) {
    detail::check_point(n, x);
    detail::check_point(n, y);
    detail::check_distinct({x, y});
    PointSet const xy{x, y};
    return detail::assemble(
        n, {Block{xy, PointSet{x}}}, PointSet::full(n) - xy);
  }

  inline Bipartition xi(std::size_t n, int x, int y, int z) {
    detail::check_point(n, x);
    detail::check_point(n, y);
    detail::check_point(n, z);
    detail::check_distinct({x, y, z});
    PointSet const xyz{x, y, z};
    return detail::assemble(n,
                            {Block{PointSet{x, y}, PointSet{x}},
                             Block{PointSet{z}, PointSet{y, z}}},
                            PointSet::full(n) - xyz);
  }

  inline Bipartition epsilon(std::size_t n, PointSet y) {
    detail::check_subset(n, y, true);
    return detail::assemble(n, {Block{y, y}}, PointSet{});
  }

  inline Bipartition eta(std::size_t n, PointSet y) {
    detail::check_subset(n, y, true);
    PointSet const rest = PointSet::full(n) - y;
    std::vector<Block> blocks{Block{y, y}};
    if (!rest.empty()) {
      blocks.push_back(Block{rest, rest});
    }
    return detail::assemble(n, blocks, PointSet{});
  }

  //! The unit with lines {t, g(t)'}; `g` holds 0-based images.
  inline Bipartition perm(std::size_t n, Permutation const& g) {
    if (g.size() != n || !is_permutation(g)) {
      throw InvalidArgument("perm: not a permutation of degree "
                            + std::to_string(n));
    }
    std::vector<Block> blocks;
    for (std::size_t t = 0; t < n; ++t) {
      blocks.push_back(Block{PointSet{static_cast<int>(t + 1)},
                             PointSet{g[t] + 1}});
    }
    return Bipartition::from_blocks(n, blocks);
  }

  //! The permutation realized by a unit (inverse of perm).
  inline Permutation as_permutation(Bipartition const& a) {
    require_member(Family::S, a, "as_permutation");
    std::size_t const n = a.degree();
    Permutation       g(n);
    for (Block const& b : a.blocks()) {
      g[static_cast<std::size_t>(b.top.min() - 1)] = b.bottom.min() - 1;
    }
    return g;
  }

  //! All n! units in lexicographic order of their permutations.
  inline std::vector<Bipartition> symmetric_group(std::size_t n) {
    std::vector<Bipartition> out;
    for (Permutation const& g : all_permutations(n)) {
      out.push_back(perm(n, g));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch by name
  ////////////////////////////////////////////////////////////////////////

  enum class NamedKind {
    alpha_x,
    alpha_Y,
    tau_xy,
    tau_Y,
    gamma_xy,
    xi_xyz,
    epsilon_Y,
    eta_Y,
    zero,
    identity,
    perm
  };

  //! Point parameters (x, y, z), subset parameters (the members of Y) and
  //! permutations (1-based images) are all passed as `params`.
  inline Bipartition make_named(NamedKind              kind,
                                std::span<int const>   params,
                                std::size_t            n) {
    auto need = [&](std::size_t k) {
      if (params.size() != k) {
        throw InvalidArgument("expected " + std::to_string(k)
                              + " parameters, found "
                              + std::to_string(params.size()));
      }
    };
    auto subset = [&]() {
      PointSet y;
      for (int x : params) {
        detail::check_point(n, x);
        y.insert(x);
      }
      if (y.size() != params.size()) {
        throw InvalidArgument("subset parameters must be distinct");
      }
      return y;
    };
    switch (kind) {
      case NamedKind::alpha_x:
        need(1);
        return alpha(n, params[0]);
      case NamedKind::alpha_Y:
        return alpha_set(n, subset());
      case NamedKind::tau_xy:
        need(2);
        return tau(n, params[0], params[1]);
      case NamedKind::tau_Y:
        return tau_set(n, subset());
      case NamedKind::gamma_xy:
        need(2);
        return gamma(n, params[0], params[1]);
      case NamedKind::xi_xyz:
        need(3);
        return xi(n, params[0], params[1], params[2]);
      case NamedKind::epsilon_Y:
        return epsilon(n, subset());
      case NamedKind::eta_Y:
        return eta(n, subset());
      case NamedKind::zero:
        need(0);
        return zero(n);
      case NamedKind::identity:
        need(0);
        return identity(n);
      case NamedKind::perm: {
        need(n);
        Permutation g;
        for (int x : params) {
          g.push_back(x - 1);
        }
        return perm(n, g);
      }
    }
    throw InvalidArgument("unknown named element");
  }

}  // namespace pistar

#endif  // PISTAR_NAMED_HPP_
