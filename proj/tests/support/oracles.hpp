// Independent reference implementations used only by the tests.
//
// Each oracle works from the signed-block description of its operands and
// shares no code with the product kernels.

#ifndef PISTAR_TESTS_ORACLES_HPP_
#define PISTAR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "pistar/bipartition.hpp"
#include "pistar/universe.hpp"

namespace oracle {

  using Blocks = std::vector<std::vector<int>>;

  // Sorted-set form of a partition, for comparisons.
  inline std::set<std::set<int>> as_sets(Blocks const& b) {
    std::set<std::set<int>> out;
    for (auto const& x : b) {
      out.emplace(x.begin(), x.end());
    }
    return out;
  }

  inline std::set<std::set<int>> as_sets(pistar::Bipartition const& a) {
    return as_sets(a.signed_blocks());
  }

  inline pistar::Bipartition from_sets(std::size_t                     n,
                                       std::set<std::set<int>> const& s) {
    Blocks b;
    for (auto const& x : s) {
      b.emplace_back(x.begin(), x.end());
    }
    return pistar::Bipartition::from_signed(n, b);
  }

  // Natural product following the stacked-diagram definition: vertices are
  // (layer, point) with layer 0 = top of a, 1 = the identified middle row,
  // 2 = bottom of b. Two vertices are joined by an edge when they lie in one
  // block of a (layers 0, 1) or of b (layers 1, 2); the product's blocks are
  // the traces on layers 0 and 2 of the connected components.
  inline pistar::Bipartition natural(pistar::Bipartition const& a,
                                     pistar::Bipartition const& b) {
    int const n = static_cast<int>(a.degree());
    auto id = [&](int layer, int p) { return layer * n + (p - 1); };
    std::vector<std::vector<int>> adj(3 * n);
    auto add_blocks = [&](Blocks const& blocks, int shift) {
      for (auto const& blk : blocks) {
        std::vector<int> vs;
        for (int v : blk) {
          vs.push_back(v > 0 ? id(shift, v) : id(shift + 1, -v));
        }
        for (int x : vs) {
          for (int y : vs) {
            if (x != y) {
              adj[x].push_back(y);
            }
          }
        }
      }
    };
    add_blocks(a.signed_blocks(), 0);
    add_blocks(b.signed_blocks(), 1);
    std::vector<int> comp(3 * n, -1);
    int              c = 0;
    for (int s = 0; s < 3 * n; ++s) {
      if (comp[s] != -1) {
        continue;
      }
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (comp[y] == -1) {
            comp[y] = c;
            stack.push_back(y);
          }
        }
      }
      ++c;
    }
    std::map<int, std::set<int>> blocks;
    for (int p = 1; p <= n; ++p) {
      blocks[comp[id(0, p)]].insert(p);
      blocks[comp[id(2, p)]].insert(-p);
    }
    std::set<std::set<int>> out;
    for (auto const& [k, v] : blocks) {
      out.insert(v);
    }
    return from_sets(a.degree(), out);
  }

  // The embedding into degree n + 1: the generalised lines are kept and one
  // more block holds n + 1, (n + 1)' and every point.
  inline pistar::Bipartition phi(pistar::Bipartition const& a) {
    int const n = static_cast<int>(a.degree());
    Blocks    out;
    std::vector<int> extra{n + 1, -(n + 1)};
    for (auto const& blk : a.signed_blocks()) {
      if (blk.size() == 1) {
        extra.push_back(blk[0]);
      } else {
        out.push_back(blk);
      }
    }
    out.push_back(extra);
    return pistar::Bipartition::from_signed(a.degree() + 1, out);
  }

  // Inverse of phi: the block of n + 1 breaks into points.
  inline pistar::Bipartition phi_inverse(pistar::Bipartition const& a) {
    int const n = static_cast<int>(a.degree()) - 1;
    Blocks    out;
    for (auto const& blk : a.signed_blocks()) {
      bool extra = std::find(blk.begin(), blk.end(), n + 1) != blk.end();
      for (int v : blk) {
        if (std::abs(v) == n + 1) {
          continue;
        }
        if (extra) {
          out.push_back({v});
        }
      }
      if (!extra) {
        out.push_back(blk);
      }
    }
    return pistar::Bipartition::from_signed(static_cast<std::size_t>(n), out);
  }

  inline pistar::Bipartition star(pistar::Bipartition const& a,
                                  pistar::Bipartition const& b) {
    return phi_inverse(natural(phi(a), phi(b)));
  }

  // Circ product: a generalised line A of a and B of b give the line
  // top(A) u bottom(B) when the bottom set of A equals the top set of B.
  inline pistar::Bipartition circ(pistar::Bipartition const& a,
                                  pistar::Bipartition const& b) {
    int const               n = static_cast<int>(a.degree());
    std::set<std::set<int>> out;
    std::set<int>           used;
    for (auto const& x : a.signed_blocks()) {
      std::set<int> xt, xb;
      for (int v : x) {
        (v > 0 ? xt : xb).insert(std::abs(v));
      }
      if (xt.empty() || xb.empty()) {
        continue;
      }
      for (auto const& y : b.signed_blocks()) {
        std::set<int> yt, yb;
        for (int v : y) {
          (v > 0 ? yt : yb).insert(std::abs(v));
        }
        if (yt.empty() || yb.empty() || xb != yt) {
          continue;
        }
        std::set<int> line;
        for (int t : xt) {
          line.insert(t);
          used.insert(t);
        }
        for (int t : yb) {
          line.insert(-t);
          used.insert(-t);
        }
        out.insert(line);
      }
    }
    for (int p = 1; p <= n; ++p) {
      for (int v : {p, -p}) {
        if (!used.count(v)) {
          out.insert({v});
        }
      }
    }
    return from_sets(a.degree(), out);
  }

  // Composition of partial injections, read off the lines {t, f(t)'}.
  inline std::map<int, int> as_partial_map(pistar::Bipartition const& a) {
    std::map<int, int> f;
    for (auto const& blk : a.signed_blocks()) {
      if (blk.size() == 2 && blk[0] > 0 && blk[1] < 0) {
        f[blk[0]] = -blk[1];
      }
    }
    return f;
  }

  inline pistar::Bipartition compose_partial(pistar::Bipartition const& a,
                                             pistar::Bipartition const& b) {
    auto fa = as_partial_map(a), fb = as_partial_map(b);
    int const n = static_cast<int>(a.degree());
    std::set<std::set<int>> out;
    std::set<int>           used;
    for (auto [x, y] : fa) {
      auto it = fb.find(y);
      if (it != fb.end()) {
        out.insert({x, -it->second});
        used.insert(x);
        used.insert(-it->second);
      }
    }
    for (int p = 1; p <= n; ++p) {
      for (int v : {p, -p}) {
        if (!used.count(v)) {
          out.insert({v});
        }
      }
    }
    return from_sets(a.degree(), out);
  }

  // Family membership by the verbal definitions.
  inline bool is_generalised_line(std::vector<int> const& blk) {
    return std::any_of(blk.begin(), blk.end(), [](int v) { return v > 0; })
           && std::any_of(blk.begin(), blk.end(), [](int v) { return v < 0; });
  }

  inline bool in_pistar(pistar::Bipartition const& a) {
    for (auto const& blk : a.signed_blocks()) {
      if (blk.size() != 1 && !is_generalised_line(blk)) {
        return false;
      }
    }
    return true;
  }

  inline bool in_istar(pistar::Bipartition const& a) {
    for (auto const& blk : a.signed_blocks()) {
      if (!is_generalised_line(blk)) {
        return false;
      }
    }
    return true;
  }

  // Every set partition of {1..n, -1..-n}, by recursive insertion.
  inline std::vector<pistar::Bipartition> all_partitions(std::size_t n) {
    std::vector<int> pts;
    for (int p = 1; p <= static_cast<int>(n); ++p) {
      pts.push_back(p);
    }
    for (int p = 1; p <= static_cast<int>(n); ++p) {
      pts.push_back(-p);
    }
    std::vector<pistar::Bipartition> out;
    Blocks                           cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == pts.size()) {
        out.push_back(pistar::Bipartition::from_signed(n, cur));
        return;
      }
      for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(pts[i]);
        self(self, i + 1);
        cur[b].pop_back();
      }
      cur.push_back({pts[i]});
      self(self, i + 1);
      cur.pop_back();
    };
    rec(rec, 0);
    return out;
  }

  //! Every congruence of a small universe, by running through all set
  //! partitions of its index set and testing compatibility pair by pair.
  inline std::vector<pistar::EquivRelation>
  all_congruences(pistar::SemigroupUniverse const& u) {
    using pistar::index_type;
    std::size_t const             m = u.size();
    std::vector<index_type>       cls(m, 0);
    std::vector<pistar::EquivRelation> out;
    auto compatible = [&]() {
      for (index_type a = 0; a < m; ++a) {
        for (index_type b = a + 1; b < m; ++b) {
          if (cls[a] != cls[b]) {
            continue;
          }
          for (index_type s = 0; s < m; ++s) {
            if (cls[u.mul(a, s)] != cls[u.mul(b, s)]
                || cls[u.mul(s, a)] != cls[u.mul(s, b)]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t i, index_type used) -> void {
      if (i == m) {
        if (compatible()) {
          out.push_back(pistar::EquivRelation::from_keys(cls));
        }
        return;
      }
      for (index_type c = 0; c <= used; ++c) {
        cls[i] = c;
        self(self, i + 1, c == used ? used + 1 : used);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

}  // namespace oracle

#endif  // PISTAR_TESTS_ORACLES_HPP_
