// pistar - exact computation in finite partition semigroups
//
// The universal element type: a partition of the signed points
// {1, ..., n} u {1', ..., n'} into blocks, stored in canonical form.

#ifndef PISTAR_BIPARTITION_HPP_
#define PISTAR_BIPARTITION_HPP_

#include <algorithm>         // for sort, fill
#include <array>             // for array
#include <bit>               // for popcount, countr_zero
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint8_t, uint32_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <string>            // for to_string
#include <vector>            // for vector

#include "error.hpp"

namespace pistar {

  //! Largest supported degree. Representations of degree-4 semigroups land in
  //! partial injections of degree 15, which fits.
  inline constexpr std::size_t kMaxDegree = 16;

  ////////////////////////////////////////////////////////////////////////
  // PointSet
  ////////////////////////////////////////////////////////////////////////

  //! A subset of {1, ..., n}; point i is bit i - 1.
  class PointSet {
   public:
    constexpr PointSet() noexcept = default;
    constexpr explicit PointSet(std::uint32_t bits) noexcept : _bits(bits) {}

    PointSet(std::initializer_list<int> points) {
      for (int p : points) {
        insert(p);
      }
    }

    static PointSet from_vector(std::vector<int> const& points) {
      PointSet result;
      for (int p : points) {
        result.insert(p);
      }
      return result;
    }

    static constexpr PointSet full(std::size_t n) noexcept {
      return PointSet(n >= 32 ? ~std::uint32_t(0)
                              : (std::uint32_t(1) << n) - 1);
    }

    constexpr std::uint32_t bits() const noexcept {
      return _bits;
    }

    constexpr bool contains(int point) const noexcept {
      return point >= 1 && point <= 32 && ((_bits >> (point - 1)) & 1u);
    }

    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    constexpr bool empty() const noexcept {
      return _bits == 0;
    }

    //! Smallest point, or 0 if empty.
    constexpr int min() const noexcept {
      return _bits == 0 ? 0 : std::countr_zero(_bits) + 1;
    }

    void insert(int point) {
      if (point < 1 || point > static_cast<int>(kMaxDegree)) {
        throw InvalidArgument("point " + std::to_string(point)
                              + " out of range");
      }
      _bits |= std::uint32_t(1) << (point - 1);
    }

    constexpr bool is_subset_of(PointSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    std::vector<int> to_vector() const {
      std::vector<int> out;
      for (std::uint32_t b = _bits; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
      }
      return out;
    }

    constexpr PointSet operator|(PointSet other) const noexcept {
      return PointSet(_bits | other._bits);
    }
    constexpr PointSet operator&(PointSet other) const noexcept {
      return PointSet(_bits & other._bits);
    }
    constexpr PointSet operator-(PointSet other) const noexcept {
      return PointSet(_bits & ~other._bits);
    }

    constexpr bool operator==(PointSet const&) const noexcept = default;
    constexpr auto operator<=>(PointSet const&) const noexcept = default;

   private:
    std::uint32_t _bits = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Blocks
  ////////////////////////////////////////////////////////////////////////

  enum class BlockKind { Point, GeneralisedLine, Line, Other };

  //! One block, split into its top points and (unprimed) bottom points.
  struct Block {
    PointSet top;
    PointSet bottom;

    constexpr std::size_t size() const noexcept {
      return top.size() + bottom.size();
    }

    constexpr bool is_generalised_line() const noexcept {
      return !top.empty() && !bottom.empty();
    }

    //! Point, Line, GeneralisedLine (not a line), or Other (a block of two
    //! or more points lying in a single row).
    constexpr BlockKind kind() const noexcept {
      if (size() == 1) {
        return BlockKind::Point;
      } else if (is_generalised_line()) {
        return size() == 2 ? BlockKind::Line : BlockKind::GeneralisedLine;
      }
      return BlockKind::Other;
    }

    constexpr bool operator==(Block const&) const noexcept = default;
  };

  //! Fixed-capacity list of blocks; avoids allocation in product kernels.
  class BlockList {
   public:
    void push_back(Block b) noexcept {
      _data[_size++] = b;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Block const& operator[](std::size_t i) const noexcept {
      return _data[i];
    }
    Block& operator[](std::size_t i) noexcept {
      return _data[i];
    }
    Block const* begin() const noexcept {
      return _data.data();
    }
    Block const* end() const noexcept {
      return _data.data() + _size;
    }

   private:
    std::array<Block, 2 * kMaxDegree> _data{};
    std::size_t                       _size = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Bipartition
  ////////////////////////////////////////////////////////////////////////

  //! Points are indexed 0, ..., 2n - 1: index p < n is the top point p + 1,
  //! index p >= n is the bottom point (p - n + 1)'.
  //!
  //! The canonical form labels the blocks 0, 1, 2, ... in order of their
  //! minimal point under 1 < ... < n < 1' < ... < n', so two values are equal
  //! iff they describe the same partition.
  class Bipartition {
   public:
    Bipartition() = default;

    //! Canonicalizes an arbitrary labelling of the 2n points.
    static Bipartition from_labels(std::size_t                   n,
                                   std::span<std::uint8_t const> labels) {
      check_degree(n);
      if (labels.size() != 2 * n) {
        throw MalformedElement("expected " + std::to_string(2 * n)
                               + " labels, found "
                               + std::to_string(labels.size()));
      }
      Bipartition                 result;
      std::array<std::uint8_t, 256> relabel;
      relabel.fill(0xFF);
      std::uint8_t next = 0;
      result._degree    = static_cast<std::uint8_t>(n);
      for (std::size_t p = 0; p < 2 * n; ++p) {
        auto& r = relabel[labels[p]];
        if (r == 0xFF) {
          r = next++;
        }
        result._labels[p] = r;
      }
      result._nr_blocks = next;
      return result;
    }

    //! Builds from disjoint blocks covering all 2n points.
    static Bipartition from_blocks(std::size_t n, std::span<Block const> blocks) {
      check_degree(n);
      std::array<std::uint8_t, 2 * kMaxDegree> labels;
      labels.fill(0xFF);
      PointSet const all = PointSet::full(n);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        Block const& block = blocks[b];
        if (block.size() == 0) {
          throw MalformedElement("empty block");
        }
        if (!block.top.is_subset_of(all) || !block.bottom.is_subset_of(all)) {
          throw MalformedElement("block mentions a point outside degree "
                                 + std::to_string(n));
        }
        for (int p : block.top.to_vector()) {
          set_label(labels, static_cast<std::size_t>(p - 1), b);
        }
        for (int p : block.bottom.to_vector()) {
          set_label(labels, n + static_cast<std::size_t>(p - 1), b);
        }
      }
      for (std::size_t p = 0; p < 2 * n; ++p) {
        if (labels[p] == 0xFF) {
          throw MalformedElement("point " + signed_name(n, p) + " is missing");
        }
      }
      return from_labels(n, std::span(labels.data(), 2 * n));
    }

    //! Builds from blocks of signed points (negative means primed).
    static Bipartition from_signed(std::size_t                          n,
                                   std::vector<std::vector<int>> const& blocks) {
      check_degree(n);
      std::vector<Block> converted;
      converted.reserve(blocks.size());
      for (auto const& signed_block : blocks) {
        Block block;
        for (int v : signed_block) {
          if (v == 0) {
            throw MalformedElement("0 is not a signed point");
          }
          int const abs_v = v < 0 ? -v : v;
          if (abs_v > static_cast<int>(n)) {
            throw MalformedElement("point " + std::to_string(v)
                                   + " exceeds degree " + std::to_string(n));
          }
          PointSet& row = v > 0 ? block.top : block.bottom;
          if (row.contains(abs_v)) {
            throw MalformedElement("point " + std::to_string(v)
                                   + " is repeated");
          }
          row.insert(abs_v);
        }
        converted.push_back(block);
      }
      return from_blocks(n, converted);
    }

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::size_t number_of_blocks() const noexcept {
      return _nr_blocks;
    }

    std::uint8_t label(std::size_t point) const noexcept {
      return _labels[point];
    }

    std::span<std::uint8_t const> labels() const noexcept {
      return std::span(_labels.data(), 2 * static_cast<std::size_t>(_degree));
    }

    //! Blocks in canonical order (block i has label i).
    BlockList blocks() const noexcept {
      BlockList   result;
      std::size_t n = _degree;
      for (std::size_t b = 0; b < _nr_blocks; ++b) {
        result.push_back(Block{});
      }
      for (std::size_t p = 0; p < n; ++p) {
        Block& b = result[_labels[p]];
        b.top    = b.top | PointSet(std::uint32_t(1) << p);
      }
      for (std::size_t p = 0; p < n; ++p) {
        Block& b = result[_labels[n + p]];
        b.bottom = b.bottom | PointSet(std::uint32_t(1) << p);
      }
      return result;
    }

    //! Blocks as signed integers in output order: the generalised lines by
    //! minimal point, then the remaining blocks by minimal point. Inside a
    //! block the top points ascend, then the bottom points (negated) ascend.
    std::vector<std::vector<int>> signed_blocks() const {
      std::vector<std::vector<int>> result;
      BlockList const               bl = blocks();
      for (bool lines : {true, false}) {
        for (Block const& b : bl) {
          if (b.is_generalised_line() != lines) {
            continue;
          }
          std::vector<int>& out = result.emplace_back();
          for (int p : b.top.to_vector()) {
            out.push_back(p);
          }
          for (int p : b.bottom.to_vector()) {
            out.push_back(-p);
          }
        }
      }
      return result;
    }

    //! Number of generalised lines.
    std::size_t rank() const noexcept {
      std::size_t r = 0;
      for (Block const& b : blocks()) {
        r += b.is_generalised_line();
      }
      return r;
    }

    std::size_t hash() const noexcept {
      // FNV-1a
      std::size_t h = 14695981039346656037ull ^ _degree;
      for (std::size_t p = 0; p < 2 * static_cast<std::size_t>(_degree); ++p) {
        h ^= _labels[p];
        h *= 1099511628211ull;
      }
      return h;
    }

    bool operator==(Bipartition const&) const noexcept = default;
    auto operator<=>(Bipartition const&) const noexcept = default;

   private:
    static void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxDegree) {
        throw MalformedElement("degree " + std::to_string(n)
                               + " is outside [1, "
                               + std::to_string(kMaxDegree) + "]");
      }
    }

    static std::string signed_name(std::size_t n, std::size_t p) {
      return p < n ? std::to_string(p + 1) : std::to_string(p - n + 1) + "'";
    }

    static void set_label(std::array<std::uint8_t, 2 * kMaxDegree>& labels,
                          std::size_t                               point,
                          std::size_t                               block) {
      if (labels[point] != 0xFF) {
        throw MalformedElement("a point occurs in two blocks");
      }
      labels[point] = static_cast<std::uint8_t>(block);
    }

    // _degree and _nr_blocks precede _labels so the defaulted ordering
    // compares degree first.
    std::uint8_t                             _degree    = 0;
    std::uint8_t                             _nr_blocks = 0;
    std::array<std::uint8_t, 2 * kMaxDegree> _labels{};
  };

  struct BipartitionHash {
    std::size_t operator()(Bipartition const& x) const noexcept {
      return x.hash();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  //! Membership predicates over Bipartition.
  //!
  //! * C: every partition;
  //! * IStar: every block is a generalised line;
  //! * PIStar: every block is a point or a generalised line;
  //! * I: every block is a point or a line (partial injections);
  //! * S: every block is a line and the rank is n (permutations).
  enum class Family { C, IStar, PIStar, I, S };

  inline bool is_member(Family f, Bipartition const& a) noexcept {
    bool all_lines = true;
    for (Block const& b : a.blocks()) {
      BlockKind k = b.kind();
      switch (f) {
        case Family::C:
          return true;
        case Family::IStar:
          if (!b.is_generalised_line()) {
            return false;
          }
          break;
        case Family::PIStar:
          if (k == BlockKind::Other) {
            return false;
          }
          break;
        case Family::I:
        case Family::S:
          if (k != BlockKind::Point && k != BlockKind::Line) {
            return false;
          }
          all_lines = all_lines && k == BlockKind::Line;
          break;
      }
    }
    return f != Family::S || all_lines;
  }

  inline char const* family_name(Family f) noexcept {
    switch (f) {
      case Family::C:
        return "C";
      case Family::IStar:
        return "I*";
      case Family::PIStar:
        return "PI*";
      case Family::I:
        return "I";
      case Family::S:
        return "S";
    }
    return "?";
  }

  inline void require_member(Family f, Bipartition const& a, char const* what) {
    if (!is_member(f, a)) {
      throw FamilyError(std::string(what) + ": operand is not in "
                        + family_name(f));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Domain data
  ////////////////////////////////////////////////////////////////////////

  //! rank = number of generalised lines = |dom| = |ran|; codom and coran are
  //! the top and (unprimed) bottom points covered by no generalised line;
  //! corank = |codom|.
  struct DomainData {
    std::size_t           rank = 0;
    std::vector<PointSet> dom;  // sorted by minimal point
    std::vector<PointSet> ran;  // sorted by minimal point
    PointSet              codom;
    PointSet              coran;
    std::size_t           corank = 0;

    bool operator==(DomainData const&) const = default;
  };

  inline DomainData domain_data(Bipartition const& a) {
    require_member(Family::PIStar, a, "domain_data");
    DomainData d;
    PointSet   top, bottom;
    for (Block const& b : a.blocks()) {
      if (b.is_generalised_line()) {
        d.dom.push_back(b.top);
        d.ran.push_back(b.bottom);
        top    = top | b.top;
        bottom = bottom | b.bottom;
      }
    }
    auto by_min = [](PointSet x, PointSet y) { return x.min() < y.min(); };
    std::sort(d.dom.begin(), d.dom.end(), by_min);
    std::sort(d.ran.begin(), d.ran.end(), by_min);
    d.rank   = d.dom.size();
    d.codom  = PointSet::full(a.degree()) - top;
    d.coran  = PointSet::full(a.degree()) - bottom;
    d.corank = d.codom.size();
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Restriction to an invariant subset
  ////////////////////////////////////////////////////////////////////////

  //! Y is invariant for a if every block lies inside Y u Y' or misses it.
  inline bool is_invariant(Bipartition const& a, PointSet y) noexcept {
    for (Block const& b : a.blocks()) {
      bool inside  = b.top.is_subset_of(y) && b.bottom.is_subset_of(y);
      bool outside = (b.top & y).empty() && (b.bottom & y).empty();
      if (!inside && !outside) {
        return false;
      }
    }
    return true;
  }

  //! The blocks of a inside Y u Y', relabelled order-isomorphically onto
  //! {1, ..., |Y|}.
  inline Bipartition restrict(Bipartition const& a, PointSet y) {
    if (y.empty() || !y.is_subset_of(PointSet::full(a.degree()))) {
      throw InvalidArgument("restrict: Y must be a non-empty subset of the "
                            "points");
    }
    if (!is_invariant(a, y)) {
      throw InvalidArgument("restrict: Y is not invariant");
    }
    std::vector<int>          members = y.to_vector();
    std::size_t const         m       = members.size();
    std::size_t const         n       = a.degree();
    std::vector<std::uint8_t> labels(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t p = static_cast<std::size_t>(members[i] - 1);
      labels[i]     = a.label(p);
      labels[m + i] = a.label(n + p);
    }
    return Bipartition::from_labels(m, labels);
  }

  //! Inverse of restrict for elements of degree |Y|: places a on Y and makes
  //! every point outside Y u Y' a singleton.
  inline Bipartition extend_by_points(Bipartition const& a,
                                      PointSet           y,
                                      std::size_t        n) {
    std::vector<int> members = y.to_vector();
    if (members.size() != a.degree()
        || !y.is_subset_of(PointSet::full(n))) {
      throw InvalidArgument("extend_by_points: |Y| must equal the degree");
    }
    std::vector<std::uint8_t> labels(2 * n);
    std::uint8_t              fresh = static_cast<std::uint8_t>(2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      labels[p] = fresh++;
    }
    std::size_t const m = a.degree();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t p = static_cast<std::size_t>(members[i] - 1);
      labels[p]     = a.label(i);
      labels[n + p] = a.label(m + i);
    }
    return Bipartition::from_labels(n, labels);
  }

}  // namespace pistar

template <>
struct std::hash<pistar::Bipartition> {
  std::size_t operator()(pistar::Bipartition const& x) const noexcept {
    return x.hash();
  }
};

#endif  // PISTAR_BIPARTITION_HPP_
