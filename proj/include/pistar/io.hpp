// pistar - exact computation in finite partition semigroups
//
// Text and JSON serialization of Bipartition values.
//
// Text form:  [[1,2,-1],[3],[-2],[-3]]   (negative integers are primed points)
// JSON form:  {"n": 3, "blocks": [[1,2,-1],[3],[-2],[-3]]}
//
// Both forms are emitted in canonical order: the generalised lines ordered by
// minimal point under 1 < ... < n < 1' < ... < n', then the other blocks in
// the same order; inside a block the top points ascend, followed by the
// bottom points.

#ifndef PISTAR_IO_HPP_
#define PISTAR_IO_HPP_

#include <algorithm>    // for max
#include <cstddef>      // for size_t
#include <cstdlib>      // for abs
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "json.hpp"

#include "bipartition.hpp"
#include "error.hpp"

namespace pistar {

  namespace detail {
    inline std::vector<std::vector<int>> parse_signed_blocks(
        std::string_view text) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const&) {
        throw MalformedElement("cannot parse element \"" + std::string(text)
                               + "\"");
      }
      if (!j.is_array()) {
        throw MalformedElement("an element is a list of blocks");
      }
      std::vector<std::vector<int>> blocks;
      for (auto const& block : j) {
        if (!block.is_array() || block.empty()) {
          throw MalformedElement("every block is a non-empty list of points");
        }
        std::vector<int>& out = blocks.emplace_back();
        for (auto const& v : block) {
          if (!v.is_number_integer()) {
            throw MalformedElement("points are non-zero integers");
          }
          out.push_back(v.get<int>());
        }
      }
      return blocks;
    }

    inline std::size_t max_abs_point(
        std::vector<std::vector<int>> const& blocks) {
      std::size_t n = 0;
      for (auto const& b : blocks) {
        for (int v : b) {
          n = std::max(n, static_cast<std::size_t>(std::abs(v)));
        }
      }
      return n;
    }
  }  // namespace detail

  inline Bipartition parse(std::string_view text, std::size_t n) {
    return Bipartition::from_signed(n, detail::parse_signed_blocks(text));
  }

  //! Parses with the degree taken to be the largest |point| mentioned.
  inline Bipartition parse(std::string_view text) {
    auto blocks = detail::parse_signed_blocks(text);
    return Bipartition::from_signed(detail::max_abs_point(blocks), blocks);
  }

  //! Parses an element of PI* given only its generalised lines (or any
  //! subset of its blocks); every unmentioned point becomes a singleton.
  inline Bipartition parse_lines(std::string_view text, std::size_t n) {
    auto blocks = detail::parse_signed_blocks(text);
    std::vector<bool> seen(2 * n + 1, false);
    for (auto const& b : blocks) {
      for (int v : b) {
        if (v != 0 && static_cast<std::size_t>(std::abs(v)) <= n) {
          seen[static_cast<std::size_t>(v > 0 ? v : static_cast<int>(n) - v)]
              = true;
        }
      }
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        blocks.push_back({v});
      }
      if (!seen[n + static_cast<std::size_t>(v)]) {
        blocks.push_back({-v});
      }
    }
    return Bipartition::from_signed(n, blocks);
  }

  inline std::string to_string(Bipartition const& a) {
    std::string out = "[";
    bool        first_block = true;
    for (auto const& block : a.signed_blocks()) {
      if (!first_block) {
        out += ',';
      }
      first_block = false;
      out += '[';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(block[i]);
      }
      out += ']';
    }
    out += ']';
    return out;
  }

  inline nlohmann::json to_json(Bipartition const& a) {
    return nlohmann::json{{"n", a.degree()}, {"blocks", a.signed_blocks()}};
  }

  inline Bipartition from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks")
        || !j["n"].is_number_integer() || !j["blocks"].is_array()) {
      throw MalformedElement(R"(expected {"n": int, "blocks": [[int]]})");
    }
    int const n = j["n"].get<int>();
    if (n <= 0) {
      throw MalformedElement("degree must be positive");
    }
    return parse(j["blocks"].dump(), static_cast<std::size_t>(n));
  }

  //! Accepts either the text form or the JSON object form; the degree is
  //! taken from the JSON object, from `n` when given, or inferred.
  inline Bipartition parse_any(std::string_view           text,
                               std::optional<std::size_t> n = std::nullopt) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const&) {
        throw MalformedElement("cannot parse element \"" + std::string(text)
                               + "\"");
      }
      return from_json(j);
    }
    return n ? parse(text, *n) : parse(text);
  }

}  // namespace pistar

#endif  // PISTAR_IO_HPP_
