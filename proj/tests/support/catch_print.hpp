// Readable Catch2 output for library values.

#ifndef PISTAR_TESTS_CATCH_PRINT_HPP_
#define PISTAR_TESTS_CATCH_PRINT_HPP_

#include "catch_amalgamated.hpp"

#include "pistar/bipartition.hpp"
#include "pistar/io.hpp"

template <>
struct Catch::StringMaker<pistar::Bipartition> {
  static std::string convert(pistar::Bipartition const& a) {
    return pistar::to_string(a);
  }
};

template <>
struct Catch::StringMaker<pistar::PointSet> {
  static std::string convert(pistar::PointSet const& s) {
    std::string out = "{";
    for (int p : s.to_vector()) {
      out += (out.size() > 1 ? "," : "") + std::to_string(p);
    }
    return out + "}";
  }
};

#endif  // PISTAR_TESTS_CATCH_PRINT_HPP_
