// pistar - exact computation in finite partition semigroups
//
// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit code 0 when every criterion passes, 1 otherwise. With -v the
// witnesses of every check are printed too.

#include <chrono>    // for steady_clock
#include <cstddef>   // for size_t
#include <cstring>   // for strcmp
#include <iostream>  // for cout
#include <string>    // for string
#include <vector>    // for vector

#include "pistar/pistar.hpp"

namespace {

  using namespace pistar;

  bool verbose = false;

  class Criterion {
   public:
    Criterion(int number, std::string title)
        : _number(number),
          _title(std::move(title)),
          _start(std::chrono::steady_clock::now()) {}

    //! Runs a registered check and folds its outcome in.
    void run(std::string const& id, std::size_t n, CheckOptions const& o = {}) {
      CheckReport const r = run_check(id, n, o);
      record(r.pass, id + " n=" + std::to_string(n), r.witnesses);
    }

    void expect(bool cond, std::string const& what) {
      record(cond, what, {});
    }

    void time_limit(double seconds) {
      double const t = elapsed();
      expect(t < seconds, "runtime " + std::to_string(t) + " s < "
                              + std::to_string(seconds) + " s");
    }

    bool finish() const {
      std::cout << (_ok ? "PASS" : "FAIL") << "  " << _number << ". "
                << _title << " (" << elapsed() << " s)";
      if (!_failures.empty()) {
        std::cout << ": failed " << _failures;
      }
      std::cout << std::endl;
      return _ok;
    }

   private:
    void record(bool                            ok,
                std::string const&              what,
                std::vector<std::string> const& witnesses) {
      if (verbose) {
        std::cout << "      " << (ok ? "ok   " : "FAIL ") << what << '\n';
        for (std::string const& w : witnesses) {
          std::cout << "        " << w << '\n';
        }
      }
      if (!ok) {
        _ok = false;
        _failures += (_failures.empty() ? "" : "; ") + what;
      }
    }

    double elapsed() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                           - _start)
          .count();
    }

    int                                   _number;
    std::string                           _title;
    std::chrono::steady_clock::time_point _start;
    bool                                  _ok = true;
    std::string                           _failures;
  };

  CheckOptions only(Family f, Product p) {
    CheckOptions o;
    o.family  = f;
    o.product = p;
    return o;
  }

  // Each criterion guards against exceptions so that one error cannot hide
  // the lines after it.
  template <typename F>
  bool criterion(int number, std::string title, F&& body) {
    Criterion c(number, std::move(title));
    try {
      body(c);
    } catch (std::exception const& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    return c.finish();
  }

}  // namespace

int main(int argc, char** argv) {
  verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool ok = true;

  ok &= criterion(1, "algebraic identities at n = 3, 4", [](Criterion& c) {
    for (std::size_t n : {3, 4}) {
      c.run("eq1-identities", n);
      c.run("eq2-conjugation", n);
    }
    c.time_limit(1);
  });

  ok &= criterion(2, "associativity of star, circ on PI*_2, PI*_3 and natural on C_2",
                  [](Criterion& c) {
                    c.expect(family_size(Family::PIStar, 2) == 12,
                             "|PI*_2|^3 = 1728 triples");
                    c.run("associativity", 2);
                    c.run("associativity", 3);
                    c.time_limit(120);
                  });

  ok &= criterion(3, "inverse-semigroup axioms at n = 2, 3", [](Criterion& c) {
    c.run("inverse-axioms", 2);
    c.run("inverse-axioms", 3);
  });

  ok &= criterion(4, "Green's structure and the ideals of PI*_2", [](Criterion& c) {
    c.run("green-oracle", 2, only(Family::PIStar, Product::Star));
    c.run("green-oracle", 2, only(Family::PIStar, Product::Circ));
    c.run("green-oracle", 3, only(Family::IStar, Product::Natural));
    c.run("ideals", 2, only(Family::PIStar, Product::Star));
  });

  ok &= criterion(5, "mu trivial on PI*_n, wPI*_n, not on I*_n, n = 2, 3",
                  [](Criterion& c) {
                    c.run("fundamental", 2);
                    c.run("fundamental", 3);
                  });

  ok &= criterion(6, "generation, irreducibility and the generating theorem",
                  [](Criterion& c) {
                    GeneratorSet g{Product::Star, symmetric_group(3), false};
                    g.generators.push_back(gamma(3, 1, 2));
                    g.generators.push_back(inverse(gamma(3, 1, 2)));
                    c.expect(closure_elements(g).size() == 128
                                 && family_size(Family::PIStar, 3) == 128,
                             "|<S_3, gamma, gamma^-1>| = 128 = |PI*_3|");
                    c.run("closure-generation", 3);
                    c.run("irreducibility", 3);
                    c.run("irreducibility", 4);
                    c.run("generating-theorem", 3);
                    c.time_limit(60);
                  });

  ok &= criterion(7, "maximal subsemigroups of PI*_3", [](Criterion& c) {
    c.run("maximal-subsemigroups", 3);
  });

  ok &= criterion(8, "congruence lattices of I*_n, PI*_n, wPI*_n at n = 2, 3",
                  [](Criterion& c) {
                    c.expect(enumerate_congruences(enumerate_family(
                                                       Family::IStar, 2))
                                     .size()
                                 == 3,
                             "I*_2 has 3 congruences");
                    for (std::size_t n : {2, 3}) {
                      c.run("congruences-istar", n);
                      c.run("congruences-pistar", n);
                    }
                    c.time_limit(300);
                  });

  ok &= criterion(9, "completely isolated subsemigroups", [](Criterion& c) {
    c.run("completely-isolated", 2);
    c.run("completely-isolated", 3);
  });

  ok &= criterion(10, "isolated subsemigroups", [](Criterion& c) {
    c.expect(isolated(enumerate_family(Family::IStar, 3)).size() == 3 + 3,
             "I*_3 has 3 + C(3, 2) isolated subsemigroups");
    c.run("isolated-istar", 3);
    c.run("isolated-wpistar", 2);
    c.run("isolated-wpistar", 3);
    c.run("isolated-pistar", 3);
    c.time_limit(600);
  });

  ok &= criterion(11, "automorphisms are the n! conjugations, n = 2, 3",
                  [](Criterion& c) {
                    c.run("aut-count", 2);
                    c.run("aut-count", 3);
                  });

  ok &= criterion(12, "faithful representations of degree 2^n - 1, n = 2, 3, 4",
                  [](Criterion& c) {
                    c.run("representation-degree", 2);
                    c.run("representation-degree", 3);
                    auto const start = std::chrono::steady_clock::now();
                    c.run("representation-degree", 4);
                    double const t = std::chrono::duration<double>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
                    c.expect(t < 120, "n = 4 in " + std::to_string(t) + " s < 120 s");
                  });

  ok &= criterion(13, "non-closure witnesses at the least degree", [](Criterion& c) {
    c.run("non-closure", 3);
    auto const a = find_non_closure(Family::PIStar, Product::Natural, 3);
    auto const b = find_non_closure(Family::IStar, Product::Circ, 3);
    c.expect(a && b, "witnesses at degree <= 3");
    if (!a || !b) {
      return;
    }
    c.expect(!find_non_closure(Family::PIStar, Product::Natural, a->n - 1)
                 && !find_non_closure(Family::IStar, Product::Circ, b->n - 1),
             "no witness at a smaller degree");
    if (verbose) {
      std::cout << "      " << to_string(a->a) << " natural " << to_string(a->b)
                << " = " << to_string(a->product) << " (n = " << a->n << ")\n"
                << "      " << to_string(b->a) << " circ " << to_string(b->b)
                << " = " << to_string(b->product) << " (n = " << b->n << ")\n";
    }
  });

  return ok ? 0 : 1;
}
