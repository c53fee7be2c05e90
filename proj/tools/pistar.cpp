// pistar - exact computation in finite partition semigroups
//
// Command-line front end. Exit codes: 0 success or pass, 1 a check failed,
// 2 usage, parse or budget error.
//
// Text output: lines starting with '#' are comments; every other line
// starts with an element in the bracketed text format, optionally followed
// by a tab and an annotation.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <fstream>   // for ifstream
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "pistar/pistar.hpp"

namespace {

  using nlohmann::json;
  using namespace pistar;

  constexpr int kPass  = 0;
  constexpr int kFail  = 1;
  constexpr int kUsage = 2;

  struct Options {
    std::size_t                n = 0;
    std::string                family;
    std::string                op;
    std::string                emit;
    std::size_t                budget = kDefaultBudget;
    std::uint32_t              seed   = 1;
  };

  struct Target {
    Family      family;
    Product     product;
    std::string name;
  };

  Product parse_product(std::string const& s) {
    if (s == "natural") {
      return Product::Natural;
    } else if (s == "star") {
      return Product::Star;
    } else if (s == "circ") {
      return Product::Circ;
    }
    throw InvalidArgument("unknown product \"" + s + "\"");
  }

  //! The carrier and product named by --family and --op; wpistar is the
  //! PI* carrier with circ unless --op says otherwise.
  Target target(Options const& o) {
    static std::vector<std::pair<std::string, Family>> const names{
        {"c", Family::C},
        {"istar", Family::IStar},
        {"pistar", Family::PIStar},
        {"wpistar", Family::PIStar},
        {"i", Family::I},
        {"s", Family::S}};
    for (auto const& [name, f] : names) {
      if (name == o.family) {
        Product p = name == "wpistar" ? Product::Circ : default_product(f);
        if (!o.op.empty()) {
          p = parse_product(o.op);
        }
        return {f, p, name};
      }
    }
    throw InvalidArgument("unknown family \"" + o.family + "\"");
  }

  void require_degree(Options const& o) {
    if (o.n == 0) {
      throw InvalidArgument("--n is required and must be positive");
    }
  }

  SemigroupUniverse universe(Options const& o) {
    require_degree(o);
    Target const t = target(o);
    return enumerate_family(t.family, o.n, t.product, o.budget);
  }

  std::string label(Target const& t, std::size_t n) {
    return t.name + "_" + std::to_string(n) + " under "
           + product_name(t.product);
  }

  json element_strings(SemigroupUniverse const& u, ElementSet const& s) {
    json out = json::array();
    for (index_type i : s) {
      out.push_back(to_string(u.at(i)));
    }
    return out;
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  ////////////////////////////////////////////////////////////////////////
  // Verbs
  ////////////////////////////////////////////////////////////////////////

  int cmd_multiply(Options const& o, std::string const& lhs, std::string const& rhs) {
    std::optional<std::size_t> n;
    if (o.n != 0) {
      n = o.n;
    }
    Bipartition const a = parse_any(lhs, n);
    Bipartition const b = parse_any(rhs, n);
    if (a.degree() != b.degree()) {
      throw DegreeMismatch("operands have degrees " + std::to_string(a.degree())
                           + " and " + std::to_string(b.degree()));
    }
    Bipartition const c
        = multiply(parse_product(o.op.empty() ? "natural" : o.op), a, b);
    if (o.emit == "text") {
      std::cout << to_string(c) << '\n';
    } else {
      std::cout << to_json(c).dump() << '\n';
    }
    return kPass;
  }

  void emit_elements(Options const&                  o,
                     std::vector<Bipartition> const& xs,
                     std::string const&              what) {
    if (o.emit == "text") {
      for (Bipartition const& a : xs) {
        std::cout << to_string(a) << '\n';
      }
    } else if (o.emit == "jsonl") {
      for (Bipartition const& a : xs) {
        std::cout << to_json(a).dump() << '\n';
      }
    } else {
      json j{{"set", what}, {"size", xs.size()}, {"elements", json::array()}};
      for (Bipartition const& a : xs) {
        j["elements"].push_back(to_string(a));
      }
      print_json(j);
    }
  }

  int cmd_enumerate(Options const& o) {
    require_degree(o);
    Target const t = target(o);
    emit_elements(o,
                  family_elements(t.family, o.n, o.budget),
                  t.name + "_" + std::to_string(o.n));
    return kPass;
  }

  std::vector<std::string> read_generators(std::vector<std::string> const& args) {
    std::vector<std::string> out;
    for (std::string const& a : args) {
      if (a.empty() || a[0] != '@') {
        out.push_back(a);
        continue;
      }
      std::ifstream in(a.substr(1));
      if (!in) {
        throw InvalidArgument("cannot read generator file " + a.substr(1));
      }
      for (std::string line; std::getline(in, line);) {
        auto const first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
          out.push_back(line.substr(first, line.find_first_of("\t\r", first) - first));
        }
      }
    }
    if (out.empty()) {
      throw InvalidArgument("closure needs at least one generator");
    }
    return out;
  }

  int cmd_closure(Options const& o, std::vector<std::string> const& args) {
    std::optional<std::size_t> n;
    if (o.n != 0) {
      n = o.n;
    }
    GeneratorSet g;
    g.product = parse_product(o.op.empty() ? "natural" : o.op);
    for (std::string const& s : read_generators(args)) {
      g.generators.push_back(parse_any(s, n));
      if (g.generators.back().degree() != g.generators.front().degree()) {
        throw DegreeMismatch("generators have different degrees");
      }
    }
    auto xs = closure_elements(g, o.budget);
    sort_canonical(xs);
    emit_elements(o, xs, "closure");
    return kPass;
  }

  std::optional<GreenRelation> parse_relation(std::string const& s) {
    for (GreenRelation g : {GreenRelation::R,
                            GreenRelation::L,
                            GreenRelation::H,
                            GreenRelation::D,
                            GreenRelation::J}) {
      if (s == green_name(g)) {
        return g;
      }
    }
    return std::nullopt;
  }

  int cmd_green(Options const& o, std::string const& relation) {
    auto const g = parse_relation(relation);
    if (!g) {
      throw InvalidArgument("unknown relation \"" + relation + "\"");
    }
    SemigroupUniverse const u       = universe(o);
    auto const              classes = green_classes(u, *g).classes();
    if (o.emit == "text") {
      std::cout << "# " << relation << " on " << label(target(o), o.n) << ": "
                << classes.size() << " classes\n";
      for (ElementSet const& c : classes) {
        std::cout << to_string(u.at(c.front())) << "\tsize " << c.size()
                  << '\n';
      }
      return kPass;
    }
    json j{{"relation", relation},
           {"semigroup", label(target(o), o.n)},
           {"count", classes.size()},
           {"classes", json::array()}};
    for (ElementSet const& c : classes) {
      j["classes"].push_back(
          {{"size", c.size()}, {"representative", to_string(u.at(c.front()))}});
    }
    if (o.emit == "jsonl") {
      for (auto const& c : j["classes"]) {
        std::cout << c.dump() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

  int cmd_congruences(Options const& o) {
    SemigroupUniverse const u  = universe(o);
    auto const              cs = enumerate_congruences(u);
    json                    j{{"semigroup", label(target(o), o.n)},
                              {"count", cs.size()},
                              {"congruences", json::array()}};
    for (EquivRelation const& r : cs) {
      json c{{"classes", r.number_of_classes()}, {"class_sizes", json::array()},
             {"representatives", json::array()}};
      for (ElementSet const& k : r.classes()) {
        c["class_sizes"].push_back(k.size());
        c["representatives"].push_back(to_string(u.at(k.front())));
      }
      j["congruences"].push_back(std::move(c));
    }
    if (o.emit == "text") {
      std::cout << "# " << cs.size() << " congruences on " << j["semigroup"].get<std::string>() << '\n';
      std::size_t i = 0;
      for (auto const& c : j["congruences"]) {
        std::cout << "# congruence " << i++ << ": " << c["classes"].get<std::size_t>()
                  << " classes of sizes " << c["class_sizes"].dump() << '\n';
        for (std::size_t k = 0; k < c["representatives"].size(); ++k) {
          std::cout << c["representatives"][k].get<std::string>() << "\tclass size "
                    << c["class_sizes"][k].get<std::size_t>() << '\n';
        }
      }
    } else if (o.emit == "jsonl") {
      for (auto const& c : j["congruences"]) {
        std::cout << c.dump() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

  int cmd_isolated(Options const& o, bool complete) {
    SemigroupUniverse const u  = universe(o);
    auto const              ts = complete ? completely_isolated(u) : isolated(u);
    std::string const       what
        = std::string(complete ? "completely isolated" : "isolated")
          + " subsemigroups of " + label(target(o), o.n);
    if (o.emit == "text") {
      std::cout << "# " << ts.size() << ' ' << what << '\n';
      std::size_t i = 0;
      for (ElementSet const& t : ts) {
        std::cout << "# subsemigroup " << i++ << ": " << t.size()
                  << " elements\n";
        for (index_type x : t) {
          std::cout << to_string(u.at(x)) << '\n';
        }
      }
      return kPass;
    }
    json j{{"set", what}, {"count", ts.size()}, {"subsemigroups", json::array()}};
    for (ElementSet const& t : ts) {
      j["subsemigroups"].push_back(element_strings(u, t));
    }
    if (o.emit == "jsonl") {
      for (auto const& t : j["subsemigroups"]) {
        std::cout << t.dump() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

  std::string partial_map_string(PartialMap const& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
      s += (i == 0 ? "" : " ") + (f[i] < 0 ? std::string("-") : std::to_string(f[i] + 1));
    }
    return s + ")";
  }

  int cmd_represent(Options const& o, std::string const& idempotent) {
    SemigroupUniverse const u = universe(o);
    // Unmentioned points become singletons, so "[[1,-1]]" names eta_{1}.
    Bipartition const e = parse_lines(idempotent, o.n);
    auto const        f = u.index_of(e);
    if (!f || !u.is_idempotent(*f)) {
      throw InvalidArgument(to_string(e) + " is not an idempotent of "
                            + label(target(o), o.n));
    }
    CosetSpace const        c = coset_space(u, omega_up(u, *f));
    RepresentationMap const r = representation(u, c);
    json j{{"semigroup", label(target(o), o.n)},
           {"idempotent", to_string(e)},
           {"degree", r.degree},
           {"faithful", is_faithful(r)},
           {"image_size", image_size(r)},
           {"cosets", json::array()},
           {"table", json::array()}};
    for (index_type s : c.representative) {
      j["cosets"].push_back(to_string(u.at(s)));
    }
    for (index_type a = 0; a < u.size(); ++a) {
      json row{{"element", to_string(u.at(a))}, {"map", r.images[a]}};
      if (r.degree <= kMaxDegree) {
        row["image"] = to_string(partial_injection(r.images[a]));
      }
      j["table"].push_back(std::move(row));
    }
    if (o.emit == "text") {
      std::cout << "# phi_H with H = " << to_string(e) << " omega on "
                << j["semigroup"].get<std::string>() << ": " << r.degree
                << " cosets, " << (is_faithful(r) ? "faithful" : "not faithful")
                << ", image of size " << image_size(r) << '\n';
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::cout << to_string(u.at(c.representative[i])) << "\tcoset " << i + 1
                  << '\n';
      }
      std::cout << "# element, then its partial map on cosets 1.."
                << r.degree << '\n';
      for (index_type a = 0; a < u.size(); ++a) {
        std::cout << to_string(u.at(a)) << '\t'
                  << partial_map_string(r.images[a]) << '\n';
      }
    } else if (o.emit == "jsonl") {
      for (auto const& row : j["table"]) {
        std::cout << row.dump() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

  int cmd_automorphisms(Options const& o) {
    SemigroupUniverse const u     = universe(o);
    auto const              found = automorphisms(u);
    json j{{"semigroup", label(target(o), o.n)},
           {"count", found.size()},
           {"automorphisms", json::array()}};
    for (AutMap const& f : found) {
      json a{{"inner", nullptr}};
      for (Permutation const& pi : all_permutations(o.n)) {
        if (conjugation_aut(pi, u) == f) {
          a["inner"] = to_string(perm(o.n, pi));
          break;
        }
      }
      json images = json::array();
      for (index_type x = 0; x < u.size(); ++x) {
        images.push_back(to_string(u.at(f.image[x])));
      }
      a["images"] = std::move(images);
      j["automorphisms"].push_back(std::move(a));
    }
    if (o.emit == "text") {
      std::cout << "# " << found.size() << " automorphisms of "
                << j["semigroup"].get<std::string>()
                << "; each line is the unit it is conjugation by\n";
      for (auto const& a : j["automorphisms"]) {
        if (a["inner"].is_null()) {
          std::cout << "# not a conjugation\n";
        } else {
          std::cout << a["inner"].get<std::string>() << '\n';
        }
      }
    } else if (o.emit == "jsonl") {
      for (auto const& a : j["automorphisms"]) {
        std::cout << a.dump() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

  CheckOptions check_options(Options const& o) {
    CheckOptions c;
    c.seed   = o.seed;
    c.budget = o.budget;
    if (!o.family.empty()) {
      Target const t = target(o);
      c.family       = t.family;
      if (t.name == "wpistar" || !o.op.empty()) {
        c.product = t.product;
      } else if (t.family == Family::PIStar) {
        c.product = Product::Star;
      }
    }
    return c;
  }

  void print_report(Options const& o, CheckReport const& r) {
    if (o.emit == "text") {
      std::cout << "# " << r.id << " n=" << r.n << ": "
                << (r.pass ? "pass" : "fail") << " (" << r.runtime << " s)\n";
      for (std::string const& w : r.witnesses) {
        std::cout << "#   " << w << '\n';
      }
    } else if (o.emit == "jsonl") {
      std::cout << r.to_json().dump() << '\n';
    } else {
      print_json(r.to_json());
    }
  }

  int cmd_check(Options const& o, std::string const& id) {
    require_degree(o);
    CheckOptions const c = check_options(o);
    if (id != "all") {
      CheckReport const r = run_check(id, o.n, c);
      print_report(o, r);
      return r.pass ? kPass : kFail;
    }
    std::vector<CheckReport> reports;
    for (CheckInfo const& info : check_registry()) {
      if (info.min_n <= o.n && o.n <= info.max_n) {
        reports.push_back(run_check(info.id, o.n, c));
        if (o.emit != "json") {
          print_report(o, reports.back());
        }
      }
    }
    bool all_pass = true;
    json j        = json::array();
    for (CheckReport const& r : reports) {
      all_pass = all_pass && r.pass;
      j.push_back(r.to_json());
    }
    if (o.emit == "json") {
      print_json(j);
    }
    return all_pass ? kPass : kFail;
  }

  int cmd_list(Options const& o) {
    json j = json::array();
    for (CheckInfo const& c : check_registry()) {
      j.push_back({{"id", c.id},
                   {"summary", c.summary},
                   {"min_n", c.min_n},
                   {"max_n", c.max_n}});
    }
    if (o.emit == "text") {
      for (auto const& c : j) {
        std::cout << "# " << c["id"].get<std::string>() << " (n "
                  << c["min_n"].get<std::size_t>() << ".."
                  << c["max_n"].get<std::size_t>()
                  << "): " << c["summary"].get<std::string>() << '\n';
      }
    } else {
      print_json(j);
    }
    return kPass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the partition semigroups C_n, I*_n, "
               "PI*_n, wPI*_n and I_n"};
  app.require_subcommand(1);

  Options o;
  auto    common = [&](CLI::App* c, bool needs_family) {
    c->add_option("--n", o.n, "degree")->check(CLI::PositiveNumber);
    auto* fam = c->add_option("--family", o.family, "carrier")
                    ->check(CLI::IsMember(
                        {"c", "istar", "pistar", "wpistar", "i", "s"}));
    if (needs_family) {
      fam->required();
    }
    c->add_option("--op", o.op, "product")
        ->check(CLI::IsMember({"natural", "star", "circ"}));
    c->add_option("--emit", o.emit, "output format")
        ->check(CLI::IsMember({"text", "json", "jsonl"}));
    c->add_option("--budget-elements", o.budget,
                  "refuse enumerations larger than this")
        ->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "seed for randomized samples");
  };

  std::string lhs, rhs;
  auto*       multiply = app.add_subcommand("multiply", "multiply two elements");
  common(multiply, false);
  multiply->add_option("lhs", lhs, "left operand")->required();
  multiply->add_option("rhs", rhs, "right operand")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list every element");
  common(enumerate, true);

  std::vector<std::string> gens;
  auto* closure = app.add_subcommand(
      "closure", "the subsemigroup generated; @file reads one per line");
  common(closure, false);
  // One value per flag: CLI11 would otherwise split "[...]" on commas.
  closure->add_option("--gens", gens, "a generator or @file; repeatable")
      ->required()
      ->allow_extra_args(false);

  std::string relation;
  auto*       green = app.add_subcommand("green", "Green's classes");
  common(green, true);
  green->add_option("--relation", relation, "R, L, H, D or J")->required();

  auto* congruences = app.add_subcommand("congruences", "the congruence lattice");
  common(congruences, true);

  bool  complete = false;
  auto* iso = app.add_subcommand("isolated", "isolated subsemigroups");
  common(iso, true);
  iso->add_flag("--complete", complete, "completely isolated ones only");

  std::string idempotent;
  auto*       represent = app.add_subcommand(
      "represent", "the representation on omega-cosets of (f) omega");
  common(represent, true);
  represent->add_option("--idempotent", idempotent, "f; unmentioned points are "
                                                    "singletons")
      ->required();

  auto* autos = app.add_subcommand("automorphisms", "the automorphism group");
  common(autos, true);

  std::string id;
  auto*       check = app.add_subcommand("check", "run a registered check");
  common(check, false);
  check->add_option("id", id, "check id, or all")->required();

  auto* list = app.add_subcommand("list", "list the registered checks");
  common(list, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }
  // The check verb reports JSON unless told otherwise; the rest, text.
  if (o.emit.empty()) {
    o.emit = check->parsed() ? "json" : "text";
  }

  try {
    if (multiply->parsed()) {
      return cmd_multiply(o, lhs, rhs);
    } else if (enumerate->parsed()) {
      return cmd_enumerate(o);
    } else if (closure->parsed()) {
      return cmd_closure(o, gens);
    } else if (green->parsed()) {
      return cmd_green(o, relation);
    } else if (congruences->parsed()) {
      return cmd_congruences(o);
    } else if (iso->parsed()) {
      return cmd_isolated(o, complete);
    } else if (represent->parsed()) {
      return cmd_represent(o, idempotent);
    } else if (autos->parsed()) {
      return cmd_automorphisms(o);
    } else if (check->parsed()) {
      return cmd_check(o, id);
    } else if (list->parsed()) {
      return cmd_list(o);
    }
  } catch (pistar::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
