#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centre.hpp"
#include "effectlang.hpp"
#include "error.hpp"
#include "laws.hpp"
#include "pomonoid.hpp"
#include "registry.hpp"
#include "relaxations.hpp"
#include "report.hpp"

namespace gcentre::cli {

  inline constexpr char const* fixtures_env = "GCENTRE_FIXTURES";

  // Relative paths that do not exist are retried under $GCENTRE_FIXTURES.
  inline std::string read_input(std::string const& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> tries{path};
    if (char const* dir = std::getenv(fixtures_env); dir && *dir) {
      fs::path p(path);
      if (p.is_relative()) {
        tries.push_back(fs::path(dir) / p);
        tries.push_back(fs::path(dir) / p.filename());
      }
    }
    for (auto const& p : tries) {
      std::error_code ec;
      if (fs::is_regular_file(p, ec)) {
        std::ifstream      in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
      }
    }
    throw error(errc::file_not_found, path);
  }

  inline bool is_check_failure(errc c) {
    switch (c) {
      case errc::associativity_violation:
      case errc::unit_violation:
      case errc::antisymmetry_violation:
      case errc::monotonicity_violation:
      case errc::centrality_violation:
      case errc::not_commutative:
      case errc::not_a_submonad: return true;
      default: return false;
    }
  }

  struct Options {
    std::optional<std::size_t> bound;
    std::size_t                max_set_size = 3;
    bool                       max_set_size_given = false;
    bool                       json = false;
    std::string                monad;
    std::string                pomonoid;
    std::string                file;
    std::string                from;
    std::string                to;
    std::string                grade;
    std::optional<std::size_t> set_size;
    std::string                alphabet = "ab";
    std::size_t                cap = 2;
    std::string                generators;
  };

  class Runner {
   public:
    Runner(Options o, std::ostream& out) : _o(std::move(o)), _out(out) {}

    Bound bound() const {
      Bound b;
      b.fixed = _o.bound;
      return b;
    }

    std::optional<Pomonoid> pomonoid_opt() const {
      if (_o.pomonoid.empty()) {
        return std::nullopt;
      }
      return parse_pomonoid(read_input(_o.pomonoid));
    }

    GradedStrongMonad monad() const {
      if (_o.monad.empty()) {
        throw error(errc::unknown_name, "--monad is required");
      }
      return lookup_monad(_o.monad, pomonoid_opt());
    }

    // Prints reports and returns the exit code they imply.
    int emit(std::vector<Report> const& reports, nlohmann::json extra = {}) {
      bool ok = true;
      for (auto const& r : reports) {
        ok = ok && r.passed();
      }
      if (_o.json) {
        nlohmann::json j = extra.is_null() ? nlohmann::json::object() : extra;
        j["passed"]      = ok;
        j["reports"]     = nlohmann::json::array();
        for (auto const& r : reports) {
          j["reports"].push_back(r.to_json());
        }
        _out << j.dump(2) << "\n";
      } else {
        for (auto const& r : reports) {
          r.print(_out);
        }
      }
      return ok ? 0 : 1;
    }

    int pomonoid_check() {
      Pomonoid p = parse_pomonoid(read_input(_o.file));
      if (_o.json) {
        _out << nlohmann::json{{"passed", true},
                               {"elements", p.names()},
                               {"unit", p.name(p.unit())},
                               {"commutative", p.commutative()}}
                    .dump(2)
             << "\n";
      } else {
        _out << "pomonoid OK: " << p.size() << " elements, unit "
             << p.name(p.unit())
             << (p.commutative() ? ", commutative" : ", not commutative")
             << "\n";
      }
      return 0;
    }

    int pomonoid_centre() {
      Pomonoid p  = parse_pomonoid(read_input(_o.file));
      auto     zc = centre_of_pomonoid(p);
      Report   r  = check_pomonoid_morphism(zc.inclusion);
      std::string set = "{";
      for (Grade g = 0; g < zc.centre.size(); ++g) {
        set += (g ? "," : "") + zc.centre.name(g);
      }
      set += "}";
      if (_o.json) {
        return emit({r}, {{"centre", zc.centre.names()}});
      }
      _out << "centre: " << set << "\n";
      return emit({r});
    }

    int two_product_check(bool duoid) {
      auto spec = parse_pomonoid_text(read_input(_o.file));
      if (duoid) {
        return emit({check_duoid(duoid_from_spec(spec))});
      }
      return emit({check_bimonoid(bimonoid_from_spec(spec))});
    }

    int monad_laws() {
      auto m = monad();
      return emit({check_monad_laws(m, _o.max_set_size),
                   check_order_laws(m, _o.max_set_size),
                   check_strength_laws(m, _o.max_set_size),
                   check_costrength_coherence(m, _o.max_set_size),
                   check_naturality(m, _o.max_set_size)});
    }

    int monad_commutative() {
      auto m   = monad();
      auto res = check_commutative_detailed(m, _o.max_set_size);
      nlohmann::json pairs = nlohmann::json::array();
      for (auto const& pv : res.failing()) {
        std::string kind =
            pv.carriers_equal ? "value mismatch" : "carrier mismatch";
        pairs.push_back({{"a", m.grading.name(pv.a)},
                         {"b", m.grading.name(pv.b)},
                         {"kind", kind}});
        if (!_o.json) {
          _out << "failing pair (" << m.grading.name(pv.a) << ","
               << m.grading.name(pv.b) << "): " << kind << "\n";
        }
      }
      return emit({res.report}, {{"failing_pairs", pairs}});
    }

    int monad_centre() {
      auto m   = monad();
      auto res = build_centre_monad(m, bound(), _o.max_set_size);
      auto const& zc = res.grading;
      std::vector<Grade> grades;
      if (!_o.grade.empty()) {
        Grade g = m.grading.index(_o.grade);
        require_central_grade(m, g);
        grades.push_back(g);
      } else {
        grades = zc.inclusion.map;
      }
      std::vector<std::size_t> sizes;
      if (_o.set_size) {
        sizes.push_back(*_o.set_size);
      } else {
        for (std::size_t n = 0; n <= _o.max_set_size; ++n) {
          sizes.push_back(n);
        }
      }
      nlohmann::json      records = nlohmann::json::array();
      std::vector<Report> reports;
      Report              cones("centre cones: " + m.name);
      for (auto g : grades) {
        for (auto n : sizes) {
          FinSet x    = canonical_set(n);
          auto   cone = graded_centre_at(m, g, x, bound());
          cones.merge(check_central_cone(m, cone, bound()));
          nlohmann::json members = nlohmann::json::array();
          for (auto const& v : cone.apex) {
            members.push_back(v.encode());
          }
          records.push_back({{"grade", m.grading.name(g)},
                             {"set", x.name()},
                             {"carrier_size", cone.leg.cod().size()},
                             {"centre_size", cone.apex.size()},
                             {"members", members}});
          if (!_o.json) {
            _out << "Z^" << m.grading.name(g) << "(" << x.name()
                 << "): " << cone.apex.size() << " of "
                 << cone.leg.cod().size() << " " << cone.apex.describe()
                 << "\n";
          }
        }
      }
      reports.push_back(cones);
      reports.push_back(check_graded_monad_morphism(
          res.inclusion, std::min<std::size_t>(_o.max_set_size, 2)));
      if (!_o.json) {
        std::string zs = "{";
        for (Grade g = 0; g < zc.centre.size(); ++g) {
          zs += (g ? "," : "") + zc.centre.name(g);
        }
        _out << "centre grading: " << zs << "}\n";
      }
      return emit(reports, {{"centre", records}});
    }

    int monad_morphism() {
      if (_o.from.empty() || _o.to.empty()) {
        throw error(errc::unknown_name, "--from and --to are required");
      }
      auto mm = lookup_morphism(_o.from, _o.to, pomonoid_opt());
      return emit({check_graded_monad_morphism(mm, _o.max_set_size)});
    }

    int duoidal_check() {
      DuoidalOptions opt;
      opt.max_set_size = _o.max_set_size_given ? _o.max_set_size : 2;
      std::string name = _o.monad.empty() ? "language_writer" : _o.monad;
      if (name == "language_writer") {
        LanguageDuoid ld = [&] {
          if (_o.generators.empty()) {
            return letter_duoid(_o.alphabet, _o.cap);
          }
          std::vector<CappedLanguage> gens;
          // Generators are brace literals separated by ';'.
          std::stringstream ss(_o.generators);
          for (std::string lit; std::getline(ss, lit, ';');) {
            gens.push_back(CappedLanguage::parse(lit, _o.alphabet, _o.cap));
          }
          return language_duoid(_o.alphabet, _o.cap, gens);
        }();
        if (!_o.json) {
          _out << "language duoid: " << ld.languages.size()
               << " languages over '" << ld.alphabet << "', cap " << ld.cap
               << "\n";
        }
        auto dm = build_language_writer(ld);
        return emit({check_duoid(ld.duoid), check_duoidal_gradation(dm, opt)});
      }
      auto m = monad();
      auto d = derive_monoidal_m(m, opt.max_set_size, opt);
      return emit({d.report});
    }

    int analyze() {
      if (_o.pomonoid.empty()) {
        throw error(errc::unknown_name, "--pomonoid is required");
      }
      Pomonoid      p    = parse_pomonoid(read_input(_o.pomonoid));
      EffectProgram prog = parse_program(read_input(_o.file), p);
      std::optional<GradedStrongMonad> m;
      if (!_o.monad.empty()) {
        // Built-ins with a fixed grading read the pomonoid as a label
        // monoid, so only hand it over when the grading must come from it.
        m = lookup_monad(_o.monad);
        if (!(m->grading == p)) {
          m = lookup_monad(_o.monad, p);
        }
      }
      auto rows = reorder_report(prog, p, m ? &*m : nullptr,
                                 std::min<std::size_t>(_o.max_set_size, 2));
      if (_o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (auto const& r : rows) {
          j.push_back({{"position", r.pos.str()},
                       {"op", r.op},
                       {"a", r.a},
                       {"b", r.b},
                       {"verdict", verdict_name(r.verdict)}});
        }
        _out << nlohmann::json{{"verdicts", j}}.dump(2) << "\n";
      } else {
        for (auto const& r : rows) {
          _out << r.pos.str() << "  " << r.op << "  (" << r.a << ", " << r.b
               << ")  " << verdict_name(r.verdict) << "\n";
        }
      }
      return 0;
    }

    int examples_list() {
      if (_o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (auto const& e : registry()) {
          j.push_back({{"name", e.name}, {"description", e.description}});
        }
        _out << j.dump(2) << "\n";
      } else {
        for (auto const& e : registry()) {
          _out << e.name << "  " << e.description << "\n";
        }
      }
      return 0;
    }

   private:
    Options       _o;
    std::ostream& _out;
  };

  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    static std::set<std::string> const top{
        "pomonoid", "duoid", "bimonoid", "monad", "duoidal", "analyze",
        "examples"};
    if (!args.empty() && args[0].rfind("-", 0) != 0 && !top.count(args[0])) {
      err << error(errc::unknown_subcommand, "'" + args[0] + "'").what()
          << "\n";
      return 2;
    }

    Options  o;
    CLI::App app{"Graded monads on finite sets: law checks and centres",
                 "gcentre"};
    app.require_subcommand(1);
    app.add_option("--bound", o.bound,
                   "fixed test-set size for centrality (default: degree)");
    auto* mss = app.add_option("--max-set-size", o.max_set_size,
                               "largest canonical test set (default 3)");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--monad", o.monad, "built-in monad name");
    app.add_option("--pomonoid", o.pomonoid, "pomonoid file");
    for (auto* opt : app.get_options()) {
      opt->configurable(false);
    }

    std::string action;
    auto        leaf = [&](CLI::App* parent, std::string const& name,
                    std::string const& desc, bool with_file) {
      auto* s = parent->add_subcommand(name, desc);
      if (with_file) {
        s->add_option("file", o.file, "input file")->required();
      }
      s->callback([&action, parent, name] {
        action = parent->get_name() + " " + name;
      });
      s->fallthrough();
      return s;
    };

    auto* pom = app.add_subcommand("pomonoid", "pomonoid files");
    pom->require_subcommand(1)->fallthrough();
    leaf(pom, "check", "validate a pomonoid file", true);
    leaf(pom, "centre", "centre of a pomonoid", true);
    auto* duo = app.add_subcommand("duoid", "duoid files");
    duo->require_subcommand(1)->fallthrough();
    leaf(duo, "check", "check duoid laws", true);
    auto* bim = app.add_subcommand("bimonoid", "bimonoid files");
    bim->require_subcommand(1)->fallthrough();
    leaf(bim, "check", "check bimonoid laws", true);

    auto* mon = app.add_subcommand("monad", "built-in graded monads");
    mon->require_subcommand(1)->fallthrough();
    leaf(mon, "laws", "all law suites", false);
    leaf(mon, "commutative", "commutativity per grade pair", false);
    auto* cen = leaf(mon, "centre", "centre of a graded monad", false);
    cen->add_option("--grade", o.grade, "only this central grade");
    cen->add_option("--set-size", o.set_size, "only this set size");
    auto* mor = leaf(mon, "morphism", "check a graded monad morphism", false);
    mor->add_option("--from", o.from, "source monad")->required();
    mor->add_option("--to", o.to, "target monad")->required();

    auto* dl = app.add_subcommand("duoidal", "duoidal gradations");
    dl->require_subcommand(1)->fallthrough();
    auto* dlc = leaf(dl, "check", "check a duoidal gradation", false);
    dlc->add_option("--alphabet", o.alphabet, "alphabet (default ab)");
    dlc->add_option("--cap", o.cap, "word length cap (default 2)");
    dlc->add_option("--generators", o.generators,
                    "generator literals separated by ';' (default: letters)");

    auto* an = app.add_subcommand("analyze", "reordering analysis");
    an->add_option("file", o.file, "program file")->required();
    an->callback([&action] { action = "analyze"; });
    an->fallthrough();

    auto* ex = app.add_subcommand("examples", "built-ins");
    ex->require_subcommand(1)->fallthrough();
    leaf(ex, "list", "list built-in monads", false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "ParseError: " << e.what() << "\n";
      return 2;
    }
    o.max_set_size_given = mss->count() > 0;

    try {
      Runner r(o, out);
      if (action == "pomonoid check") return r.pomonoid_check();
      if (action == "pomonoid centre") return r.pomonoid_centre();
      if (action == "duoid check") return r.two_product_check(true);
      if (action == "bimonoid check") return r.two_product_check(false);
      if (action == "monad laws") return r.monad_laws();
      if (action == "monad commutative") return r.monad_commutative();
      if (action == "monad centre") return r.monad_centre();
      if (action == "monad morphism") return r.monad_morphism();
      if (action == "duoidal check") return r.duoidal_check();
      if (action == "analyze") return r.analyze();
      if (action == "examples list") return r.examples_list();
      err << error(errc::unknown_subcommand, action).what() << "\n";
      return 2;
    } catch (error const& e) {
      err << e.what() << "\n";
      return is_check_failure(e.code()) ? 1 : 2;
    }
  }

  inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
  }

}  // namespace gcentre::cli
