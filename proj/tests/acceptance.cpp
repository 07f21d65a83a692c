// One line per acceptance criterion; exit status 0 only when all pass.

#include <gcentre/gcentre.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace gcentre;

namespace {

  std::string slurp(std::string const& name) {
    std::ifstream in(std::string(GCENTRE_FIXTURE_DIR) + "/" + name);
    if (!in) {
      throw error(errc::file_not_found, name);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  struct Outcome {
    bool        ok;
    std::string detail;
  };

  std::set<std::string> interleavings(std::string const& u,
                                      std::string const& v) {
    std::set<std::string> out;
    std::size_t           n = u.size() + v.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) {
        continue;
      }
      std::string w;
      std::size_t i = 0, j = 0;
      for (std::size_t k = 0; k < n; ++k) {
        w += (mask >> k & 1) ? u[i++] : v[j++];
      }
      out.insert(w);
    }
    return out;
  }

  std::string summary(Report const& r) {
    return std::to_string(r.instance_count()) + " instances, "
           + std::to_string(r.failure_count()) + " failing";
  }

  std::string first_witness(Report const& r) {
    if (r.records().empty()) {
      return "";
    }
    auto const& rec = r.records().front();
    return "; first witness " + rec.law + " " + rec.witness + " lhs=" + rec.lhs
           + " rhs=" + rec.rhs;
  }

  Outcome pomonoid_centre() {
    auto t0 = std::chrono::steady_clock::now();
    auto zc = centre_of_pomonoid(parse_pomonoid(slurp("multi_error.pom")));
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    auto const& n = zc.centre.names();
    std::set<std::string> got(n.begin(), n.end());
    std::string s = "{";
    for (auto const& x : n) {
      s += (s.size() > 1 ? "," : "") + x;
    }
    s += "}";
    return {got == std::set<std::string>{"t", "e"} && n.size() == 2
                && secs < 1.0,
            "centre " + s};
  }

  Outcome writer_laws() {
    auto   m = multi_error_writer();
    Report all("laws");
    all.merge(check_monad_laws(m, 3));
    all.merge(check_order_laws(m, 3));
    all.merge(check_strength_laws(m, 3));
    all.merge(check_costrength_coherence(m, 3));
    return {all.passed() && all.instance_count() > 0, summary(all)};
  }

  Outcome writer_noncommutative() {
    auto        m   = multi_error_writer();
    auto const& g   = m.grading;
    auto        res = check_commutative_detailed(m, 3);
    Grade       t = g.index("t"), e = g.index("e");
    auto        in_te = [&](Grade x) { return x == t || x == e; };
    bool        ok    = !res.report.passed();
    std::string failing;
    for (auto const& pv : res.failing()) {
      failing += " (" + g.name(pv.a) + "," + g.name(pv.b) + ")";
      ok = ok && !(in_te(pv.a) && in_te(pv.b));
    }
    for (auto const& pv : res.pairs) {
      bool from_te = in_te(pv.a) || in_te(pv.b);
      if (from_te && g.commute(pv.a, pv.b)) {
        ok = ok && pv.passed();
      }
    }
    return {ok, "failing pairs:" + failing};
  }

  Outcome centre_reproduction() {
    auto        m   = multi_error_writer();
    auto        res = build_centre_monad(m);
    bool        ok  = true;
    std::string sizes;
    for (std::size_t n = 0; n <= 3; ++n) {
      auto zt = res.cone(0, n).apex.size();
      auto ze = res.cone(1, n).apex.size();
      ok      = ok && zt == n && ze == 1;
      sizes += " |X|=" + std::to_string(n) + ":" + std::to_string(zt) + "/"
               + std::to_string(ze);
    }
    Report laws = check_all_laws(res.monad, 3);
    Report comm = check_commutative(res.monad, 3);
    ok          = ok && laws.passed() && comm.passed()
         && res.grading.centre.names() == std::vector<std::string>{"t", "e"};
    return {ok, "|Z^t X|/|Z^e X|" + sizes + "; laws " + summary(laws)
                    + "; commutative " + summary(comm)};
  }

  Outcome identity_commutative() {
    Report r = check_commutative(identity_monad(multi_error_pomonoid()), 3);
    return {r.passed(), summary(r)};
  }

  Outcome inclusion_morphism() {
    auto   res = build_centre_monad(multi_error_writer());
    auto&  mm  = res.inclusion;
    Report r   = check_graded_monad_morphism(mm, 3);
    bool   inj = true;
    for (Grade z = 0; z < mm.source.grading.size(); ++z) {
      for (std::size_t n = 0; n <= 3; ++n) {
        FinSet x   = canonical_set(n);
        FinFn  leg = FinFn::from(
            mm.source.obj(z, x), mm.target.obj(mm.phi(z), x),
            [&](Value const& v) { return mm.iota(z, v); });
        inj = inj && leg.injective();
      }
    }
    return {r.passed() && inj,
            summary(r) + (inj ? "; legs injective" : "; a leg is not injective")};
  }

  Outcome centrality_theorem() {
    auto verdicts = [](CentralityConditions const& c) {
      return std::string("(") + (c.cond1 ? "true" : "false") + ","
             + (c.cond2 ? "true" : "false") + ")";
    };
    auto centre = build_centre_monad(multi_error_writer());
    auto c1     = check_centrality_conditions(centre.inclusion);

    // The Bool-graded writer pair, regraded over its own centre with full
    // carriers: T^ff X = X x M holds non-central labels.
    auto b   = bool_writer_pair(multi_error_pomonoid());
    auto zb  = centre_of_pomonoid(b.grading);
    auto sub = restrict_to_grades(b, zb.inclusion, "bool_writer_pair|Z");
    GradedMonadMorphism full{zb.inclusion, sub, b,
                             [](Grade, Value const& v) { return v; }};
    auto c2 = check_centrality_conditions(full, {}, 3);

    // The same regrading of the multi-error writer itself.
    auto m   = multi_error_writer();
    auto zm  = centre_of_pomonoid(m.grading);
    auto msb = restrict_to_grades(m, zm.inclusion, "multi_error_writer|Z");
    GradedMonadMorphism mfull{zm.inclusion, msb, m,
                              [](Grade, Value const& v) { return v; }};
    auto c3 = check_centrality_conditions(mfull, {}, 3);

    bool ok = c1.agree() && c2.agree() && c3.agree() && c1.cond1
              && !c2.cond1;
    return {ok, "centre " + verdicts(c1) + ", full bool_writer_pair "
                    + verdicts(c2) + ", full multi_error_writer over Z(G) "
                    + verdicts(c3)};
  }

  Outcome bound_robustness() {
    std::vector<std::string> names;
    for (auto const& e : registry()) {
      if (e.name.find('<') == std::string::npos) {
        names.push_back(e.name);
      }
    }
    names.push_back("centre:multi_error_writer");
    bool        ok = true;
    std::size_t compared = 0;
    std::string diff;
    for (auto const& name : names) {
      auto m  = lookup_monad(name);
      auto zc = centre_of_pomonoid(m.grading);
      for (auto z : zc.inclusion.map) {
        for (std::size_t n = 0; n <= 2; ++n) {
          FinSet x = canonical_set(n);
          auto   a = graded_centre_at(m, z, x, Bound{0, {}});
          auto   b = graded_centre_at(m, z, x, Bound{2, {}});
          ++compared;
          if (a.apex.elements() != b.apex.elements()) {
            ok = false;
            diff += " " + name + "@" + m.grading.name(z);
          }
        }
      }
    }
    return {ok, std::to_string(names.size()) + " monads, "
                    + std::to_string(compared) + " centres compared"
                    + (diff.empty() ? "" : "; differ:" + diff)};
  }

  Outcome duoid_example() {
    auto   ld = letter_duoid("ab", 3);
    Report r  = check_duoid(ld.duoid);

    // Shuffle against brute-force interleaving on sampled pairs, starting
    // with ({ab}, {b}).
    std::mt19937                       rng(9);
    std::vector<CappedLanguage> const& ls = ld.languages;
    std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
    std::vector<std::pair<CappedLanguage, CappedLanguage>> pairs{
        {CappedLanguage::parse("{ab}", "ab", 3),
         CappedLanguage::parse("{b}", "ab", 3)}};
    while (pairs.size() < 20) {
      pairs.emplace_back(ls[pick(rng)], ls[pick(rng)]);
    }
    std::size_t agree = 0;
    for (auto const& [a, b] : pairs) {
      std::set<std::string> expect;
      for (auto const& u : a.words()) {
        for (auto const& v : b.words()) {
          if (u.size() + v.size() <= 3) {
            auto s = interleavings(u, v);
            expect.insert(s.begin(), s.end());
          }
        }
      }
      auto got = language_shuffle(a, b);
      agree += std::set<std::string>(got.words().begin(), got.words().end())
               == expect;
    }
    return {r.passed() && agree == pairs.size(),
            std::to_string(ld.languages.size()) + " languages, "
                + summary(r) + "; shuffle agrees on "
                + std::to_string(agree) + "/" + std::to_string(pairs.size())
                + " pairs"};
  }

  Outcome duoidal_writer() {
    auto           ld = letter_duoid("ab", 2);
    DuoidalOptions opt;
    opt.max_set_size = 2;
    Report r         = check_duoidal_gradation(build_language_writer(ld), opt);
    Report unary =
        check_duoidal_gradation(build_language_writer(letter_duoid("a", 3)),
                                opt);
    return {r.passed() && ld.languages.size() <= 12,
            "alphabet ab cap 2 (" + std::to_string(ld.languages.size())
                + " languages): " + summary(r) + first_witness(r)
                + "; alphabet a cap 3: "
                + (unary.passed() ? "passes" : "fails")};
  }

  Outcome monoidality() {
    auto   centre = build_centre_monad(multi_error_writer()).monad;
    auto   d      = derive_monoidal_m(centre, 3);
    return {d.report.passed(), summary(d.report)};
  }

  Outcome analyzer() {
    auto b    = parse_pomonoid(slurp("bool.pom"));
    auto prog = parse_program(slurp("bool_reorder.eff"), b);
    auto m    = lookup_monad("bool_writer_pair");
    auto rows = reorder_report(prog, b, &m, 2);
    std::map<std::pair<std::string, std::string>, std::set<Verdict>> seen;
    std::string detail;
    for (auto const& r : rows) {
      seen[{r.a, r.b}].insert(r.verdict);
      detail += " (" + r.a + "," + r.b + ")=" + verdict_name(r.verdict);
    }
    auto only = [&](char const* a, char const* c, Verdict v) {
      auto it = seen.find({a, c});
      return it != seen.end() && it->second == std::set<Verdict>{v};
    };
    bool ok = only("tt", "ff", Verdict::free) && only("ff", "tt", Verdict::free)
              && only("tt", "tt", Verdict::free)
              && only("ff", "ff", Verdict::forced);
    return {ok, detail.substr(1)};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const
      criteria{
          {"pomonoid centre of the multi-error table", pomonoid_centre},
          {"multi-error writer law suites at K=3", writer_laws},
          {"multi-error writer is not commutative", writer_noncommutative},
          {"centre of the multi-error writer", centre_reproduction},
          {"identity monad is commutative", identity_commutative},
          {"centre inclusion is a monic morphism", inclusion_morphism},
          {"centrality conditions agree", centrality_theorem},
          {"centres are stable under bound+2", bound_robustness},
          {"closed language duoid and shuffle", duoid_example},
          {"language writer is a duoidal gradation", duoidal_writer},
          {"derived monoidal structure of the centre", monoidality},
          {"reordering verdicts on the Bool program", analyzer},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& [name, fn] = criteria[i];
    auto        t0         = std::chrono::steady_clock::now();
    Outcome     o;
    try {
      o = fn();
    } catch (std::exception const& e) {
      o = {false, std::string("raised ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    failed += !o.ok;
    std::printf("criterion %2zu %s: %s [%s] (%.2fs)\n", i + 1,
                o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
