#include <catch2/catch_amalgamated.hpp>

#include <gcentre/pomonoid.hpp>
#include <gcentre/registry.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

using namespace gcentre;

namespace {

  std::string slurp(std::string const& name) {
    std::ifstream      in(std::string(GCENTRE_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  struct RawTable {
    std::size_t                           n = 0;
    std::size_t                           unit = 0;
    std::vector<std::vector<std::size_t>> mul;
    std::vector<std::pair<std::size_t, std::size_t>> le;
  };

  std::string nm(std::size_t i) {
    return "g" + std::to_string(i);
  }

  PomonoidSpec to_spec(RawTable const& t) {
    PomonoidSpec s;
    for (std::size_t i = 0; i < t.n; ++i) {
      s.elements.push_back(nm(i));
    }
    s.unit = nm(t.unit);
    for (std::size_t a = 0; a < t.n; ++a) {
      for (std::size_t b = 0; b < t.n; ++b) {
        s.mul.emplace_back(nm(a), nm(b), nm(t.mul[a][b]));
      }
    }
    for (auto [a, b] : t.le) {
      s.le.emplace_back(nm(a), nm(b));
    }
    return s;
  }

  // Fixpoint closure, independent of the library's Warshall pass.
  std::vector<std::vector<bool>> closure(RawTable const& t) {
    std::vector<std::vector<bool>> r(t.n, std::vector<bool>(t.n, false));
    for (std::size_t i = 0; i < t.n; ++i) {
      r[i][i] = true;
    }
    for (auto [a, b] : t.le) {
      r[a][b] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < t.n; ++a) {
        for (std::size_t b = 0; b < t.n; ++b) {
          for (std::size_t c = 0; c < t.n; ++c) {
            if (r[a][b] && r[b][c] && !r[a][c]) {
              r[a][c] = changed = true;
            }
          }
        }
      }
    }
    return r;
  }

  // First violated family, checked in the documented order.
  std::optional<errc> oracle(RawTable const& t) {
    auto const& m = t.mul;
    for (std::size_t a = 0; a < t.n; ++a) {
      for (std::size_t b = 0; b < t.n; ++b) {
        for (std::size_t c = 0; c < t.n; ++c) {
          if (m[m[a][b]][c] != m[a][m[b][c]]) {
            return errc::associativity_violation;
          }
        }
      }
    }
    for (std::size_t a = 0; a < t.n; ++a) {
      if (m[t.unit][a] != a || m[a][t.unit] != a) {
        return errc::unit_violation;
      }
    }
    auto le = closure(t);
    for (std::size_t a = 0; a < t.n; ++a) {
      for (std::size_t b = 0; b < t.n; ++b) {
        if (a != b && le[a][b] && le[b][a]) {
          return errc::antisymmetry_violation;
        }
      }
    }
    for (std::size_t w = 0; w < t.n; ++w) {
      for (std::size_t x = 0; x < t.n; ++x) {
        for (std::size_t y = 0; y < t.n; ++y) {
          for (std::size_t z = 0; z < t.n; ++z) {
            if (le[w][x] && le[y][z] && !le[m[w][y]][m[x][z]]) {
              return errc::monotonicity_violation;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  RawTable random_table(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> size(1, 4);
    RawTable                                   t;
    t.n = size(rng);
    std::uniform_int_distribution<std::size_t> el(0, t.n - 1);
    std::bernoulli_distribution                coin(0.5);
    t.unit = el(rng);
    t.mul.assign(t.n, std::vector<std::size_t>(t.n));
    for (std::size_t a = 0; a < t.n; ++a) {
      for (std::size_t b = 0; b < t.n; ++b) {
        // Mostly unital tables, so later families get exercised too.
        t.mul[a][b] = (a == t.unit && coin(rng)) ? b
                      : (b == t.unit && coin(rng)) ? a
                                                   : el(rng);
      }
    }
    std::uniform_int_distribution<std::size_t> nle(0, 2);
    for (std::size_t k = nle(rng); k > 0; --k) {
      t.le.emplace_back(el(rng), el(rng));
    }
    return t;
  }

  std::set<std::string> centre_names(Pomonoid const& p) {
    auto zc = centre_of_pomonoid(p);
    return {zc.centre.names().begin(), zc.centre.names().end()};
  }

}  // namespace

TEST_CASE("validation agrees with a brute-force reference", "[pomonoid]") {
  std::mt19937 rng(20240611);
  std::map<std::string, int> seen;
  for (int trial = 0; trial < 3000; ++trial) {
    RawTable t      = random_table(rng);
    auto     expect = oracle(t);
    seen[expect ? std::string(errc_name(*expect)) : "ok"]++;
    try {
      Pomonoid p = validate_pomonoid(to_spec(t));
      REQUIRE_FALSE(expect.has_value());
      auto le = closure(t);
      for (std::size_t a = 0; a < t.n; ++a) {
        for (std::size_t b = 0; b < t.n; ++b) {
          CHECK(p.leq(a, b) == le[a][b]);
          CHECK(p.mul(a, b) == t.mul[a][b]);
        }
      }
    } catch (error const& e) {
      REQUIRE(expect.has_value());
      CHECK(e.code() == *expect);
    }
  }
  // Every outcome is represented in the sample.
  CHECK(seen.size() == 5);
}

TEST_CASE("centre agrees with a brute-force reference", "[pomonoid]") {
  std::mt19937 rng(99);
  int          checked = 0;
  for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
    RawTable t = random_table(rng);
    if (oracle(t)) {
      continue;
    }
    ++checked;
    Pomonoid              p = validate_pomonoid(to_spec(t));
    std::set<std::string> expect;
    for (std::size_t z = 0; z < t.n; ++z) {
      bool central = true;
      for (std::size_t b = 0; b < t.n; ++b) {
        central = central && t.mul[z][b] == t.mul[b][z];
      }
      if (central) {
        expect.insert(nm(z));
      }
    }
    CHECK(centre_names(p) == expect);
    auto zc = centre_of_pomonoid(p);
    CHECK(check_pomonoid_morphism(zc.inclusion).passed());
    CHECK(zc.centre.commutative());
  }
  CHECK(checked >= 100);
}

TEST_CASE("worked centres", "[pomonoid]") {
  CHECK(centre_names(parse_pomonoid(slurp("multi_error.pom")))
        == std::set<std::string>{"t", "e"});
  CHECK(centre_names(parse_pomonoid(slurp("left_zero.pom")))
        == std::set<std::string>{"1"});
  CHECK(centre_names(parse_pomonoid(slurp("bool.pom")))
        == std::set<std::string>{"tt", "ff"});
  CHECK(centre_names(parse_pomonoid(slurp("trivial.pom")))
        == std::set<std::string>{"i"});
}

TEST_CASE("pomonoid file errors", "[pomonoid]") {
  auto code = [](std::string const& text) {
    try {
      parse_pomonoid(text);
    } catch (error const& e) {
      return std::optional<errc>(e.code());
    }
    return std::optional<errc>();
  };
  CHECK(code("elements a a\nunit a\nmul a a a\n")
        == errc::duplicate_element);
  CHECK(code("elements a b\nunit a\nmul a a a\nmul a b b\nmul b a b\n")
        == errc::missing_table_entry);
  CHECK(code("elements a\nunit z\nmul a a a\n") == errc::unknown_element);
  CHECK(code("elements a\nmul a a a\n") == errc::parse_error);
  CHECK(code("elements a\nunit a\nfrob a a a\n") == errc::parse_error);
  CHECK(code(slurp("multi_error_bad_assoc.pom"))
        == errc::associativity_violation);
  try {
    parse_pomonoid("elements a\n\nunit a\nmul a a\n");
    FAIL("expected a parse error");
  } catch (error const& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("text form round-trips", "[pomonoid]") {
  for (auto const& p : {multi_error_pomonoid(), multi_error_pomonoid(false),
                        bool_pomonoid(), trivial_pomonoid()}) {
    CHECK(parse_pomonoid(p.to_text()) == p);
  }
}

TEST_CASE("collapse to e is lax only with the absorbing order",
          "[pomonoid]") {
  for (bool absorbing : {true, false}) {
    auto p   = multi_error_pomonoid(absorbing);
    auto phi = make_morphism(
        p, p, {{"t", "e"}, {"e", "e"}, {"wa", "e"}, {"wb", "e"}});
    Report r = check_pomonoid_morphism(phi);
    CHECK(r.passed() == absorbing);
    if (!absorbing) {
      CHECK_FALSE(r.law_passed("unit"));
      REQUIRE_FALSE(r.records().empty());
      CHECK(r.records().front().witness == "(i)");
    }
  }
  auto p = multi_error_pomonoid();
  CHECK_THROWS_AS(make_morphism(p, p, {{"t", "t"}}), error);
  CHECK(check_pomonoid_morphism(identity_morphism(p)).passed());
}

TEST_CASE("absorbing-top bimonoid", "[pomonoid]") {
  auto p  = multi_error_pomonoid();
  auto bm = bimonoid_from_absorbing_top(p, p.index("e"));
  CHECK(check_bimonoid(bm).passed());
  Grade wa = p.index("wa"), wb = p.index("wb"), e = p.index("e"),
        t  = p.index("t");
  CHECK(bm.op2(wa, wb) == e);
  CHECK(bm.op2(wb, wa) == e);
  CHECK(bm.op2(t, wa) == wa);
  CHECK(bm.op2(e, t) == e);

  auto file = bimonoid_from_spec(
      parse_pomonoid_text(slurp("multi_error_absorbing.bim")));
  CHECK(file.table2 == bm.table2);

  auto disc = multi_error_pomonoid(false);
  try {
    bimonoid_from_absorbing_top(disc, disc.index("e"));
    FAIL("expected NotTop");
  } catch (error const& err) {
    CHECK(err.code() == errc::not_top);
  }
  // Bool ordered with tt on top: tt is top but not absorbing.
  auto flipped =
      make_pomonoid({"tt", "ff"}, "tt", {{"tt", "ff"}, {"ff", "ff"}},
                    {{"ff", "tt"}});
  try {
    bimonoid_from_absorbing_top(flipped, flipped.index("tt"));
    FAIL("expected NotAbsorbing");
  } catch (error const& err) {
    CHECK(err.code() == errc::not_absorbing);
  }
}

TEST_CASE("duoid files", "[pomonoid]") {
  auto good = duoid_from_spec(parse_pomonoid_text(slurp("bool.duo")));
  CHECK(check_duoid(good).passed());
  auto bad =
      duoid_from_spec(parse_pomonoid_text(slurp("multi_error_noncomm.duo")));
  Report r = check_duoid(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.law_passed("par.commutative"));
  CHECK_THROWS_AS(
      duoid_from_spec(parse_pomonoid_text(slurp("multi_error.pom"))), error);
}
