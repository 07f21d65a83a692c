#include <catch2/catch_amalgamated.hpp>

#include <gcentre/effectlang.hpp>
#include <gcentre/registry.hpp>

#include <fstream>
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

  std::pair<errc, std::string> failure(std::string const& text) {
    try {
      parse_program(text);
    } catch (error const& e) {
      return {e.code(), e.what()};
    }
    return {errc::parse_error, "no error"};
  }

  bool mentions(std::string const& what, std::string const& part) {
    return what.find(part) != std::string::npos;
  }

}  // namespace

TEST_CASE("a minimal program parses", "[effectlang]") {
  auto p = parse_program(
      "prim f ! wa  prim g ! e\nmain = op+(f(1), g(2))\n");
  REQUIRE(p.prims.size() == 2);
  CHECK(p.prims[0].grade == "wa");
  auto const& root = p.nodes[p.root];
  CHECK(root.kind == ExprNode::Kind::op);
  CHECK(root.name == "op+");
  CHECK(root.pos.str() == "2:8");
}

TEST_CASE("syntax errors carry positions", "[effectlang]") {
  auto [c1, w1] = failure("prim f ! wa\n");
  CHECK(c1 == errc::syntax_error);
  CHECK(mentions(w1, "main"));

  auto [c2, w2] = failure("main = op+(1 2)");
  CHECK(c2 == errc::syntax_error);
  CHECK(mentions(w2, "1:14"));

  auto [c3, w3] = failure("main =\n  let x = 1 x");
  CHECK(c3 == errc::syntax_error);
  CHECK(mentions(w3, "2:13"));

  auto [c4, w4] = failure("prim f ! \nmain = 1");
  CHECK(c4 == errc::syntax_error);

  auto [c5, w5] = failure("prim f ! a prim f ! b main = 1");
  CHECK(c5 == errc::syntax_error);
  CHECK(mentions(w5, "twice"));

  auto [c6, w6] = failure("main = 1 2");
  CHECK(c6 == errc::syntax_error);
}

TEST_CASE("scope errors", "[effectlang]") {
  auto [c1, w1] = failure("main = let x = 1 in op+(x, y)");
  CHECK(c1 == errc::unbound_variable);
  CHECK(mentions(w1, "1:28"));
  auto [c2, w2] = failure("main = h(1)");
  CHECK(c2 == errc::unknown_primitive);
  CHECK(mentions(w2, "1:8"));
  // The bound name is not visible in its own definition.
  auto [c3, w3] = failure("main = let x = x in x");
  CHECK(c3 == errc::unbound_variable);
}

TEST_CASE("undeclared grades are rejected", "[effectlang]") {
  auto p = multi_error_pomonoid();
  try {
    parse_program("prim f ! zz\nmain = f(1)", p);
    FAIL("expected UnknownGrade");
  } catch (error const& e) {
    CHECK(e.code() == errc::unknown_grade);
    CHECK(mentions(e.what(), "1:10"));
  }
}

TEST_CASE("grades compose left to right", "[effectlang]") {
  auto g   = multi_error_pomonoid();
  auto p   = parse_program("prim f ! wa prim g ! e prim h ! wb\n"
                           "main = let u = g(f(1)) in op+(f(2), h(3))",
                           g);
  auto gs  = infer_grades(p, g);
  auto const& let = p.nodes[p.root];
  auto const& bound = p.nodes[let.kids[0]];
  auto const& body  = p.nodes[let.kids[1]];
  CHECK(g.name(gs[let.kids[0]]) == "e");
  CHECK(bound.kind == ExprNode::Kind::call);
  CHECK(g.name(gs[let.kids[1]]) == "wb");
  CHECK(body.kind == ExprNode::Kind::op);
  CHECK(g.name(gs[p.root]) == "e");

  auto pure = parse_program("main = let x = 1 in op*(x, 2)", g);
  for (auto gr : infer_grades(pure, g)) {
    CHECK(gr == g.unit());
  }
}

TEST_CASE("grade-level verdicts", "[effectlang]") {
  auto  g  = multi_error_pomonoid();
  Grade t = g.index("t"), wa = g.index("wa"), wb = g.index("wb"),
        e = g.index("e");
  CHECK(reorder_verdict(g, wa, wb, nullptr, 2) == Verdict::forced);
  CHECK(reorder_verdict(g, wa, wa, nullptr, 2)
        == Verdict::grade_commutes_only);
  CHECK(reorder_verdict(g, t, wb, nullptr, 2) == Verdict::free);
  CHECK(reorder_verdict(g, wa, e, nullptr, 2) == Verdict::free);

  auto  b  = bool_pomonoid();
  Grade tt = b.index("tt"), ff = b.index("ff");
  CHECK(reorder_verdict(b, tt, ff, nullptr, 2) == Verdict::free);
}

TEST_CASE("verdicts are symmetric and FREE implies commuting",
          "[effectlang]") {
  auto g = multi_error_pomonoid();
  auto m = multi_error_writer();
  for (Grade a = 0; a < g.size(); ++a) {
    for (Grade b = 0; b < g.size(); ++b) {
      for (GradedStrongMonad const* mp :
           std::vector<GradedStrongMonad const*>{nullptr, &m}) {
        Verdict v = reorder_verdict(g, a, b, mp, 2);
        CHECK(v == reorder_verdict(g, b, a, mp, 2));
        if (v == Verdict::free) {
          CHECK(g.commute(a, b));
          if (mp) {
            CHECK(check_commutative_pair(m, a, b, 2).passed());
          }
        }
      }
    }
  }
}

TEST_CASE("the Bool fixture program", "[effectlang]") {
  auto b    = parse_pomonoid(slurp("bool.pom"));
  auto prog = parse_program(slurp("bool_reorder.eff"), b);
  auto m    = lookup_monad("bool_writer_pair");
  auto rows = reorder_report(prog, b, &m, 2);
  std::map<std::pair<std::string, std::string>, Verdict> seen;
  for (auto const& r : rows) {
    seen[{r.a, r.b}] = r.verdict;
  }
  CHECK(seen.at({"tt", "ff"}) == Verdict::free);
  CHECK(seen.at({"ff", "tt"}) == Verdict::free);
  CHECK(seen.at({"tt", "tt"}) == Verdict::free);
  CHECK(seen.at({"ff", "ff"}) == Verdict::forced);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto const& p = rows[i - 1].pos;
    auto const& q = rows[i].pos;
    CHECK((p.line < q.line || (p.line == q.line && p.col < q.col)));
  }

  auto other = multi_error_writer();
  try {
    reorder_report(prog, b, &other, 2);
    FAIL("expected GradingMismatch");
  } catch (error const& e) {
    CHECK(e.code() == errc::grading_mismatch);
  }
}

TEST_CASE("random programs parse and analyse", "[effectlang]") {
  std::mt19937                       rng(3);
  std::vector<std::string> const     prims{"f", "g", "h"};
  std::function<std::string(int, std::vector<std::string>&)> gen =
      [&](int depth, std::vector<std::string>& scope) -> std::string {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
    switch (pick(rng)) {
      case 0: return std::to_string(rng() % 100);
      case 1:
        return scope.empty() ? std::string("7")
                             : scope[rng() % scope.size()];
      case 2: return prims[rng() % 3] + "(" + gen(depth - 1, scope) + ")";
      case 3:
        return "op+(" + gen(depth - 1, scope) + ", " + gen(depth - 1, scope)
               + ")";
      default: {
        std::string v     = "v" + std::to_string(scope.size());
        std::string bound = gen(depth - 1, scope);
        scope.push_back(v);
        std::string body = gen(depth - 1, scope);
        scope.pop_back();
        return "let " + v + " = " + bound + " in " + body;
      }
    }
  };
  auto g = multi_error_pomonoid();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> scope;
    std::string text = "prim f ! wa\nprim g ! wb\nprim h ! e\nmain = "
                       + gen(4, scope) + "\n";
    INFO(text);
    auto p    = parse_program(text, g);
    auto rows = reorder_report(p, g);
    std::size_t ops = 0;
    for (auto const& n : p.nodes) {
      ops += n.kind == ExprNode::Kind::op;
    }
    CHECK(rows.size() == ops);
  }
}
