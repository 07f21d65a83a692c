// Walks through the multi-error writer: which grades commute, what its
// centre keeps, and how the reordering analysis uses it.

#include <gcentre/gcentre.hpp>

#include <iostream>

using namespace gcentre;

int main() {
  auto        m = multi_error_writer();
  auto const& g = m.grading;

  std::cout << "grades:";
  for (auto const& n : g.names()) {
    std::cout << ' ' << n << (g.is_central(g.index(n)) ? "*" : "");
  }
  std::cout << "   (* = central)\n";

  auto res = check_commutative_detailed(m, 2);
  for (auto const& pv : res.failing()) {
    std::cout << "evaluation order matters for (" << g.name(pv.a) << ","
              << g.name(pv.b) << ")\n";
  }

  auto centre = build_centre_monad(m);
  for (auto const& cone : centre.cones) {
    if (cone.x.size() != 2) {
      continue;
    }
    std::cout << "Z^" << g.name(cone.z) << "(Y2) = " << cone.apex.describe()
              << " inside " << cone.leg.cod().describe() << "\n";
  }
  std::cout << "centre is commutative: "
            << (check_commutative(centre.monad, 2).passed() ? "yes" : "no")
            << "\n";

  auto prog = parse_program(
      "prim warn_a ! wa\nprim warn_b ! wb\nprim fail ! e\n"
      "main = let u = op-(warn_a(1), warn_b(2)) in op+(u, fail(3))\n",
      g);
  for (auto const& r : reorder_report(prog, g, &m)) {
    std::cout << r.pos.str() << ' ' << r.op << " (" << r.a << ", " << r.b
              << ") " << verdict_name(r.verdict) << "\n";
  }
}
