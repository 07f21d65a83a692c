#pragma once

// Finite pomonoids, their morphisms and centres, plus the two-product
// extensions (bimonoids and duoids).
//
// Text format (line oriented, '#' starts a comment):
//   elements <n1> <n2> ...
//   unit <n>
//   mul <a> <b> <c>        # a*b = c, one line per ordered pair
//   le <a> <b>             # order generator a <= b
//   op2 <a> <b> <c>        # second product (bimonoid / duoid files)
//   unit2 <n>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace gcentre {

  using Grade = std::size_t;

  struct PomonoidSpec {
    std::vector<std::string>                                       elements;
    std::string                                                    unit;
    std::vector<std::tuple<std::string, std::string, std::string>> mul;
    std::vector<std::pair<std::string, std::string>>               le;
    std::vector<std::tuple<std::string, std::string, std::string>> op2;
    std::optional<std::string>                                     unit2;
  };

  inline PomonoidSpec parse_pomonoid_text(std::string const& text) {
    PomonoidSpec       spec;
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno = 0;
    bool               saw_elements = false, saw_unit = false;
    auto               fail = [&](std::string const& why) {
      throw error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       words(line);
      std::vector<std::string> w;
      for (std::string s; words >> s;) {
        w.push_back(s);
      }
      if (w.empty()) {
        continue;
      }
      auto const& kw = w[0];
      if (kw == "elements") {
        if (w.size() < 2) {
          fail("'elements' needs at least one name");
        }
        spec.elements.insert(spec.elements.end(), w.begin() + 1, w.end());
        saw_elements = true;
      } else if (kw == "unit") {
        if (w.size() != 2) {
          fail("'unit' takes exactly one name");
        }
        spec.unit = w[1];
        saw_unit  = true;
      } else if (kw == "mul" || kw == "op2") {
        if (w.size() != 4) {
          fail("'" + kw + "' takes three names");
        }
        (kw == "mul" ? spec.mul : spec.op2).emplace_back(w[1], w[2], w[3]);
      } else if (kw == "le") {
        if (w.size() != 3) {
          fail("'le' takes two names");
        }
        spec.le.emplace_back(w[1], w[2]);
      } else if (kw == "unit2") {
        if (w.size() != 2) {
          fail("'unit2' takes exactly one name");
        }
        spec.unit2 = w[1];
      } else {
        fail("unknown directive '" + kw + "'");
      }
    }
    if (!saw_elements) {
      throw error(errc::parse_error, "missing 'elements' line");
    }
    if (!saw_unit) {
      throw error(errc::parse_error, "missing 'unit' line");
    }
    return spec;
  }

  class Pomonoid {
   public:
    Pomonoid() = default;

    std::size_t size() const noexcept {
      return _names.size();
    }
    Grade unit() const noexcept {
      return _unit;
    }
    Grade mul(Grade a, Grade b) const {
      return _table[a * size() + b];
    }
    bool leq(Grade a, Grade b) const {
      return _leq[a * size() + b] != 0;
    }
    std::string const& name(Grade g) const {
      return _names.at(g);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Grade> find(std::string const& n) const {
      auto it = std::find(_names.begin(), _names.end(), n);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<Grade>(it - _names.begin());
    }
    Grade index(std::string const& n) const {
      auto g = find(n);
      if (!g) {
        throw error(errc::unknown_element, "'" + n + "' is not an element");
      }
      return *g;
    }
    bool commute(Grade a, Grade b) const {
      return mul(a, b) == mul(b, a);
    }
    bool is_central(Grade z) const {
      for (Grade b = 0; b < size(); ++b) {
        if (!commute(z, b)) {
          return false;
        }
      }
      return true;
    }
    bool commutative() const {
      for (Grade a = 0; a < size(); ++a) {
        if (!is_central(a)) {
          return false;
        }
      }
      return true;
    }
    bool discrete() const {
      for (Grade a = 0; a < size(); ++a) {
        for (Grade b = 0; b < size(); ++b) {
          if (a != b && leq(a, b)) {
            return false;
          }
        }
      }
      return true;
    }
    // Pairs a <= b (including a == b), in (a, b) lexicographic order.
    std::vector<std::pair<Grade, Grade>> comparable_pairs() const {
      std::vector<std::pair<Grade, Grade>> out;
      for (Grade a = 0; a < size(); ++a) {
        for (Grade b = 0; b < size(); ++b) {
          if (leq(a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    std::string to_text() const {
      std::ostringstream os;
      os << "elements";
      for (auto const& n : _names) {
        os << ' ' << n;
      }
      os << "\nunit " << name(_unit) << "\n";
      for (Grade a = 0; a < size(); ++a) {
        for (Grade b = 0; b < size(); ++b) {
          os << "mul " << name(a) << ' ' << name(b) << ' '
             << name(mul(a, b)) << "\n";
        }
      }
      for (auto [a, b] : comparable_pairs()) {
        if (a != b) {
          os << "le " << name(a) << ' ' << name(b) << "\n";
        }
      }
      return os.str();
    }

    friend bool operator==(Pomonoid const&, Pomonoid const&) = default;

   private:
    friend Pomonoid validate_pomonoid(PomonoidSpec const&);
    friend Pomonoid make_pomonoid_unchecked(std::vector<std::string>,
                                            Grade,
                                            std::vector<Grade>,
                                            std::vector<char>);

    std::vector<std::string> _names;
    Grade                    _unit = 0;
    std::vector<Grade>       _table;
    std::vector<char>        _leq;
  };

  // Builds without any law checks; leq must already be closed.
  inline Pomonoid make_pomonoid_unchecked(std::vector<std::string> names,
                                          Grade                    unit,
                                          std::vector<Grade>       table,
                                          std::vector<char>        leq) {
    Pomonoid p;
    p._names = std::move(names);
    p._unit  = unit;
    p._table = std::move(table);
    p._leq   = std::move(leq);
    return p;
  }

  namespace detail {
    inline std::map<std::string, Grade> name_index(
        std::vector<std::string> const& names) {
      std::map<std::string, Grade> idx;
      for (Grade g = 0; g < names.size(); ++g) {
        if (!idx.emplace(names[g], g).second) {
          throw error(errc::duplicate_element, "'" + names[g] + "'");
        }
      }
      return idx;
    }

    inline Grade lookup(std::map<std::string, Grade> const& idx,
                        std::string const&                  n) {
      auto it = idx.find(n);
      if (it == idx.end()) {
        throw error(errc::unknown_element, "'" + n + "' is not an element");
      }
      return it->second;
    }

    // Reads a full |G|x|G| table; every ordered pair exactly once.
    inline std::vector<Grade> read_table(
        std::map<std::string, Grade> const&                                   idx,
        std::vector<std::string> const&                                       names,
        std::vector<std::tuple<std::string, std::string, std::string>> const& rows,
        std::string const&                                                    what) {
      std::size_t const  n = names.size();
      std::vector<Grade> table(n * n, n);
      for (auto const& [a, b, c] : rows) {
        Grade ia = lookup(idx, a), ib = lookup(idx, b), ic = lookup(idx, c);
        Grade& slot = table[ia * n + ib];
        if (slot != n && slot != ic) {
          throw error(errc::parse_error,
                      what + " " + a + " " + b + " given twice with different "
                          "results");
        }
        slot = ic;
      }
      for (Grade a = 0; a < n; ++a) {
        for (Grade b = 0; b < n; ++b) {
          if (table[a * n + b] == n) {
            throw error(errc::missing_table_entry,
                        what + " " + names[a] + " " + names[b]);
          }
        }
      }
      return table;
    }

    // Reflexive-transitive closure (Warshall).
    inline std::vector<char> close_order(
        std::size_t n,
        std::vector<std::pair<Grade, Grade>> const& gens) {
      std::vector<char> leq(n * n, 0);
      for (Grade a = 0; a < n; ++a) {
        leq[a * n + a] = 1;
      }
      for (auto [a, b] : gens) {
        leq[a * n + b] = 1;
      }
      for (Grade k = 0; k < n; ++k) {
        for (Grade i = 0; i < n; ++i) {
          if (!leq[i * n + k]) {
            continue;
          }
          for (Grade j = 0; j < n; ++j) {
            if (leq[k * n + j]) {
              leq[i * n + j] = 1;
            }
          }
        }
      }
      return leq;
    }
  }  // namespace detail

  inline Pomonoid validate_pomonoid(PomonoidSpec const& spec) {
    auto const        idx = detail::name_index(spec.elements);
    std::size_t const n   = spec.elements.size();
    if (n == 0) {
      throw error(errc::parse_error, "a pomonoid needs at least one element");
    }
    Pomonoid p;
    p._names = spec.elements;
    p._unit  = detail::lookup(idx, spec.unit);
    p._table = detail::read_table(idx, spec.elements, spec.mul, "mul");
    std::vector<std::pair<Grade, Grade>> gens;
    for (auto const& [a, b] : spec.le) {
      gens.emplace_back(detail::lookup(idx, a), detail::lookup(idx, b));
    }
    p._leq = detail::close_order(n, gens);

    auto const& nm = p._names;
    for (Grade a = 0; a < n; ++a) {
      for (Grade b = 0; b < n; ++b) {
        for (Grade c = 0; c < n; ++c) {
          if (p.mul(p.mul(a, b), c) != p.mul(a, p.mul(b, c))) {
            throw error(errc::associativity_violation,
                        "(" + nm[a] + "," + nm[b] + "," + nm[c] + ")");
          }
        }
      }
    }
    for (Grade a = 0; a < n; ++a) {
      if (p.mul(p._unit, a) != a || p.mul(a, p._unit) != a) {
        throw error(errc::unit_violation, "(" + nm[a] + ")");
      }
    }
    for (Grade a = 0; a < n; ++a) {
      for (Grade b = a + 1; b < n; ++b) {
        if (p.leq(a, b) && p.leq(b, a)) {
          throw error(errc::antisymmetry_violation,
                      "(" + nm[a] + "," + nm[b] + ")");
        }
      }
    }
    for (Grade w = 0; w < n; ++w) {
      for (Grade x = 0; x < n; ++x) {
        if (!p.leq(w, x)) {
          continue;
        }
        for (Grade y = 0; y < n; ++y) {
          for (Grade z = 0; z < n; ++z) {
            if (p.leq(y, z) && !p.leq(p.mul(w, y), p.mul(x, z))) {
              throw error(errc::monotonicity_violation,
                          "(" + nm[w] + "," + nm[x] + "," + nm[y] + ","
                              + nm[z] + ")");
            }
          }
        }
      }
    }
    return p;
  }

  inline Pomonoid parse_pomonoid(std::string const& text) {
    return validate_pomonoid(parse_pomonoid_text(text));
  }

  // Convenience for code-built pomonoids: table given row-major by names.
  inline Pomonoid make_pomonoid(
      std::vector<std::string> const&                         names,
      std::string const&                                      unit,
      std::vector<std::vector<std::string>> const&            rows,
      std::vector<std::pair<std::string, std::string>> const& le = {}) {
    PomonoidSpec spec;
    spec.elements = names;
    spec.unit     = unit;
    for (std::size_t a = 0; a < rows.size() && a < names.size(); ++a) {
      for (std::size_t b = 0; b < rows[a].size() && b < names.size(); ++b) {
        spec.mul.emplace_back(names[a], names[b], rows[a][b]);
      }
    }
    spec.le = le;
    return validate_pomonoid(spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms and centre
  ////////////////////////////////////////////////////////////////////////

  struct PomonoidMorphism {
    Pomonoid           source;
    Pomonoid           target;
    std::vector<Grade> map;  // indexed by source grade

    Grade operator()(Grade g) const {
      return map.at(g);
    }
  };

  inline PomonoidMorphism identity_morphism(Pomonoid const& p) {
    std::vector<Grade> m(p.size());
    for (Grade g = 0; g < p.size(); ++g) {
      m[g] = g;
    }
    return {p, p, std::move(m)};
  }

  // Builds φ from a name-to-name assignment; every source element must be
  // mapped to an element of the target.
  inline PomonoidMorphism make_morphism(
      Pomonoid const&                           source,
      Pomonoid const&                           target,
      std::map<std::string, std::string> const& assignment) {
    std::vector<Grade> m(source.size());
    for (Grade g = 0; g < source.size(); ++g) {
      auto it = assignment.find(source.name(g));
      if (it == assignment.end()) {
        throw error(errc::unmapped_element, "'" + source.name(g) + "'");
      }
      auto t = target.find(it->second);
      if (!t) {
        throw error(errc::unmapped_element,
                    "'" + source.name(g) + "' maps to unknown '" + it->second
                        + "'");
      }
      m[g] = *t;
    }
    return {source, target, std::move(m)};
  }

  inline Report check_pomonoid_morphism(PomonoidMorphism const& phi) {
    auto const& s = phi.source;
    auto const& t = phi.target;
    if (phi.map.size() != s.size()) {
      throw error(errc::unmapped_element,
                  "map has " + std::to_string(phi.map.size())
                      + " entries for " + std::to_string(s.size())
                      + " elements");
    }
    for (Grade g = 0; g < s.size(); ++g) {
      if (phi.map[g] >= t.size()) {
        throw error(errc::unmapped_element, "'" + s.name(g) + "'");
      }
    }
    Report r("pomonoid morphism");
    r.record(t.leq(t.unit(), phi(s.unit())),
             {"unit", {s.name(s.unit())}, {}, "(i)",
              t.name(t.unit()), t.name(phi(s.unit())), false,
              "e <= phi(i) fails"});
    for (Grade x = 0; x < s.size(); ++x) {
      for (Grade y = 0; y < s.size(); ++y) {
        Grade lhs = t.mul(phi(x), phi(y));
        Grade rhs = phi(s.mul(x, y));
        r.record(t.leq(lhs, rhs),
                 {"multiplication", {s.name(x), s.name(y)}, {},
                  "(" + s.name(x) + "," + s.name(y) + ")", t.name(lhs),
                  t.name(rhs), false, "phi(x)*phi(y) <= phi(x*y) fails"});
        if (s.leq(x, y)) {
          r.record(t.leq(phi(x), phi(y)),
                   {"monotone", {s.name(x), s.name(y)}, {},
                    "(" + s.name(x) + "," + s.name(y) + ")",
                    t.name(phi(x)), t.name(phi(y)), false,
                    "x <= y but phi(x) !<= phi(y)"});
        }
      }
    }
    r.touch("monotone");
    return r;
  }

  struct PomonoidCentre {
    Pomonoid         centre;
    PomonoidMorphism inclusion;
  };

  // Z(P) = {z | z*b = b*z for all b}; order restricted, otherwise ignored.
  inline PomonoidCentre centre_of_pomonoid(Pomonoid const& p) {
    std::vector<Grade> members;
    for (Grade z = 0; z < p.size(); ++z) {
      if (p.is_central(z)) {
        members.push_back(z);
      }
    }
    std::size_t const        n = members.size();
    std::vector<std::string> names;
    std::vector<Grade>       pos(p.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(p.name(members[i]));
      pos[members[i]] = i;
    }
    std::vector<Grade> table(n * n);
    std::vector<char>  leq(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // Z(P) is closed under * (and contains the unit).
        table[i * n + j] = pos[p.mul(members[i], members[j])];
        leq[i * n + j]   = p.leq(members[i], members[j]) ? 1 : 0;
      }
    }
    Pomonoid z = make_pomonoid_unchecked(std::move(names),
                                         pos[p.unit()],
                                         std::move(table),
                                         std::move(leq));
    PomonoidMorphism incl{z, p, members};
    return {std::move(z), std::move(incl)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Bimonoids and duoids
  ////////////////////////////////////////////////////////////////////////

  // A pomonoid with a second product. `Bimonoid` asks a*b <= a(op2)b;
  // `Duoid` asks the interchange (a|c)*(b|d) <= (a*b)|(c*d).
  struct TwoProductPomonoid {
    Pomonoid           base;
    std::vector<Grade> table2;
    Grade              unit2 = 0;

    Grade op2(Grade a, Grade b) const {
      return table2[a * base.size() + b];
    }
  };

  struct Bimonoid : TwoProductPomonoid {};

  struct Duoid : TwoProductPomonoid {
    Grade par(Grade a, Grade b) const {
      return op2(a, b);
    }
  };

  namespace detail {
    inline TwoProductPomonoid two_product_from_spec(PomonoidSpec const& spec) {
      TwoProductPomonoid out;
      out.base = validate_pomonoid(spec);
      auto const idx = name_index(spec.elements);
      out.table2     = read_table(idx, spec.elements, spec.op2, "op2");
      if (!spec.unit2) {
        throw error(errc::parse_error, "missing 'unit2' line");
      }
      out.unit2 = lookup(idx, *spec.unit2);
      return out;
    }

    // Checks that (op2, unit2) is a commutative monotone monoid.
    inline void check_second_monoid(TwoProductPomonoid const& m,
                                    Report&                   r,
                                    std::string const&        sym) {
      auto const& p  = m.base;
      auto const  n  = p.size();
      auto        nm = [&](Grade g) { return p.name(g); };
      for (Grade a = 0; a < n; ++a) {
        r.record(m.op2(m.unit2, a) == a && m.op2(a, m.unit2) == a,
                 {sym + ".unit", {nm(a)}, {}, "(" + nm(a) + ")",
                  nm(m.op2(m.unit2, a)), nm(m.op2(a, m.unit2)), false, ""});
        for (Grade b = 0; b < n; ++b) {
          r.record(m.op2(a, b) == m.op2(b, a),
                   {sym + ".commutative", {nm(a), nm(b)}, {},
                    "(" + nm(a) + "," + nm(b) + ")", nm(m.op2(a, b)),
                    nm(m.op2(b, a)), false, ""});
          for (Grade c = 0; c < n; ++c) {
            Grade l = m.op2(m.op2(a, b), c), rr = m.op2(a, m.op2(b, c));
            r.record(l == rr,
                     {sym + ".associative", {nm(a), nm(b), nm(c)}, {},
                      "(" + nm(a) + "," + nm(b) + "," + nm(c) + ")", nm(l),
                      nm(rr), false, ""});
          }
        }
      }
      for (auto [w, x] : p.comparable_pairs()) {
        for (auto [y, z] : p.comparable_pairs()) {
          r.record(p.leq(m.op2(w, y), m.op2(x, z)),
                   {sym + ".monotone", {nm(w), nm(x), nm(y), nm(z)}, {},
                    "(" + nm(w) + "," + nm(x) + "," + nm(y) + "," + nm(z)
                        + ")",
                    nm(m.op2(w, y)), nm(m.op2(x, z)), false, ""});
        }
      }
    }
  }  // namespace detail

  inline Bimonoid bimonoid_from_spec(PomonoidSpec const& spec) {
    return Bimonoid{detail::two_product_from_spec(spec)};
  }

  inline Duoid duoid_from_spec(PomonoidSpec const& spec) {
    return Duoid{detail::two_product_from_spec(spec)};
  }

  inline Report check_bimonoid(Bimonoid const& b) {
    Report r("bimonoid");
    detail::check_second_monoid(b, r, "op2");
    auto const& p = b.base;
    for (Grade x = 0; x < p.size(); ++x) {
      for (Grade y = 0; y < p.size(); ++y) {
        r.record(p.leq(p.mul(x, y), b.op2(x, y)),
                 {"delta", {p.name(x), p.name(y)}, {},
                  "(" + p.name(x) + "," + p.name(y) + ")",
                  p.name(p.mul(x, y)), p.name(b.op2(x, y)), false,
                  "a*b <= a(op2)b fails"});
      }
    }
    return r;
  }

  inline Report check_duoid(Duoid const& d) {
    Report r("duoid");
    detail::check_second_monoid(d, r, "par");
    auto const& p  = d.base;
    auto const  n  = p.size();
    auto        nm = [&](Grade g) { return p.name(g); };
    for (Grade a = 0; a < n; ++a) {
      for (Grade b = 0; b < n; ++b) {
        for (Grade c = 0; c < n; ++c) {
          for (Grade e = 0; e < n; ++e) {
            Grade l  = p.mul(d.par(a, c), d.par(b, e));
            Grade rr = d.par(p.mul(a, b), p.mul(c, e));
            if (p.leq(l, rr)) {
              r.pass("interchange");
            } else {
              r.fail({"interchange", {nm(a), nm(b), nm(c), nm(e)}, {},
                      "(" + nm(a) + "," + nm(b) + "," + nm(c) + "," + nm(e)
                          + ")",
                      nm(l), nm(rr), false,
                      "(a|c)*(b|d) <= (a*b)|(c*d) fails"});
            }
          }
        }
      }
    }
    for (Grade a = 0; a < n; ++a) {
      for (Grade b = 0; b < n; ++b) {
        r.record(p.leq(p.mul(a, b), d.par(a, b)),
                 {"seq_below_par", {nm(a), nm(b)}, {},
                  "(" + nm(a) + "," + nm(b) + ")", nm(p.mul(a, b)),
                  nm(d.par(a, b)), false, "a*b <= a|b fails"});
      }
    }
    return r;
  }

  // a(op2)b = a*b when a or b is the unit or both are central, top
  // otherwise. The unit clause keeps i a unit for op2 when P is not
  // commutative.
  inline Bimonoid bimonoid_from_absorbing_top(Pomonoid const& p, Grade top) {
    for (Grade x = 0; x < p.size(); ++x) {
      if (p.mul(top, x) != top || p.mul(x, top) != top) {
        throw error(errc::not_absorbing,
                    p.name(top) + "*" + p.name(x) + " is not "
                        + p.name(top));
      }
      if (!p.leq(x, top)) {
        throw error(errc::not_top,
                    p.name(x) + " is not below " + p.name(top));
      }
    }
    auto const         n = p.size();
    std::vector<Grade> t2(n * n);
    for (Grade a = 0; a < n; ++a) {
      for (Grade b = 0; b < n; ++b) {
        bool keep = a == p.unit() || b == p.unit()
                    || (p.is_central(a) && p.is_central(b));
        t2[a * n + b] = keep ? p.mul(a, b) : top;
      }
    }
    return Bimonoid{TwoProductPomonoid{p, std::move(t2), p.unit()}};
  }

}  // namespace gcentre
