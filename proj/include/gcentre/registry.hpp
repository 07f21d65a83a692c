#pragma once

// Built-in pomonoids, graded monads and morphisms, addressable by name.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centre.hpp"
#include "error.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "graded_monad.hpp"
#include "language.hpp"
#include "pomonoid.hpp"
#include "relaxations.hpp"

namespace gcentre {

  ////////////////////////////////////////////////////////////////////////
  // Pomonoids
  ////////////////////////////////////////////////////////////////////////

  inline Pomonoid trivial_pomonoid() {
    return make_pomonoid({"i"}, "i", {{"i"}});
  }

  // t: no warning, e: error, wa / wb: warnings; among warnings x*y = y.
  // With absorbing_top the order is t, wa, wb <= e; otherwise discrete.
  inline Pomonoid multi_error_pomonoid(bool absorbing_top = true) {
    std::vector<std::pair<std::string, std::string>> le;
    if (absorbing_top) {
      le = {{"t", "e"}, {"wa", "e"}, {"wb", "e"}};
    }
    return make_pomonoid({"t", "e", "wa", "wb"}, "t",
                         {{"t", "e", "wa", "wb"},
                          {"e", "e", "e", "e"},
                          {"wa", "e", "wa", "wb"},
                          {"wb", "e", "wa", "wb"}},
                         le);
  }

  inline Pomonoid bool_pomonoid() {
    return make_pomonoid({"tt", "ff"}, "tt", {{"tt", "ff"}, {"ff", "ff"}},
                         {{"tt", "ff"}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Monads
  ////////////////////////////////////////////////////////////////////////

  inline GradedStrongMonad identity_monad(Pomonoid const& p) {
    GradedStrongMonad m;
    m.name    = "identity";
    m.grading = p;
    m.carriers.assign(p.size(), Carrier{FunctorExpr::identity(), {}});
    m.eta  = [](Value const& x) { return Value::id(x); };
    m.mu   = [](Grade, Grade, Value const& v) { return v.child(); };
    m.lift = [](Grade, Grade, Value const& v) { return v; };
    return m;
  }

  // T^t X = X, T^e X = 1, T^wa X = X x {a}, T^wb X = X x {b}.
  // The multiplication keeps the label of the inner layer, which is the
  // label of the product grade. `patched` keeps the outer label instead and
  // so leaves the carrier T^(wi*wj).
  inline GradedStrongMonad multi_error_writer(bool patched = false,
                                              bool absorbing_top = true) {
    Pomonoid const    p = multi_error_pomonoid(absorbing_top);
    Grade const       T = p.index("t"), E = p.index("e");
    GradedStrongMonad m;
    m.name    = patched ? "multi_error_writer_patched" : "multi_error_writer";
    m.grading = p;
    auto label = [](char const* l) {
      return FunctorExpr::prod(FunctorExpr::identity(),
                               FunctorExpr::constant(
                                   FinSet(l, {Value::atom(l)})));
    };
    m.carriers = {{FunctorExpr::identity(), {}},
                  {FunctorExpr::constant(unit_set()), {}},
                  {label("a"), {}},
                  {label("b"), {}}};
    m.eta = [](Value const& x) { return Value::id(x); };
    m.mu  = [T, E, patched](Grade a, Grade b, Value const& v) -> Value {
      if (a == E || b == E) {
        return Value::cnst("*");
      }
      if (a == T) {
        return v.child();
      }
      if (b == T) {
        return Value::pair(v.first().child(), v.second());
      }
      Value const& inner = v.first().child();
      return patched ? Value::pair(inner.first(), v.second()) : inner;
    };
    m.lift = [E](Grade a, Grade b, Value const& v) -> Value {
      if (a == b) {
        return v;
      }
      if (b == E) {
        return Value::cnst("*");
      }
      throw error(errc::shape_mismatch, "no lift between these grades");
    };
    return m;
  }

  namespace detail {
    inline FinSet label_set(Pomonoid const&           p,
                            std::vector<Grade> const& which,
                            std::string const&        name) {
      std::vector<Value> vs;
      for (auto g : which) {
        vs.push_back(Value::atom(p.name(g)));
      }
      return FinSet(name, std::move(vs));
    }

    inline std::vector<Grade> all_grades(Pomonoid const& p) {
      std::vector<Grade> out;
      for (Grade g = 0; g < p.size(); ++g) {
        out.push_back(g);
      }
      return out;
    }

    // Writer multiplication on labels drawn from the monoid `w`; the label
    // of the outer (earlier) layer is multiplied on the left.
    inline MuFn writer_mu(std::shared_ptr<Pomonoid const> w) {
      return [w](Grade, Grade, Value const& v) {
        Value const& inner = v.first().child();
        Grade        l = w->mul(w->index(v.second().token()),
                                w->index(inner.second().token()));
        return Value::pair(inner.first(), Value::cnst(w->name(l)));
      };
    }
  }  // namespace detail

  // Graded by ((Bool, tt <= ff), tt, and): T^tt X = X x Z(M) and
  // T^ff X = X x M, with the writer structure of M and inclusion as lift.
  inline GradedStrongMonad bool_writer_pair(Pomonoid const& monoid) {
    auto        w  = std::make_shared<Pomonoid const>(monoid);
    auto        zc = centre_of_pomonoid(monoid);
    Pomonoid    b  = bool_pomonoid();
    auto writer_shape = [](FinSet labels) {
      return FunctorExpr::prod(FunctorExpr::identity(),
                               FunctorExpr::constant(std::move(labels)));
    };
    GradedStrongMonad m;
    m.name    = "bool_writer_pair";
    m.grading = b;
    m.carriers.resize(2);
    m.carriers[b.index("tt")] = {
        writer_shape(detail::label_set(monoid, zc.inclusion.map, "Z(M)")), {}};
    m.carriers[b.index("ff")] = {
        writer_shape(
            detail::label_set(monoid, detail::all_grades(monoid), "M")),
        {}};
    std::string unit = monoid.name(monoid.unit());
    m.eta = [unit](Value const& x) {
      return Value::pair(Value::id(x), Value::cnst(unit));
    };
    m.mu   = detail::writer_mu(w);
    m.lift = [](Grade, Grade, Value const& v) { return v; };
    return m;
  }

  // The writer monad of Z(M), graded by the trivial pomonoid.
  inline GradedStrongMonad central_part_writer(Pomonoid const& monoid) {
    auto              w  = std::make_shared<Pomonoid const>(monoid);
    auto              zc = centre_of_pomonoid(monoid);
    GradedStrongMonad m;
    m.name    = "central_part_writer";
    m.grading = trivial_pomonoid();
    m.carriers = {{FunctorExpr::prod(
                       FunctorExpr::identity(),
                       FunctorExpr::constant(detail::label_set(
                           monoid, zc.inclusion.map, "Z(M)"))),
                   {}}};
    std::string unit = monoid.name(monoid.unit());
    m.eta = [unit](Value const& x) {
      return Value::pair(Value::id(x), Value::cnst(unit));
    };
    m.mu   = detail::writer_mu(w);
    m.lift = [](Grade, Grade, Value const& v) { return v; };
    return m;
  }

  // Inclusion of the central part into bool_writer_pair at grade `at`
  // ("tt" or "ff"); at ff it is the inclusion along tt <= ff.
  inline GradedMonadMorphism central_part_inclusion(Pomonoid const&    monoid,
                                                    std::string const& at) {
    auto src = central_part_writer(monoid);
    auto dst = bool_writer_pair(monoid);
    return {make_morphism(src.grading, dst.grading, {{"i", at}}), src, dst,
            [](Grade, Value const& v) { return v; }};
  }

  inline DuoidalGradedMonad language_writer(std::string const& alphabet,
                                            std::size_t        cap) {
    return build_language_writer(letter_duoid(alphabet, cap));
  }

  ////////////////////////////////////////////////////////////////////////
  // Lookup by name
  ////////////////////////////////////////////////////////////////////////

  struct RegistryEntry {
    std::string name;
    std::string description;
  };

  inline std::vector<RegistryEntry> registry() {
    return {
        {"identity", "identity monad over the given pomonoid (default: "
                     "multi-error)"},
        {"multi_error_writer",
         "writer monad graded by {t,e,wa,wb}: T^t X = X, T^e X = 1, "
         "T^wi X = X x {i}"},
        {"multi_error_writer_patched",
         "multi_error_writer whose warning/warning multiplication keeps the "
         "outer label"},
        {"bool_writer_pair",
         "Bool-graded pair T^tt X = X x Z(M), T^ff X = X x M, M the "
         "multi-error monoid"},
        {"central_part_writer",
         "writer monad of Z(M), M the multi-error monoid, trivially graded"},
        {"language_writer",
         "writer monad graded by capped languages (alphabet ab, cap 2)"},
        {"centre:<name>", "centre of a built-in monad, graded by Z(G)"},
    };
  }

  inline GradedStrongMonad lookup_monad(
      std::string const&             name,
      std::optional<Pomonoid> const& pomonoid = std::nullopt) {
    if (name.rfind("centre:", 0) == 0) {
      return build_centre_monad(lookup_monad(name.substr(7), pomonoid)).monad;
    }
    if (name == "identity") {
      return identity_monad(pomonoid ? *pomonoid : multi_error_pomonoid());
    }
    if (name == "multi_error_writer") {
      return multi_error_writer();
    }
    if (name == "multi_error_writer_patched") {
      return multi_error_writer(true);
    }
    if (name == "bool_writer_pair") {
      return bool_writer_pair(pomonoid ? *pomonoid : multi_error_pomonoid());
    }
    if (name == "central_part_writer") {
      return central_part_writer(pomonoid ? *pomonoid
                                          : multi_error_pomonoid());
    }
    if (name == "language_writer") {
      return language_writer("ab", 2).monad;
    }
    throw error(errc::unknown_name, "no built-in monad named '" + name + "'");
  }

  // Morphisms known between built-ins: identities, centre inclusions and
  // the central-part inclusion into bool_writer_pair.
  inline GradedMonadMorphism lookup_morphism(
      std::string const&             from,
      std::string const&             to,
      std::optional<Pomonoid> const& pomonoid = std::nullopt) {
    if (from == to) {
      return identity_morphism(lookup_monad(from, pomonoid));
    }
    if (from == "centre:" + to) {
      return build_centre_monad(lookup_monad(to, pomonoid)).inclusion;
    }
    if (from == "central_part_writer" && to == "bool_writer_pair") {
      return central_part_inclusion(
          pomonoid ? *pomonoid : multi_error_pomonoid(), "ff");
    }
    throw error(errc::unknown_name,
                "no built-in morphism from '" + from + "' to '" + to + "'");
  }

}  // namespace gcentre
