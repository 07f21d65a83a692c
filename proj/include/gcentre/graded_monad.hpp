#pragma once

// Pomonoid-graded strong monads on finite sets.
//
// Conventions. For grades a, b the multiplication is
//   mu(a, b) : T^a (T^b X) -> T^(a*b) X
// so the outer layer carries the grade of the computation that runs first.
// Components are plain functions on element trees and never see X; the law
// suites are what establish naturality.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "pomonoid.hpp"
#include "value.hpp"

namespace gcentre {

  // T^a X: the elements of shape(X) that `admits` accepts. An empty filter
  // keeps every element; filters describe the non-polynomial carriers that
  // show up for centres.
  struct Carrier {
    FunctorExpr                       shape = FunctorExpr::identity();
    std::function<bool(Value const&)> admits;
  };

  using EtaFn  = std::function<Value(Value const&)>;
  using MuFn   = std::function<Value(Grade, Grade, Value const&)>;
  using LiftFn = std::function<Value(Grade, Grade, Value const&)>;
  // (x, t) with t in T^a Y  ->  T^a (X*Y)       (strength)
  // (t, y) with t in T^a X  ->  T^a (X*Y)       (costrength)
  using StrengthFn = std::function<Value(Grade, Value const&)>;

  struct GradedStrongMonad {
    std::string          name;
    Pomonoid             grading;
    std::vector<Carrier> carriers;
    EtaFn                eta;
    MuFn                 mu;
    LiftFn               lift;
    StrengthFn           tau;         // empty: cartesian strength of the shape
    StrengthFn           costrength;  // empty: derived through the symmetry

    void require_complete() const {
      if (carriers.size() != grading.size()) {
        throw error(errc::component_missing,
                    name + ": " + std::to_string(carriers.size())
                        + " carriers for " + std::to_string(grading.size())
                        + " grades");
      }
      if (!eta) {
        throw error(errc::component_missing, name + ": eta");
      }
      if (!mu) {
        throw error(errc::component_missing, name + ": mu");
      }
      if (!lift) {
        throw error(errc::component_missing, name + ": lift");
      }
    }

    FunctorExpr const& shape(Grade a) const {
      return carriers.at(a).shape;
    }

    std::string grade_name(Grade a) const {
      return grading.name(a);
    }

    bool admits(Grade a, Value const& v) const {
      auto const& f = carriers.at(a).admits;
      return !f || f(v);
    }

    FinSet obj(Grade a, FinSet const& x) const {
      FinSet all = apply_obj(shape(a), x, "T^" + grading.name(a));
      if (!carriers.at(a).admits) {
        return all;
      }
      std::vector<Value> keep;
      for (auto const& v : all) {
        if (admits(a, v)) {
          keep.push_back(v);
        }
      }
      return FinSet(all.name(), std::move(keep));
    }

    bool member(Grade a, FinSet const& x, Value const& v) const {
      return shape_member(shape(a), v,
                          [&](Value const& w) { return x.contains(w); })
             && admits(a, v);
    }

    // T^a applied to a leaf map.
    Value map(Grade a, ValueMap const& g, Value const& v) const {
      return fmap(shape(a), g, v);
    }

    Value strength(Grade a, Value const& xt) const {
      if (tau) {
        return tau(a, xt);
      }
      Value const& x = xt.first();
      return fmap(shape(a),
                  [&x](Value const& y) { return Value::pair(x, y); },
                  xt.second());
    }

    // tau' = T(gamma) . tau . gamma
    Value costr(Grade a, Value const& ty) const {
      if (costrength) {
        return costrength(a, ty);
      }
      return fmap(shape(a), mon::swap,
                  strength(a, Value::pair(ty.second(), ty.first())));
    }

    std::size_t degree(Grade a) const {
      return shape(a).degree();
    }
  };

  // The derived costrength as a standalone transformer at grade a.
  inline StrengthFn derive_costrength(GradedStrongMonad const& m) {
    auto self = std::make_shared<GradedStrongMonad const>(m);
    return [self](Grade a, Value const& ty) {
      return fmap(self->shape(a), mon::swap,
                  self->strength(a, Value::pair(ty.second(), ty.first())));
    };
  }

  // Left-first composite: t in T^a X runs before s in T^b Y.
  //   mu(a,b) . T^a tau . tau'        : T^a X * T^b Y -> T^(a*b)(X*Y)
  inline Value left_first(GradedStrongMonad const& m,
                          Grade                    a,
                          Grade                    b,
                          Value const&             t,
                          Value const&             s) {
    Value outer = m.costr(a, Value::pair(t, s));
    Value nested =
        m.map(a, [&](Value const& w) { return m.strength(b, w); }, outer);
    return m.mu(a, b, nested);
  }

  // Right-first composite: s runs before t.
  //   mu(b,a) . T^b tau' . tau        : T^a X * T^b Y -> T^(b*a)(X*Y)
  inline Value right_first(GradedStrongMonad const& m,
                           Grade                    a,
                           Grade                    b,
                           Value const&             t,
                           Value const&             s) {
    Value outer = m.strength(b, Value::pair(t, s));
    Value nested =
        m.map(b, [&](Value const& w) { return m.costr(a, w); }, outer);
    return m.mu(b, a, nested);
  }

  struct GradedMonadMorphism {
    PomonoidMorphism  phi;
    GradedStrongMonad source;
    GradedStrongMonad target;
    // iota(a) : T^a X -> P^(phi a) X
    std::function<Value(Grade, Value const&)> iota;
  };

  inline GradedMonadMorphism identity_morphism(GradedStrongMonad const& m) {
    return {identity_morphism(m.grading), m, m,
            [](Grade, Value const& v) { return v; }};
  }

  // Keeps only the grades in the image of `incl`, renumbered as in
  // incl.source; carriers and components are the original ones.
  inline GradedStrongMonad restrict_to_grades(GradedStrongMonad const& m,
                                              PomonoidMorphism const&  incl,
                                              std::string              name) {
    m.require_complete();
    GradedStrongMonad out;
    out.name    = std::move(name);
    out.grading = incl.source;
    auto up     = std::make_shared<std::vector<Grade>>(incl.map);
    for (Grade g = 0; g < incl.source.size(); ++g) {
      out.carriers.push_back(m.carriers.at((*up)[g]));
    }
    auto base = std::make_shared<GradedStrongMonad const>(m);
    out.eta   = base->eta;
    out.mu    = [base, up](Grade a, Grade b, Value const& v) {
      return base->mu((*up)[a], (*up)[b], v);
    };
    out.lift = [base, up](Grade a, Grade b, Value const& v) {
      return base->lift((*up)[a], (*up)[b], v);
    };
    out.tau = [base, up](Grade a, Value const& v) {
      return base->strength((*up)[a], v);
    };
    out.costrength = [base, up](Grade a, Value const& v) {
      return base->costr((*up)[a], v);
    };
    return out;
  }

}  // namespace gcentre
