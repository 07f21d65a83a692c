#pragma once

// Centrality on finite sets and the centre of a graded strong monad.
//
// t in T^z X (z central in the grading) is central when, for every grade b
// and every s in T^b Y, the left-first and right-first composites agree.
// Y ranges over canonical sets of size up to bound(b), by default the
// degree of T^b: an s has at most degree(T^b) distinct leaves, so every
// instance of the equation is the image of one over a canonical set of
// that size along an injection, and both composites are natural.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "graded_monad.hpp"
#include "laws.hpp"
#include "pomonoid.hpp"
#include "report.hpp"

namespace gcentre {

  struct Bound {
    std::size_t                extra = 0;
    std::optional<std::size_t> fixed;

    std::size_t at(GradedStrongMonad const& m, Grade b) const {
      return fixed ? *fixed : m.degree(b) + extra;
    }
  };

  struct CentralityWitness {
    Grade       b = 0;
    std::size_t y_size = 0;
    Value       s;
    Value       lhs;
    Value       rhs;
  };

  inline void require_central_grade(GradedStrongMonad const& m, Grade z) {
    if (z >= m.grading.size() || !m.grading.is_central(z)) {
      throw error(errc::grade_not_central,
                  (z < m.grading.size() ? m.grading.name(z)
                                        : std::to_string(z))
                      + " is not in the centre of the grading");
    }
  }

  // First (b, Y, s) breaking the centrality equation for t, if any.
  inline std::optional<CentralityWitness> centrality_witness(
      GradedStrongMonad const& m,
      Grade                    z,
      Value const&             t,
      Bound const&             bound) {
    for (Grade b = 0; b < m.grading.size(); ++b) {
      std::size_t const top = bound.at(m, b);
      for (std::size_t n = 0; n <= top; ++n) {
        FinSet y = canonical_set(n);
        for (auto const& s : m.obj(b, y)) {
          Value l = left_first(m, z, b, t, s);
          Value r = right_first(m, z, b, t, s);
          if (!(l == r)) {
            return CentralityWitness{b, n, s, l, r};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_central(GradedStrongMonad const& m,
                         Grade                    z,
                         FinSet const&            x,
                         Value const&             t,
                         Bound const&             bound = {}) {
    require_central_grade(m, z);
    if (!m.member(z, x, t)) {
      throw error(errc::element_not_in_carrier,
                  t.encode() + " is not in T^" + m.grading.name(z) + "("
                      + x.name() + ")");
    }
    return !centrality_witness(m, z, t, bound);
  }

  // Memoized centrality test; the verdict depends only on the element tree,
  // so one table serves every X.
  class CentralityOracle {
   public:
    CentralityOracle(GradedStrongMonad m, Bound bound)
        : _m(std::move(m)), _bound(bound) {}

    bool operator()(Grade z, Value const& t) {
      auto key = std::make_pair(z, t);
      auto it  = _memo.find(key);
      if (it != _memo.end()) {
        return it->second;
      }
      bool ok = !centrality_witness(_m, z, t, _bound);
      _memo.emplace(std::move(key), ok);
      return ok;
    }

    GradedStrongMonad const& monad() const noexcept {
      return _m;
    }

   private:
    GradedStrongMonad                   _m;
    Bound                               _bound;
    std::map<std::pair<Grade, Value>, bool> _memo;
  };

  ////////////////////////////////////////////////////////////////////////
  // Central cones
  ////////////////////////////////////////////////////////////////////////

  struct CentralCone {
    Grade  z = 0;
    FinSet x;
    FinSet apex;
    FinFn  leg;  // apex -> T^z X
  };

  inline CentralCone graded_centre_at(GradedStrongMonad const& m,
                                      Grade                    z,
                                      FinSet const&            x,
                                      Bound const&             bound = {}) {
    require_central_grade(m, z);
    FinSet             carrier = m.obj(z, x);
    std::vector<Value> keep;
    for (auto const& t : carrier) {
      if (!centrality_witness(m, z, t, bound)) {
        keep.push_back(t);
      }
    }
    FinSet apex("Z^" + m.grading.name(z) + "(" + x.name() + ")",
                std::move(keep));
    FinFn leg(apex, carrier, apex.elements());
    return {z, x, std::move(apex), std::move(leg)};
  }

  struct ConeCheckOptions {
    bool        precompose = false;  // every g: W -> apex, |W| <= 2
    bool        postcompose = false; // every f: X -> Y_n, n <= 3
    std::size_t max_w = 2;
    std::size_t max_target = 3;
  };

  inline Report check_central_cone(GradedStrongMonad const& m,
                                   CentralCone const&       cone,
                                   Bound const&             bound = {},
                                   ConeCheckOptions const&  opt = {}) {
    require_central_grade(m, cone.z);
    Report r("central cone at " + m.grading.name(cone.z) + ", "
             + cone.x.name());
    auto const gz = m.grading.name(cone.z);
    auto check = [&](std::string const& law, Value const& t,
                     std::vector<std::size_t> sz) {
      if (auto w = centrality_witness(m, cone.z, t, bound)) {
        sz.push_back(w->y_size);
        r.fail({law, {gz, m.grading.name(w->b)}, sz,
                "(" + t.encode() + "," + w->s.encode() + ")", w->lhs.encode(),
                w->rhs.encode(), false, "centrality equation fails"});
      } else {
        r.pass(law);
      }
    };
    for (auto const& p : cone.apex) {
      check("cone.equation", cone.leg(p), {cone.x.size()});
    }
    if (opt.precompose) {
      r.touch("cone.precompose");
      for (std::size_t n = 0; n <= opt.max_w; ++n) {
        for (auto const& g : all_functions(canonical_set(n), cone.apex)) {
          for (auto const& w : g.dom()) {
            check("cone.precompose", cone.leg(g(w)), {n});
          }
        }
      }
    }
    if (opt.postcompose) {
      r.touch("cone.postcompose");
      for (std::size_t n = 0; n <= opt.max_target; ++n) {
        for (auto const& f : all_functions(cone.x, canonical_set(n))) {
          ValueMap fm = [&f](Value const& v) { return f(v); };
          for (auto const& p : cone.apex) {
            check("cone.postcompose", m.map(cone.z, fm, cone.leg(p)),
                  {cone.x.size(), n});
          }
        }
      }
    }
    r.touch("cone.equation");
    return r;
  }

  // The unique map u with centre.leg . u = cone.leg, when it exists.
  inline std::optional<FinFn> factor_through(CentralCone const& cone,
                                             CentralCone const& centre) {
    std::vector<Value> img;
    for (auto const& p : cone.apex) {
      Value const& t = cone.leg(p);
      if (!centre.apex.contains(t)) {
        return std::nullopt;
      }
      img.push_back(t);
    }
    return FinFn(cone.apex, centre.apex, std::move(img));
  }

  ////////////////////////////////////////////////////////////////////////
  // The centre as a graded monad
  ////////////////////////////////////////////////////////////////////////

  struct CentreResult {
    PomonoidCentre           grading;
    GradedStrongMonad        monad;
    GradedMonadMorphism      inclusion;
    std::vector<CentralCone> cones;  // per central grade, per |X| <= k

    CentralCone const& cone(Grade z_in_centre, std::size_t n) const {
      for (auto const& c : cones) {
        if (c.z == grading.inclusion(z_in_centre) && c.x.size() == n) {
          return c;
        }
      }
      throw error(errc::unknown_name, "no cone computed at that grade/size");
    }
  };

  namespace detail {
    [[noreturn]] inline void centrality_violation(std::string const& what,
                                                  Value const&       in,
                                                  Value const&       out) {
      throw error(errc::centrality_violation,
                  what + " sends " + in.encode() + " to non-central "
                      + out.encode());
    }
  }  // namespace detail

  // Carriers, unit, multiplication, lifts and strengths of M restricted to
  // its central elements. Every output is checked for centrality; a
  // violation raises CentralityViolation.
  inline CentreResult build_centre_monad(GradedStrongMonad const& m,
                                         Bound const&             bound = {},
                                         std::size_t              verify_k = 3) {
    m.require_complete();
    auto zc     = centre_of_pomonoid(m.grading);
    auto oracle = std::make_shared<CentralityOracle>(m, bound);
    auto up     = std::make_shared<std::vector<Grade>>(zc.inclusion.map);
    auto base   = std::make_shared<GradedStrongMonad const>(m);

    GradedStrongMonad z;
    z.name    = "centre:" + m.name;
    z.grading = zc.centre;
    for (Grade g = 0; g < zc.centre.size(); ++g) {
      Grade orig = (*up)[g];
      auto  outer = m.carriers.at(orig).admits;
      z.carriers.push_back(
          {m.shape(orig), [oracle, orig, outer](Value const& v) {
             return (!outer || outer(v)) && (*oracle)(orig, v);
           }});
    }
    Grade const unit_orig = m.grading.unit();
    z.eta = [base, oracle, unit_orig](Value const& x) {
      Value out = base->eta(x);
      if (!(*oracle)(unit_orig, out)) {
        detail::centrality_violation("eta", x, out);
      }
      return out;
    };
    z.mu = [base, oracle, up](Grade a, Grade b, Value const& v) {
      Grade ua = (*up)[a], ub = (*up)[b];
      Value out = base->mu(ua, ub, v);
      if (!(*oracle)(base->grading.mul(ua, ub), out)) {
        detail::centrality_violation("mu", v, out);
      }
      return out;
    };
    z.lift = [base, oracle, up](Grade a, Grade b, Value const& v) {
      Value out = base->lift((*up)[a], (*up)[b], v);
      if (!(*oracle)((*up)[b], out)) {
        detail::centrality_violation("lift", v, out);
      }
      return out;
    };
    z.tau = [base, oracle, up](Grade a, Value const& v) {
      Value out = base->strength((*up)[a], v);
      if (!(*oracle)((*up)[a], out)) {
        detail::centrality_violation("tau", v, out);
      }
      return out;
    };
    z.costrength = [base, oracle, up](Grade a, Value const& v) {
      Value out = base->costr((*up)[a], v);
      if (!(*oracle)((*up)[a], out)) {
        detail::centrality_violation("tau'", v, out);
      }
      return out;
    };

    GradedMonadMorphism incl{zc.inclusion, z, m,
                             [](Grade, Value const& v) { return v; }};

    CentreResult out{zc, z, incl, {}};
    for (Grade g = 0; g < zc.centre.size(); ++g) {
      for (std::size_t n = 0; n <= verify_k; ++n) {
        out.cones.push_back(
            graded_centre_at(m, (*up)[g], canonical_set(n), bound));
      }
    }

    // Evaluate every component on every point of the restricted carriers
    // up to verify_k so violations surface here rather than later.
    auto const& zg = z.grading;
    for (std::size_t n = 0; n <= verify_k; ++n) {
      FinSet x = canonical_set(n);
      for (auto const& v : x) {
        z.eta(v);
      }
      for (Grade a = 0; a < zg.size(); ++a) {
        FinSet za = z.obj(a, x);
        for (Grade b = 0; b < zg.size(); ++b) {
          if (zg.leq(a, b) && a != b) {
            for (auto const& t : za) {
              z.lift(a, b, t);
            }
          }
          for (auto const& v : z.obj(a, z.obj(b, x))) {
            z.mu(a, b, v);
          }
        }
        for (std::size_t n2 = 0; n2 <= verify_k; ++n2) {
          FinSet y = canonical_set(n2);
          for (auto const& t : za) {
            for (auto const& yv : y) {
              z.strength(a, Value::pair(yv, t));
              z.costr(a, Value::pair(t, yv));
            }
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Central submonads
  ////////////////////////////////////////////////////////////////////////

  struct CentralityConditions {
    bool                       cond1 = false;  // every leg is a central cone
    bool                       cond2 = false;  // factors through centre, commutative
    std::optional<std::string> witness1;
    std::optional<std::string> witness2;
    Report                     report;

    bool agree() const {
      return cond1 == cond2;
    }
  };

  // s is a graded monad over (a sub-pomonoid of) Z(G) and iota a morphism
  // into m.
  inline CentralityConditions check_centrality_conditions(
      GradedMonadMorphism const& iota,
      Bound const&               bound = {},
      std::size_t                k = 3) {
    auto const& s = iota.source;
    auto const& m = iota.target;
    auto const& phi = iota.phi;

    Report pre = check_graded_monad_morphism(iota, k);
    if (!pre.passed()) {
      throw error(errc::not_a_submonad,
                  "the given map is not a graded monad morphism ("
                      + std::to_string(pre.failure_count())
                      + " failing instances)");
    }
    for (Grade z = 0; z < s.grading.size(); ++z) {
      for (std::size_t n = 0; n <= k; ++n) {
        FinSet x = canonical_set(n);
        FinFn  leg = FinFn::from(s.obj(z, x), m.obj(phi(z), x),
                                 [&](Value const& v) { return iota.iota(z, v); });
        if (!leg.injective()) {
          throw error(errc::not_a_submonad,
                      "component at " + s.grading.name(z) + ", " + x.name()
                          + " is not injective");
        }
      }
    }

    CentralityConditions out;
    out.report = Report("centrality conditions: " + s.name + " -> " + m.name);
    auto& r    = out.report;

    // (1) each (S^z X, iota) is a central cone.
    out.cond1 = true;
    for (Grade z = 0; z < s.grading.size() && out.cond1; ++z) {
      Grade gz = phi(z);
      if (!m.grading.is_central(gz)) {
        out.cond1    = false;
        out.witness1 = "grade " + m.grading.name(gz) + " is not central";
        break;
      }
      for (std::size_t n = 0; n <= k && out.cond1; ++n) {
        FinSet x = canonical_set(n);
        for (auto const& e : s.obj(z, x)) {
          Value t = iota.iota(z, e);
          if (auto w = centrality_witness(m, gz, t, bound)) {
            out.cond1    = false;
            out.witness1 = t.encode() + " at " + m.grading.name(gz)
                           + " against " + w->s.encode() + " at "
                           + m.grading.name(w->b);
            break;
          }
        }
      }
    }
    r.record(out.cond1, {"condition1.central_cones", {}, {},
                         out.witness1.value_or(""), "", "", false,
                         "a leg is not a central cone"});

    // (2) iota factors through the computed centre, and S is commutative.
    bool factors = true;
    for (Grade z = 0; z < s.grading.size() && factors; ++z) {
      Grade gz = phi(z);
      if (!m.grading.is_central(gz)) {
        factors      = false;
        out.witness2 = "grade " + m.grading.name(gz) + " is not central";
        break;
      }
      for (std::size_t n = 0; n <= k && factors; ++n) {
        FinSet      x = canonical_set(n);
        CentralCone centre = graded_centre_at(m, gz, x, bound);
        CentralCone cone{gz, x, s.obj(z, x),
                         FinFn::from(s.obj(z, x), m.obj(gz, x),
                                     [&](Value const& v) {
                                       return iota.iota(z, v);
                                     })};
        if (!factor_through(cone, centre)) {
          factors = false;
          for (auto const& p : cone.apex) {
            if (!centre.apex.contains(cone.leg(p))) {
              out.witness2 = cone.leg(p).encode() + " at "
                             + m.grading.name(gz) + " is outside the centre";
              break;
            }
          }
        }
      }
    }
    auto comm = check_commutative_detailed(s, k);
    bool commutative = comm.report.passed();
    if (factors && !commutative) {
      out.witness2 = "source is not commutative";
    }
    out.cond2 = factors && commutative;
    r.record(factors, {"condition2.factors_through_centre", {}, {},
                       out.witness2.value_or(""), "", "", false,
                       "no factorization through the centre"});
    r.record(commutative, {"condition2.source_commutative", {}, {}, s.name,
                           "", "", false, "source is not commutative"});
    r.record(out.agree(),
             {"theorem.agreement", {}, {},
              "cond1=" + std::string(out.cond1 ? "true" : "false")
                  + " cond2=" + std::string(out.cond2 ? "true" : "false"),
              "", "", false, "THEOREM-VIOLATION: conditions disagree"});
    return out;
  }

}  // namespace gcentre
