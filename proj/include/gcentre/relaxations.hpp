#pragma once

// Relaxed commutativity: bimonoidal centres, duoidal gradations with a
// monoidal map m, the capped-language writer monad, and the monoidal map
// carried by a commutative graded monad.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "centre.hpp"
#include "error.hpp"
#include "finset.hpp"
#include "graded_monad.hpp"
#include "language.hpp"
#include "laws.hpp"
#include "pomonoid.hpp"
#include "report.hpp"

namespace gcentre {

  ////////////////////////////////////////////////////////////////////////
  // Bimonoidal centre
  ////////////////////////////////////////////////////////////////////////

  // t in T^a X is kept when, for all b, Y and s in T^b Y,
  //   lift(a*b <= a(op2)b)(L(t,s)) = lift(b*a <= b(op2)a)(R(t,s)).
  inline CentralCone bimonoidal_centre_at(GradedStrongMonad const& m,
                                          Bimonoid const&          bm,
                                          Grade                    a,
                                          FinSet const&            x,
                                          Bound const&             bound = {}) {
    auto const& g = m.grading;
    if (!(bm.base == g)) {
      throw error(errc::bimonoid_mismatch,
                  "bimonoid base differs from the grading of " + m.name);
    }
    auto up = [&](Grade from, Grade to, Value const& v) {
      if (from == to) {
        return v;
      }
      if (!g.leq(from, to)) {
        throw error(errc::bimonoid_mismatch,
                    g.name(from) + " is not below " + g.name(to));
      }
      return m.lift(from, to, v);
    };
    FinSet             carrier = m.obj(a, x);
    std::vector<Value> keep;
    for (auto const& t : carrier) {
      bool ok = true;
      for (Grade b = 0; b < g.size() && ok; ++b) {
        Grade const top = bm.op2(a, b);
        if (bm.op2(b, a) != top) {
          throw error(errc::bimonoid_mismatch, "second product not commutative");
        }
        for (std::size_t n = 0; n <= bound.at(m, b) && ok; ++n) {
          for (auto const& s : m.obj(b, canonical_set(n))) {
            Value l = up(g.mul(a, b), top, left_first(m, a, b, t, s));
            Value r = up(g.mul(b, a), top, right_first(m, a, b, t, s));
            if (!(l == r)) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) {
        keep.push_back(t);
      }
    }
    FinSet apex("Zb^" + g.name(a) + "(" + x.name() + ")", std::move(keep));
    FinFn  leg(apex, carrier, apex.elements());
    return {a, x, std::move(apex), std::move(leg)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Duoidal gradations
  ////////////////////////////////////////////////////////////////////////

  // m(a, b, t, s) : T^a X * T^b Y -> T^(a|b)(X*Y)
  using MonoidalFn =
      std::function<Value(Grade, Grade, Value const&, Value const&)>;

  struct DuoidalGradedMonad {
    GradedStrongMonad                 monad;
    std::function<Grade(Grade, Grade)> par;
    Grade                             unit2 = 0;
    MonoidalFn                        m;
  };

  struct DuoidalOptions {
    std::size_t   max_set_size = 2;
    std::size_t   exhaustive_up_to = 6;  // all grade tuples when |G| <= this
    std::size_t   exhaustive_budget = 10000;  // or when |G|^n <= this
    std::size_t   samples = 200;         // otherwise this many per family
    std::uint32_t seed = 20240611;
  };

  namespace detail {
    // All n-tuples of grades, or a fixed-seed sample of them.
    inline std::vector<std::vector<Grade>> grade_tuples(
        std::size_t           g,
        std::size_t           n,
        DuoidalOptions const& opt) {
      std::vector<std::vector<Grade>> out;
      std::size_t                     total = 1;
      for (std::size_t i = 0; i < n && total <= opt.exhaustive_budget; ++i) {
        total *= g;
      }
      if (g <= opt.exhaustive_up_to || total <= opt.exhaustive_budget) {
        std::vector<Grade> cur(n, 0);
        while (true) {
          out.push_back(cur);
          std::size_t i = 0;
          for (; i < n; ++i) {
            if (++cur[i] < g) {
              break;
            }
            cur[i] = 0;
          }
          if (i == n) {
            break;
          }
        }
        return out;
      }
      std::mt19937                         rng(opt.seed + n);
      std::uniform_int_distribution<Grade> pick(0, g - 1);
      for (std::size_t k = 0; k < opt.samples; ++k) {
        std::vector<Grade> cur(n);
        for (auto& c : cur) {
          c = pick(rng);
        }
        out.push_back(std::move(cur));
      }
      return out;
    }

    // Moves v from T^from Z to T^to Z: identity, order lift, or (when the
    // grades are incomparable) identity provided the two carriers coincide.
    inline Value transport(GradedStrongMonad const& m,
                           Grade                    from,
                           Grade                    to,
                           FinSet const&            z,
                           Value const&             v) {
      if (from == to) {
        return v;
      }
      if (m.grading.leq(from, to)) {
        return m.lift(from, to, v);
      }
      if (m.obj(from, z) == m.obj(to, z)) {
        return v;
      }
      throw error(errc::shape_mismatch,
                  "carrier mismatch between T^" + m.grading.name(from)
                      + " and T^" + m.grading.name(to) + " at " + z.name());
    }
  }  // namespace detail

  inline Report check_duoidal_gradation(DuoidalGradedMonad const& dm,
                                        DuoidalOptions const&     opt = {}) {
    using detail::Outcome;
    auto const& t = dm.monad;
    t.require_complete();
    if (!dm.par || !dm.m) {
      throw error(errc::component_missing, "par / m");
    }
    auto const& g    = t.grading;
    auto const  sets = detail::canonical_sets(opt.max_set_size);
    auto        nm   = [&](std::vector<Grade> const& gs) {
      return detail::names(t, gs);
    };
    Report r("duoidal gradation: " + t.name);
    Grade const i = g.unit();

    // Main diagram: transport_delta . mu . T m . m  =  m . (mu * mu)
    for (auto const& q : detail::grade_tuples(g.size(), 4, opt)) {
      Grade a = q[0], b = q[1], c = q[2], d = q[3];
      Grade top = g.mul(dm.par(a, c), dm.par(b, d));
      Grade bot = dm.par(g.mul(a, b), g.mul(c, d));
      for (auto const& x : sets) {
        FinSet u_set = t.obj(a, t.obj(b, x));
        for (auto const& y : sets) {
          FinSet xy    = tensor(x, y);
          FinSet v_set = t.obj(c, t.obj(d, y));
          for (auto const& u : u_set) {
            for (auto const& v : v_set) {
              detail::run_instance(
                  r, {"duoidal.interchange", nm(q), {x.size(), y.size()}},
                  Value::pair(u, v), [&] {
                    Value outer = dm.m(a, c, u, v);
                    Value inner = t.map(dm.par(a, c),
                                        [&](Value const& p) {
                                          return dm.m(b, d, p.first(),
                                                      p.second());
                                        },
                                        outer);
                    Value l = detail::transport(
                        t, top, bot, xy,
                        t.mu(dm.par(a, c), dm.par(b, d), inner));
                    Value rr = dm.m(g.mul(a, b), g.mul(c, d), t.mu(a, b, u),
                                    t.mu(c, d, v));
                    return Outcome{l, rr, detail::both_in(t, bot, xy, l, rr)};
                  });
            }
          }
        }
      }
    }

    // (eta * eta); m = eta
    Grade const ii = dm.par(i, i);
    for (auto const& x : sets) {
      for (auto const& y : sets) {
        FinSet xy = tensor(x, y);
        for (auto const& xv : x) {
          for (auto const& yv : y) {
            Value in = Value::pair(xv, yv);
            detail::run_instance(
                r, {"duoidal.unit", nm({i}), {x.size(), y.size()}}, in, [&] {
                  return Outcome{dm.m(i, i, t.eta(xv), t.eta(yv)),
                                 detail::transport(t, i, ii, xy, t.eta(in)),
                                 {}};
                });
          }
        }
      }
    }

    // Unitors and membership of m.
    for (Grade a = 0; a < g.size(); ++a) {
      Grade const ia = dm.par(i, a), ai = dm.par(a, i);
      for (auto const& x : sets) {
        for (auto const& tv : t.obj(a, x)) {
          detail::run_instance(
              r, {"duoidal.left_unitor", nm({a}), {x.size()}}, tv, [&] {
                Value l = t.map(ia, mon::left_unitor,
                                dm.m(i, a, t.eta(unit_point()), tv));
                return Outcome{l, detail::transport(t, a, ia, x, tv), {}};
              });
          detail::run_instance(
              r, {"duoidal.right_unitor", nm({a}), {x.size()}}, tv, [&] {
                Value l = t.map(ai, mon::right_unitor,
                                dm.m(a, i, tv, t.eta(unit_point())));
                return Outcome{l, detail::transport(t, a, ai, x, tv), {}};
              });
        }
      }
    }

    // Associativity with alpha, and carrier membership of m.
    for (auto const& tr : detail::grade_tuples(g.size(), 3, opt)) {
      Grade a = tr[0], b = tr[1], c = tr[2];
      Grade ab_c = dm.par(dm.par(a, b), c);
      Grade a_bc = dm.par(a, dm.par(b, c));
      for (auto const& x : sets) {
        for (auto const& y : sets) {
          for (auto const& z : sets) {
            FinSet x_yz = tensor(x, tensor(y, z));
            FinSet ta = t.obj(a, x), tb = t.obj(b, y), tc = t.obj(c, z);
            for (auto const& p : ta) {
              for (auto const& q : tb) {
                for (auto const& s : tc) {
                  Value in = Value::pair(Value::pair(p, q), s);
                  detail::run_instance(
                      r,
                      {"duoidal.associator", nm(tr),
                       {x.size(), y.size(), z.size()}},
                      in, [&] {
                        Value l = t.map(ab_c, mon::assoc,
                                        dm.m(dm.par(a, b), c,
                                             dm.m(a, b, p, q), s));
                        Value rr = detail::transport(
                            t, a_bc, ab_c, x_yz,
                            dm.m(a, dm.par(b, c), p, dm.m(b, c, q, s)));
                        return Outcome{l, rr, {}};
                      });
                }
              }
            }
          }
        }
      }
    }

    for (Grade a = 0; a < g.size(); ++a) {
      for (Grade b = 0; b < g.size(); ++b) {
        Grade ab = dm.par(a, b);
        for (auto const& x : sets) {
          for (auto const& y : sets) {
            FinSet xy = tensor(x, y);
            FinSet ta = t.obj(a, x), tb = t.obj(b, y);
            for (auto const& p : ta) {
              for (auto const& q : tb) {
                Value in = Value::pair(p, q);
                detail::run_instance(
                    r, {"duoidal.carrier", nm({a, b}), {x.size(), y.size()}},
                    in, [&] {
                      Value l = dm.m(a, b, p, q);
                      return Outcome{l, l,
                                     detail::carrier_note(t, ab, xy, l, "m")};
                    });
                // Naturality in the grades: lifts on either side.
                for (Grade a2 = 0; a2 < g.size(); ++a2) {
                  if (a2 == a || !g.leq(a, a2)) {
                    continue;
                  }
                  detail::run_instance(
                      r,
                      {"duoidal.grade_naturality", nm({a, a2, b}),
                       {x.size(), y.size()}},
                      in, [&] {
                        return Outcome{
                            dm.m(a2, b, t.lift(a, a2, p), q),
                            detail::transport(t, ab, dm.par(a2, b), xy,
                                              dm.m(a, b, p, q)),
                            {}};
                      });
                }
              }
            }
          }
        }
      }
    }
    r.touch("duoidal.grade_naturality");

    // Naturality in X and Y.
    for (auto const& f : canonical_functions(opt.max_set_size)) {
      ValueMap fm = [&f](Value const& v) { return f(v); };
      for (auto const& y : sets) {
        for (Grade a = 0; a < g.size(); ++a) {
          for (Grade b = 0; b < g.size(); ++b) {
            Grade ab = dm.par(a, b);
            for (auto const& p : t.obj(a, f.dom())) {
              for (auto const& q : t.obj(b, y)) {
                detail::run_instance(
                    r,
                    {"duoidal.naturality", nm({a, b}),
                     {f.dom().size(), f.cod().size(), y.size()}},
                    Value::pair(p, q), [&] {
                      Value l  = dm.m(a, b, t.map(a, fm, p), q);
                      Value rr = t.map(ab,
                                       [&](Value const& w) {
                                         return Value::pair(f(w.first()),
                                                            w.second());
                                       },
                                       dm.m(a, b, p, q));
                      Value l2  = dm.m(b, a, q, t.map(a, fm, p));
                      Value rr2 = t.map(dm.par(b, a),
                                        [&](Value const& w) {
                                          return Value::pair(w.first(),
                                                             f(w.second()));
                                        },
                                        dm.m(b, a, q, p));
                      if (!(l == rr)) {
                        return Outcome{l, rr, {}};
                      }
                      return Outcome{l2, rr2, {}};
                    });
              }
            }
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Language writer
  ////////////////////////////////////////////////////////////////////////

  // T^L X = { (x, L') | L' a sublanguage of L },  eta(x) = (x, {ε}),
  // mu((x, L_in), L_out) = (x, L_out * L_in), the outer (earlier) label
  // written first so the result lies in T^(a*b),
  // lifts are inclusions, m((x,L),(y,L')) = ((x,y), L | L').
  inline DuoidalGradedMonad build_language_writer(LanguageDuoid const& ld) {
    auto info = std::make_shared<LanguageDuoid const>(ld);
    auto const& duo = info->duoid;

    GradedStrongMonad t;
    t.name    = "language_writer(" + ld.alphabet + ","
             + std::to_string(ld.cap) + ")";
    t.grading = duo.base;
    for (Grade g = 0; g < duo.base.size(); ++g) {
      std::vector<Value> labels;
      for (auto const& l : info->language(g).subsets()) {
        labels.push_back(Value::atom(l.literal()));
      }
      t.carriers.push_back(
          {FunctorExpr::prod(FunctorExpr::identity(),
                             FunctorExpr::constant(FinSet(
                                 "sub" + info->language(g).literal(),
                                 std::move(labels)))),
           {}});
    }
    auto lang = [info](Value const& c) {
      return CappedLanguage::parse(c.token(), info->alphabet, info->cap);
    };
    std::string const eps =
        CappedLanguage::epsilon(ld.alphabet, ld.cap).literal();
    t.eta = [eps](Value const& x) {
      return Value::pair(Value::id(x), Value::cnst(eps));
    };
    t.mu = [lang](Grade, Grade, Value const& v) {
      Value const& inner = v.first().child();
      CappedLanguage l =
          language_concat(lang(v.second()), lang(inner.second()));
      return Value::pair(inner.first(), Value::cnst(l.literal()));
    };
    t.lift = [](Grade, Grade, Value const& v) { return v; };

    DuoidalGradedMonad dm;
    dm.monad = std::move(t);
    dm.par   = [info](Grade a, Grade b) { return info->duoid.par(a, b); };
    dm.unit2 = duo.unit2;
    dm.m     = [lang](Grade, Grade, Value const& p, Value const& q) {
      CappedLanguage l = language_shuffle(lang(p.second()), lang(q.second()));
      return Value::pair(Value::id(Value::pair(p.first().child(),
                                               q.first().child())),
                         Value::cnst(l.literal()));
    };
    return dm;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoidal map of a commutative graded monad
  ////////////////////////////////////////////////////////////////////////

  struct DerivedMonoidal {
    DuoidalGradedMonad structure;
    Report             report;
  };

  // m(a,b) := mu . T^a tau . tau', with | taken to be *.
  inline DerivedMonoidal derive_monoidal_m(GradedStrongMonad const& m,
                                           std::size_t              k = 3,
                                           DuoidalOptions           opt = {}) {
    auto comm = check_commutative(m, k);
    if (!comm.passed()) {
      throw error(errc::not_commutative,
                  m.name + " fails commutativity on "
                      + std::to_string(comm.failure_count()) + " instances");
    }
    auto self = std::make_shared<GradedStrongMonad const>(m);
    DuoidalGradedMonad dm;
    dm.monad = m;
    dm.par   = [self](Grade a, Grade b) { return self->grading.mul(a, b); };
    dm.unit2 = m.grading.unit();
    dm.m     = [self](Grade a, Grade b, Value const& t, Value const& s) {
      return left_first(*self, a, b, t, s);
    };
    opt.max_set_size = std::min(opt.max_set_size, k);
    Report r = check_duoidal_gradation(dm, opt);
    return {std::move(dm), std::move(r)};
  }

}  // namespace gcentre
