#pragma once

// Exhaustive law suites for graded strong monads. Every suite ranges over
// the canonical sets Y0..Yk, all grades (or comparable grade pairs) and all
// elements of the relevant carriers. An instance fails when the two sides
// differ, when a side leaves its carrier, or when evaluation throws.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "graded_monad.hpp"
#include "report.hpp"

namespace gcentre {

  namespace detail {
    struct Outcome {
      Value       lhs;
      Value       rhs;
      std::string problem;  // non-empty: failed regardless of lhs/rhs
    };

    struct Ctx {
      std::string              law;
      std::vector<std::string> grades;
      std::vector<std::size_t> sizes;
    };

    template <class Fn>
    void run_instance(Report& r, Ctx const& c, Value const& witness, Fn&& fn) {
      try {
        Outcome o = fn();
        if (o.problem.empty() && o.lhs == o.rhs) {
          r.pass(c.law);
          return;
        }
        r.fail({c.law, c.grades, c.sizes, witness.encode(), o.lhs.encode(),
                o.rhs.encode(), false,
                o.problem.empty() ? "sides differ" : o.problem});
      } catch (error const& e) {
        r.fail({c.law, c.grades, c.sizes, witness.encode(), "", "", false,
                e.what()});
      }
    }

    inline std::vector<FinSet> canonical_sets(std::size_t k) {
      std::vector<FinSet> out;
      for (std::size_t n = 0; n <= k; ++n) {
        out.push_back(canonical_set(n));
      }
      return out;
    }

    // Empty string when v is in T^a X, otherwise a note.
    inline std::string carrier_note(GradedStrongMonad const& m,
                                    Grade                    a,
                                    FinSet const&            x,
                                    Value const&             v,
                                    char const*              side) {
      if (m.member(a, x, v)) {
        return {};
      }
      return std::string(side) + " not in T^" + m.grade_name(a) + "("
             + x.name() + ")";
    }

    inline std::string both_in(GradedStrongMonad const& m,
                               Grade                    a,
                               FinSet const&            x,
                               Value const&             l,
                               Value const&             r) {
      auto n = carrier_note(m, a, x, l, "lhs");
      return n.empty() ? carrier_note(m, a, x, r, "rhs") : n;
    }

    inline std::vector<std::string> names(GradedStrongMonad const& m,
                                          std::vector<Grade> const& gs) {
      std::vector<std::string> out;
      for (auto g : gs) {
        out.push_back(m.grade_name(g));
      }
      return out;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Monad laws
  ////////////////////////////////////////////////////////////////////////

  inline Report check_monad_laws(GradedStrongMonad const& m, std::size_t k) {
    using detail::Outcome;
    m.require_complete();
    Report      r("monad laws: " + m.name);
    auto const& g = m.grading;
    Grade const i = g.unit();
    for (auto const& x : detail::canonical_sets(k)) {
      std::vector<std::size_t> sz{x.size()};
      for (auto const& v : x) {
        detail::run_instance(r, {"monad.eta_carrier", {g.name(i)}, sz}, v,
                             [&] {
                               Value e = m.eta(v);
                               return Outcome{e, e,
                                              detail::carrier_note(
                                                  m, i, x, e, "eta")};
                             });
      }
      for (Grade a = 0; a < g.size(); ++a) {
        FinSet ta = m.obj(a, x);
        for (auto const& t : ta) {
          detail::run_instance(
              r, {"monad.left_unit", {g.name(a)}, sz}, t, [&] {
                Value l = m.mu(i, a, m.eta(t));
                return Outcome{l, t, detail::carrier_note(m, a, x, l, "lhs")};
              });
          detail::run_instance(
              r, {"monad.right_unit", {g.name(a)}, sz}, t, [&] {
                Value l = m.mu(a, i, m.map(a, m.eta, t));
                return Outcome{l, t, detail::carrier_note(m, a, x, l, "lhs")};
              });
        }
        for (Grade b = 0; b < g.size(); ++b) {
          FinSet tb   = m.obj(b, x);
          FinSet tatb = m.obj(a, tb);
          Grade  ab   = g.mul(a, b);
          for (auto const& v : tatb) {
            detail::run_instance(
                r, {"monad.mu_carrier", {g.name(a), g.name(b)}, sz}, v, [&] {
                  Value l = m.mu(a, b, v);
                  return Outcome{l, l,
                                 detail::carrier_note(m, ab, x, l, "mu")};
                });
          }
          for (Grade c = 0; c < g.size(); ++c) {
            FinSet tbtc   = m.obj(b, m.obj(c, x));
            FinSet tatbtc = m.obj(a, tbtc);
            Grade  abc    = g.mul(ab, c);
            Grade  bc     = g.mul(b, c);
            for (auto const& v : tatbtc) {
              detail::run_instance(
                  r,
                  {"monad.associativity", {g.name(a), g.name(b), g.name(c)},
                   sz},
                  v, [&] {
                    Value l = m.mu(ab, c, m.mu(a, b, v));
                    Value rr =
                        m.mu(a, bc, m.map(a,
                                          [&](Value const& w) {
                                            return m.mu(b, c, w);
                                          },
                                          v));
                    return Outcome{l, rr, detail::both_in(m, abc, x, l, rr)};
                  });
            }
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Order laws
  ////////////////////////////////////////////////////////////////////////

  inline Report check_order_laws(GradedStrongMonad const& m, std::size_t k) {
    using detail::Outcome;
    m.require_complete();
    Report      r("order laws: " + m.name);
    auto const& g     = m.grading;
    auto const  pairs = g.comparable_pairs();
    for (auto const& x : detail::canonical_sets(k)) {
      std::vector<std::size_t> sz{x.size()};
      for (auto [a, a2] : pairs) {
        FinSet ta = m.obj(a, x);
        for (auto const& t : ta) {
          if (a == a2) {
            detail::run_instance(r, {"order.reflexive", {g.name(a)}, sz}, t,
                                 [&] {
                                   return Outcome{m.lift(a, a, t), t, {}};
                                 });
          } else {
            detail::run_instance(
                r, {"order.lift_carrier", {g.name(a), g.name(a2)}, sz}, t,
                [&] {
                  Value l = m.lift(a, a2, t);
                  return Outcome{l, l,
                                 detail::carrier_note(m, a2, x, l, "lift")};
                });
          }
          for (Grade a3 = 0; a3 < g.size(); ++a3) {
            if (!g.leq(a2, a3)) {
              continue;
            }
            detail::run_instance(
                r,
                {"order.transitive", {g.name(a), g.name(a2), g.name(a3)}, sz},
                t, [&] {
                  return Outcome{m.lift(a2, a3, m.lift(a, a2, t)),
                                 m.lift(a, a3, t), {}};
                });
          }
        }
        for (auto [b, b2] : pairs) {
          FinSet tatb = m.obj(a, m.obj(b, x));
          Grade  ab = g.mul(a, b), ab2 = g.mul(a2, b2);
          for (auto const& v : tatb) {
            detail::run_instance(
                r,
                {"order.mu_naturality",
                 {g.name(a), g.name(a2), g.name(b), g.name(b2)},
                 sz},
                v, [&] {
                  Value l = m.lift(ab, ab2, m.mu(a, b, v));
                  Value inner =
                      m.map(a,
                            [&](Value const& w) { return m.lift(b, b2, w); },
                            v);
                  Value rr = m.mu(a2, b2, m.lift(a, a2, inner));
                  return Outcome{l, rr, detail::both_in(m, ab2, x, l, rr)};
                });
          }
        }
      }
    }
    for (auto const& f : canonical_functions(k)) {
      std::vector<std::size_t> sz{f.dom().size(), f.cod().size()};
      ValueMap                 fm = [&f](Value const& v) { return f(v); };
      for (auto [a, a2] : pairs) {
        for (auto const& t : m.obj(a, f.dom())) {
          detail::run_instance(
              r, {"order.lift_naturality", {g.name(a), g.name(a2)}, sz}, t,
              [&] {
                return Outcome{m.lift(a, a2, m.map(a, fm, t)),
                               m.map(a2, fm, m.lift(a, a2, t)), {}};
              });
        }
      }
    }
    r.touch("order.transitive");
    r.touch("order.mu_naturality");
    r.touch("order.lift_naturality");
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strength
  ////////////////////////////////////////////////////////////////////////

  inline Report check_strength_laws(GradedStrongMonad const& m, std::size_t k) {
    using detail::Outcome;
    m.require_complete();
    Report      r("strength laws: " + m.name);
    auto const& g    = m.grading;
    Grade const i    = g.unit();
    auto const  sets = detail::canonical_sets(k);

    for (auto const& y : sets) {
      for (Grade a = 0; a < g.size(); ++a) {
        for (auto const& t : m.obj(a, y)) {
          detail::run_instance(
              r, {"strength.unitor", {g.name(a)}, {y.size()}}, t, [&] {
                Value l = m.map(a, mon::left_unitor,
                                m.strength(a, Value::pair(unit_point(), t)));
                return Outcome{l, t, {}};
              });
        }
      }
    }

    for (auto const& x : sets) {
      for (auto const& y : sets) {
        std::vector<std::size_t> sz{x.size(), y.size()};
        FinSet                   xy = tensor(x, y);
        for (Grade a = 0; a < g.size(); ++a) {
          FinSet ta = m.obj(a, y);
          for (auto const& xv : x) {
            for (auto const& t : ta) {
              Value in = Value::pair(xv, t);
              detail::run_instance(
                  r, {"strength.carrier", {g.name(a)}, sz}, in, [&] {
                    Value l = m.strength(a, in);
                    return Outcome{l, l,
                                   detail::carrier_note(m, a, xy, l, "tau")};
                  });
              for (Grade a2 = 0; a2 < g.size(); ++a2) {
                if (a2 == a || !g.leq(a, a2)) {
                  continue;
                }
                detail::run_instance(
                    r, {"strength.lift", {g.name(a), g.name(a2)}, sz}, in,
                    [&] {
                      return Outcome{
                          m.strength(a2, Value::pair(xv, m.lift(a, a2, t))),
                          m.lift(a, a2, m.strength(a, in)), {}};
                    });
              }
            }
          }
          for (Grade b = 0; b < g.size(); ++b) {
            FinSet tatb = m.obj(a, m.obj(b, y));
            Grade  ab   = g.mul(a, b);
            for (auto const& xv : x) {
              for (auto const& v : tatb) {
                Value in = Value::pair(xv, v);
                detail::run_instance(
                    r, {"strength.mu", {g.name(a), g.name(b)}, sz}, in, [&] {
                      Value l = m.strength(ab, Value::pair(xv, m.mu(a, b, v)));
                      Value rr = m.mu(
                          a, b,
                          m.map(a,
                                [&](Value const& w) {
                                  return m.strength(b, w);
                                },
                                m.strength(a, in)));
                      return Outcome{l, rr, {}};
                    });
              }
            }
          }
        }
        for (auto const& xv : x) {
          for (auto const& yv : y) {
            Value in = Value::pair(xv, yv);
            detail::run_instance(
                r, {"strength.eta", {g.name(i)}, sz}, in, [&] {
                  return Outcome{m.strength(i, Value::pair(xv, m.eta(yv))),
                                 m.eta(in), {}};
                });
          }
        }
        for (auto const& z : sets) {
          std::vector<std::size_t> sz3{x.size(), y.size(), z.size()};
          for (Grade a = 0; a < g.size(); ++a) {
            FinSet ta = m.obj(a, z);
            for (auto const& xv : x) {
              for (auto const& yv : y) {
                for (auto const& t : ta) {
                  Value in = Value::pair(Value::pair(xv, yv), t);
                  detail::run_instance(
                      r, {"strength.associator", {g.name(a)}, sz3}, in, [&] {
                        Value l  = m.map(a, mon::assoc, m.strength(a, in));
                        Value rr = m.strength(
                            a, Value::pair(
                                   xv, m.strength(a, Value::pair(yv, t))));
                        return Outcome{l, rr, {}};
                      });
                }
              }
            }
          }
        }
      }
    }

    // Naturality in each argument separately.
    auto const fns = canonical_functions(k);
    for (auto const& f : fns) {
      for (auto const& other : sets) {
        std::vector<std::size_t> sz{f.dom().size(), f.cod().size(),
                                    other.size()};
        for (Grade a = 0; a < g.size(); ++a) {
          FinSet ta = m.obj(a, other);
          for (auto const& xv : f.dom()) {
            for (auto const& t : ta) {
              Value in = Value::pair(xv, t);
              detail::run_instance(
                  r, {"strength.naturality_left", {g.name(a)}, sz}, in, [&] {
                    Value l = m.strength(a, Value::pair(f(xv), t));
                    Value rr =
                        m.map(a,
                              [&](Value const& p) {
                                return Value::pair(f(p.first()), p.second());
                              },
                              m.strength(a, in));
                    return Outcome{l, rr, {}};
                  });
            }
          }
          FinSet tf = m.obj(a, f.dom());
          for (auto const& xv : other) {
            for (auto const& t : tf) {
              Value in = Value::pair(xv, t);
              detail::run_instance(
                  r, {"strength.naturality_right", {g.name(a)}, sz}, in, [&] {
                    Value l = m.strength(
                        a, Value::pair(xv, m.map(a,
                                                 [&](Value const& v) {
                                                   return f(v);
                                                 },
                                                 t)));
                    Value rr =
                        m.map(a,
                              [&](Value const& p) {
                                return Value::pair(p.first(), f(p.second()));
                              },
                              m.strength(a, in));
                    return Outcome{l, rr, {}};
                  });
            }
          }
        }
      }
    }
    r.touch("strength.lift");
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Costrength coherence
  ////////////////////////////////////////////////////////////////////////

  inline Report check_costrength_coherence(GradedStrongMonad const& m,
                                           std::size_t              k) {
    using detail::Outcome;
    m.require_complete();
    Report      r("costrength coherence: " + m.name);
    auto const& g    = m.grading;
    Grade const i    = g.unit();
    auto const  sets = detail::canonical_sets(k);

    for (auto const& x : sets) {
      for (Grade a = 0; a < g.size(); ++a) {
        for (auto const& t : m.obj(a, x)) {
          detail::run_instance(
              r, {"costrength.unitor", {g.name(a)}, {x.size()}}, t, [&] {
                Value l = m.map(a, mon::right_unitor,
                                m.costr(a, Value::pair(t, unit_point())));
                return Outcome{l, t, {}};
              });
        }
      }
    }

    for (auto const& x : sets) {
      for (auto const& y : sets) {
        std::vector<std::size_t> sz{x.size(), y.size()};
        FinSet                   xy = tensor(x, y);
        for (auto const& xv : x) {
          for (auto const& yv : y) {
            Value in = Value::pair(xv, yv);
            detail::run_instance(
                r, {"costrength.eta", {g.name(i)}, sz}, in, [&] {
                  return Outcome{m.costr(i, Value::pair(m.eta(xv), yv)),
                                 m.eta(in), {}};
                });
          }
        }
        for (Grade a = 0; a < g.size(); ++a) {
          FinSet ta = m.obj(a, x);
          for (auto const& t : ta) {
            for (auto const& yv : y) {
              Value in = Value::pair(t, yv);
              detail::run_instance(
                  r, {"costrength.carrier", {g.name(a)}, sz}, in, [&] {
                    Value l = m.costr(a, in);
                    return Outcome{l, l,
                                   detail::carrier_note(m, a, xy, l, "tau'")};
                  });
              for (Grade a2 = 0; a2 < g.size(); ++a2) {
                if (a2 == a || !g.leq(a, a2)) {
                  continue;
                }
                detail::run_instance(
                    r, {"costrength.lift", {g.name(a), g.name(a2)}, sz}, in,
                    [&] {
                      return Outcome{
                          m.costr(a2, Value::pair(m.lift(a, a2, t), yv)),
                          m.lift(a, a2, m.costr(a, in)), {}};
                    });
              }
            }
          }
          for (Grade b = 0; b < g.size(); ++b) {
            FinSet tatb = m.obj(a, m.obj(b, x));
            Grade  ab   = g.mul(a, b);
            for (auto const& v : tatb) {
              for (auto const& yv : y) {
                Value in = Value::pair(v, yv);
                detail::run_instance(
                    r, {"costrength.mu", {g.name(a), g.name(b)}, sz}, in,
                    [&] {
                      Value l  = m.costr(ab, Value::pair(m.mu(a, b, v), yv));
                      Value rr = m.mu(
                          a, b,
                          m.map(a,
                                [&](Value const& w) { return m.costr(b, w); },
                                m.costr(a, in)));
                      return Outcome{l, rr, {}};
                    });
              }
            }
          }
        }
        for (auto const& z : sets) {
          std::vector<std::size_t> sz3{x.size(), y.size(), z.size()};
          for (Grade a = 0; a < g.size(); ++a) {
            FinSet ta = m.obj(a, x);
            for (auto const& t : ta) {
              for (auto const& yv : y) {
                for (auto const& zv : z) {
                  Value in = Value::pair(t, Value::pair(yv, zv));
                  detail::run_instance(
                      r, {"costrength.associator", {g.name(a)}, sz3}, in,
                      [&] {
                        Value l = m.costr(
                            a, Value::pair(m.costr(a, Value::pair(t, yv)), zv));
                        Value rr = m.map(a, mon::assoc_inv, m.costr(a, in));
                        return Outcome{l, rr, {}};
                      });
                }
              }
            }
            // For A := (W * T X) * Y, the sizes being (|W|, |X|, |Y|).
            FinSet tx = m.obj(a, y);
            for (auto const& wv : x) {
              for (auto const& t : tx) {
                for (auto const& zv : z) {
                  Value in = Value::pair(Value::pair(wv, t), zv);
                  detail::run_instance(
                      r, {"costrength.interchange", {g.name(a)}, sz3}, in,
                      [&] {
                        Value l = m.costr(
                            a, Value::pair(m.strength(a, Value::pair(wv, t)),
                                           zv));
                        Value rr = m.map(
                            a, mon::assoc_inv,
                            m.strength(
                                a,
                                Value::pair(
                                    wv, m.costr(a, Value::pair(t, zv)))));
                        return Outcome{l, rr, {}};
                      });
                }
              }
            }
          }
        }
      }
    }

    auto const fns = canonical_functions(k);
    for (auto const& f : fns) {
      ValueMap fm = [&f](Value const& v) { return f(v); };
      for (auto const& other : sets) {
        std::vector<std::size_t> sz{f.dom().size(), f.cod().size(),
                                    other.size()};
        for (Grade a = 0; a < g.size(); ++a) {
          for (auto const& t : m.obj(a, f.dom())) {
            for (auto const& yv : other) {
              Value in = Value::pair(t, yv);
              detail::run_instance(
                  r, {"costrength.naturality_left", {g.name(a)}, sz}, in,
                  [&] {
                    Value l = m.costr(a, Value::pair(m.map(a, fm, t), yv));
                    Value rr =
                        m.map(a,
                              [&](Value const& p) {
                                return Value::pair(f(p.first()), p.second());
                              },
                              m.costr(a, in));
                    return Outcome{l, rr, {}};
                  });
            }
          }
          for (auto const& t : m.obj(a, other)) {
            for (auto const& yv : f.dom()) {
              Value in = Value::pair(t, yv);
              detail::run_instance(
                  r, {"costrength.naturality_right", {g.name(a)}, sz}, in,
                  [&] {
                    Value l  = m.costr(a, Value::pair(t, f(yv)));
                    Value rr = m.map(a,
                                     [&](Value const& p) {
                                       return Value::pair(p.first(),
                                                          f(p.second()));
                                     },
                                     m.costr(a, in));
                    return Outcome{l, rr, {}};
                  });
            }
          }
        }
      }
    }
    r.touch("costrength.lift");
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Naturality of eta and mu, closure of carriers under T^a f
  ////////////////////////////////////////////////////////////////////////

  inline Report check_naturality(GradedStrongMonad const& m, std::size_t k) {
    using detail::Outcome;
    m.require_complete();
    Report      r("naturality: " + m.name);
    auto const& g = m.grading;
    Grade const i = g.unit();
    for (auto const& f : canonical_functions(k)) {
      std::vector<std::size_t> sz{f.dom().size(), f.cod().size()};
      ValueMap                 fm = [&f](Value const& v) { return f(v); };
      for (auto const& xv : f.dom()) {
        detail::run_instance(r, {"naturality.eta", {g.name(i)}, sz}, xv, [&] {
          return Outcome{m.eta(f(xv)), m.map(i, fm, m.eta(xv)), {}};
        });
      }
      for (Grade a = 0; a < g.size(); ++a) {
        for (auto const& t : m.obj(a, f.dom())) {
          detail::run_instance(
              r, {"naturality.carrier", {g.name(a)}, sz}, t, [&] {
                Value l = m.map(a, fm, t);
                return Outcome{l, l,
                               detail::carrier_note(m, a, f.cod(), l, "T f")};
              });
        }
        for (Grade b = 0; b < g.size(); ++b) {
          Grade ab = g.mul(a, b);
          for (auto const& v : m.obj(a, m.obj(b, f.dom()))) {
            detail::run_instance(
                r, {"naturality.mu", {g.name(a), g.name(b)}, sz}, v, [&] {
                  Value l = m.mu(
                      a, b,
                      m.map(a, [&](Value const& w) { return m.map(b, fm, w); },
                            v));
                  return Outcome{l, m.map(ab, fm, m.mu(a, b, v)), {}};
                });
          }
        }
      }
    }
    return r;
  }

  inline Report check_all_laws(GradedStrongMonad const& m, std::size_t k) {
    Report r("all laws: " + m.name);
    r.merge(check_monad_laws(m, k));
    r.merge(check_order_laws(m, k));
    r.merge(check_strength_laws(m, k));
    r.merge(check_costrength_coherence(m, k));
    r.merge(check_naturality(m, k));
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commutativity
  ////////////////////////////////////////////////////////////////////////

  struct PairVerdict {
    Grade a              = 0;
    Grade b              = 0;
    bool  carriers_equal = true;
    bool  values_equal   = true;

    bool passed() const {
      return carriers_equal && values_equal;
    }
  };

  // Tests one grade pair; instances are appended to r.
  inline PairVerdict check_commutative_pair(GradedStrongMonad const& m,
                                            Grade                    a,
                                            Grade                    b,
                                            std::size_t              k,
                                            Report&                  r) {
    using detail::Outcome;
    auto const& g = m.grading;
    PairVerdict pv{a, b, true, true};
    Grade const ab = g.mul(a, b), ba = g.mul(b, a);
    auto const  sets = detail::canonical_sets(k);
    std::vector<std::string> gn{g.name(a), g.name(b)};
    for (auto const& x : sets) {
      for (auto const& y : sets) {
        std::vector<std::size_t> sz{x.size(), y.size()};
        FinSet                   xy = tensor(x, y);
        if (ab != ba) {
          FinSet l = m.obj(ab, xy), rr = m.obj(ba, xy);
          if (!(l == rr)) {
            pv.carriers_equal = false;
            r.fail({"commutative", gn, sz, "T^" + g.name(ab) + " vs T^"
                                               + g.name(ba),
                    l.describe(), rr.describe(), false, "carrier mismatch"});
            continue;
          }
        }
        FinSet ta = m.obj(a, x), tb = m.obj(b, y);
        for (auto const& t : ta) {
          for (auto const& s : tb) {
            Value in     = Value::pair(t, s);
            auto  before = r.failure_count();
            detail::run_instance(r, {"commutative", gn, sz}, in, [&] {
              Value l  = left_first(m, a, b, t, s);
              Value rr = right_first(m, a, b, t, s);
              return Outcome{l, rr, {}};
            });
            if (r.failure_count() != before) {
              pv.values_equal = false;
            }
          }
        }
      }
    }
    return pv;
  }

  inline PairVerdict check_commutative_pair(GradedStrongMonad const& m,
                                            Grade                    a,
                                            Grade                    b,
                                            std::size_t              k) {
    Report scratch("pair", 0);
    return check_commutative_pair(m, a, b, k, scratch);
  }

  struct CommutativeResult {
    Report                   report;
    std::vector<PairVerdict> pairs;

    std::vector<PairVerdict> failing() const {
      std::vector<PairVerdict> out;
      for (auto const& p : pairs) {
        if (!p.passed()) {
          out.push_back(p);
        }
      }
      return out;
    }
  };

  inline CommutativeResult check_commutative_detailed(
      GradedStrongMonad const& m,
      std::size_t              k) {
    m.require_complete();
    CommutativeResult out{Report("commutative: " + m.name), {}};
    out.report.touch("commutative");
    for (Grade a = 0; a < m.grading.size(); ++a) {
      for (Grade b = 0; b < m.grading.size(); ++b) {
        out.pairs.push_back(check_commutative_pair(m, a, b, k, out.report));
      }
    }
    return out;
  }

  inline Report check_commutative(GradedStrongMonad const& m, std::size_t k) {
    return check_commutative_detailed(m, k).report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms of graded strong monads
  ////////////////////////////////////////////////////////////////////////

  inline Report check_graded_monad_morphism(GradedMonadMorphism const& mm,
                                            std::size_t                k) {
    using detail::Outcome;
    auto const& t   = mm.source;
    auto const& p   = mm.target;
    auto const& phi = mm.phi;
    t.require_complete();
    p.require_complete();
    if (!mm.iota) {
      throw error(errc::component_missing, "iota");
    }
    auto const& g  = t.grading;
    auto const& h  = p.grading;
    Report      r("graded monad morphism: " + t.name + " -> " + p.name);
    r.merge(check_pomonoid_morphism(phi));

    // lift^P(c <= d) or a failure note.
    auto plift = [&](Grade c, Grade d, Value const& v) -> Value {
      if (!h.leq(c, d)) {
        throw error(errc::shape_mismatch,
                    h.name(c) + " is not below " + h.name(d) + " in "
                        + p.name);
      }
      return c == d ? v : p.lift(c, d, v);
    };
    auto iota = [&](Grade a, Value const& v) { return mm.iota(a, v); };

    Grade const i  = g.unit();
    Grade const pi = phi(i);
    for (auto const& x : detail::canonical_sets(k)) {
      std::vector<std::size_t> sz{x.size()};
      for (auto const& xv : x) {
        detail::run_instance(r, {"morphism.eta", {g.name(i)}, sz}, xv, [&] {
          return Outcome{iota(i, t.eta(xv)), plift(h.unit(), pi, p.eta(xv)),
                         {}};
        });
      }
      for (Grade a = 0; a < g.size(); ++a) {
        for (auto const& e : t.obj(a, x)) {
          detail::run_instance(
              r, {"morphism.carrier", {g.name(a)}, sz}, e, [&] {
                Value l = iota(a, e);
                return Outcome{l, l,
                               detail::carrier_note(p, phi(a), x, l, "iota")};
              });
          for (Grade a2 = 0; a2 < g.size(); ++a2) {
            if (a2 == a || !g.leq(a, a2)) {
              continue;
            }
            detail::run_instance(
                r, {"morphism.lift", {g.name(a), g.name(a2)}, sz}, e, [&] {
                  return Outcome{iota(a2, t.lift(a, a2, e)),
                                 plift(phi(a), phi(a2), iota(a, e)), {}};
                });
          }
        }
        for (Grade b = 0; b < g.size(); ++b) {
          Grade ab = g.mul(a, b);
          for (auto const& v : t.obj(a, t.obj(b, x))) {
            detail::run_instance(
                r, {"morphism.mu", {g.name(a), g.name(b)}, sz}, v, [&] {
                  Value l = iota(ab, t.mu(a, b, v));
                  Value inner =
                      t.map(a, [&](Value const& w) { return iota(b, w); }, v);
                  Value rr = plift(h.mul(phi(a), phi(b)), phi(ab),
                                   p.mu(phi(a), phi(b), iota(a, inner)));
                  return Outcome{l, rr, {}};
                });
          }
        }
      }
    }
    auto const sets = detail::canonical_sets(k);
    for (auto const& x : sets) {
      for (auto const& y : sets) {
        std::vector<std::size_t> sz{x.size(), y.size()};
        for (Grade a = 0; a < g.size(); ++a) {
          for (auto const& e : t.obj(a, y)) {
            for (auto const& xv : x) {
              Value in = Value::pair(xv, e);
              detail::run_instance(
                  r, {"morphism.tau", {g.name(a)}, sz}, in, [&] {
                    return Outcome{iota(a, t.strength(a, in)),
                                   p.strength(phi(a),
                                              Value::pair(xv, iota(a, e))),
                                   {}};
                  });
            }
          }
        }
      }
    }
    for (auto const& f : canonical_functions(k)) {
      std::vector<std::size_t> sz{f.dom().size(), f.cod().size()};
      ValueMap                 fm = [&f](Value const& v) { return f(v); };
      for (Grade a = 0; a < g.size(); ++a) {
        for (auto const& e : t.obj(a, f.dom())) {
          detail::run_instance(
              r, {"morphism.naturality", {g.name(a)}, sz}, e, [&] {
                return Outcome{iota(a, t.map(a, fm, e)),
                               p.map(phi(a), fm, iota(a, e)), {}};
              });
        }
      }
    }
    r.touch("morphism.lift");
    return r;
  }

}  // namespace gcentre
