#pragma once

// Polynomial endofunctors on finite sets:  F ::= Id | Const(C) | F×F | F+F

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "value.hpp"

namespace gcentre {

  using ValueMap = std::function<Value(Value const&)>;

  class FunctorExpr {
   public:
    enum class Kind : unsigned char { id, cnst, prod, sum };

    static FunctorExpr identity() {
      return FunctorExpr(Kind::id, {}, {});
    }
    static FunctorExpr constant(FinSet c) {
      for (auto const& v : c) {
        if (!v.is(Value::Kind::atom)) {
          throw error(errc::shape_mismatch,
                      "constant functor needs atomic tokens, got "
                          + v.encode());
        }
      }
      return FunctorExpr(Kind::cnst, std::move(c), {});
    }
    static FunctorExpr prod(FunctorExpr l, FunctorExpr r) {
      return FunctorExpr(Kind::prod, {}, {std::move(l), std::move(r)});
    }
    static FunctorExpr sum(FunctorExpr l, FunctorExpr r) {
      return FunctorExpr(Kind::sum, {}, {std::move(l), std::move(r)});
    }

    Kind kind() const noexcept {
      return _node->kind;
    }
    FinSet const& constants() const noexcept {
      return _node->consts;
    }
    FunctorExpr const& left() const {
      return _node->kids.at(0);
    }
    FunctorExpr const& right() const {
      return _node->kids.at(1);
    }

    // Maximum number of Id slots in one element.
    std::size_t degree() const {
      switch (kind()) {
        case Kind::id: return 1;
        case Kind::cnst: return 0;
        case Kind::prod: return left().degree() + right().degree();
        case Kind::sum: return std::max(left().degree(), right().degree());
      }
      return 0;
    }

    std::string describe() const {
      switch (kind()) {
        case Kind::id: return "Id";
        case Kind::cnst: return "Const" + constants().describe();
        case Kind::prod:
          return "Prod(" + left().describe() + "," + right().describe() + ")";
        case Kind::sum:
          return "Sum(" + left().describe() + "," + right().describe() + ")";
      }
      return "?";
    }

   private:
    struct Node {
      Kind                     kind;
      FinSet                   consts;
      std::vector<FunctorExpr> kids;
    };

    FunctorExpr(Kind k, FinSet c, std::vector<FunctorExpr> kids)
        : _node(std::make_shared<Node const>(
            Node{k, std::move(c), std::move(kids)})) {}

    std::shared_ptr<Node const> _node;
  };

  namespace detail {
    inline void enumerate(FunctorExpr const& f,
                          FinSet const&      x,
                          std::vector<Value>& out) {
      switch (f.kind()) {
        case FunctorExpr::Kind::id:
          for (auto const& v : x) {
            out.push_back(Value::id(v));
          }
          return;
        case FunctorExpr::Kind::cnst:
          for (auto const& c : f.constants()) {
            out.push_back(Value::cnst(c.token()));
          }
          return;
        case FunctorExpr::Kind::prod: {
          std::vector<Value> ls, rs;
          enumerate(f.left(), x, ls);
          enumerate(f.right(), x, rs);
          for (auto const& l : ls) {
            for (auto const& r : rs) {
              out.push_back(Value::pair(l, r));
            }
          }
          return;
        }
        case FunctorExpr::Kind::sum: {
          std::vector<Value> ls, rs;
          enumerate(f.left(), x, ls);
          enumerate(f.right(), x, rs);
          for (auto& l : ls) {
            out.push_back(Value::inl(std::move(l)));
          }
          for (auto& r : rs) {
            out.push_back(Value::inr(std::move(r)));
          }
          return;
        }
      }
    }
  }  // namespace detail

  inline FinSet apply_obj(FunctorExpr const& f,
                          FinSet const&      x,
                          std::string const& label = {}) {
    std::vector<Value> out;
    detail::enumerate(f, x, out);
    return FinSet((label.empty() ? f.describe() : label) + "(" + x.name()
                      + ")",
                  std::move(out));
  }

  // Relabel the Id leaves of v by g, keeping the shape.
  inline Value fmap(FunctorExpr const& f, ValueMap const& g, Value const& v) {
    switch (f.kind()) {
      case FunctorExpr::Kind::id:
        v.expect(Value::Kind::id);
        return Value::id(g(v.child()));
      case FunctorExpr::Kind::cnst:
        v.expect(Value::Kind::cnst);
        return v;
      case FunctorExpr::Kind::prod:
        v.expect(Value::Kind::pair);
        return Value::pair(fmap(f.left(), g, v.first()),
                           fmap(f.right(), g, v.second()));
      case FunctorExpr::Kind::sum:
        if (v.is(Value::Kind::inl)) {
          return Value::inl(fmap(f.left(), g, v.child()));
        }
        v.expect(Value::Kind::inr);
        return Value::inr(fmap(f.right(), g, v.child()));
    }
    return v;
  }

  // Id-leaf payloads of v in left-to-right order.
  inline void support(FunctorExpr const&  f,
                      Value const&        v,
                      std::vector<Value>& out) {
    switch (f.kind()) {
      case FunctorExpr::Kind::id:
        v.expect(Value::Kind::id);
        out.push_back(v.child());
        return;
      case FunctorExpr::Kind::cnst: return;
      case FunctorExpr::Kind::prod:
        v.expect(Value::Kind::pair);
        support(f.left(), v.first(), out);
        support(f.right(), v.second(), out);
        return;
      case FunctorExpr::Kind::sum:
        if (v.is(Value::Kind::inl)) {
          support(f.left(), v.child(), out);
        } else {
          v.expect(Value::Kind::inr);
          support(f.right(), v.child(), out);
        }
        return;
    }
  }

  // v ∈ F(X), decided without enumerating F(X).
  inline bool shape_member(FunctorExpr const& f,
                           Value const&       v,
                           std::function<bool(Value const&)> const& in_x) {
    switch (f.kind()) {
      case FunctorExpr::Kind::id:
        return v.is(Value::Kind::id) && in_x(v.child());
      case FunctorExpr::Kind::cnst:
        return v.is(Value::Kind::cnst)
               && f.constants().contains(Value::atom(v.token()));
      case FunctorExpr::Kind::prod:
        return v.is(Value::Kind::pair) && shape_member(f.left(), v.first(), in_x)
               && shape_member(f.right(), v.second(), in_x);
      case FunctorExpr::Kind::sum:
        if (v.is(Value::Kind::inl)) {
          return shape_member(f.left(), v.child(), in_x);
        }
        return v.is(Value::Kind::inr) && shape_member(f.right(), v.child(), in_x);
    }
    return false;
  }

  inline FinFn apply_mor(FunctorExpr const& f, FinFn const& g) {
    ValueMap leaf = [&g](Value const& v) { return g(v); };
    return FinFn::from(apply_obj(f, g.dom()),
                       apply_obj(f, g.cod()),
                       [&](Value const& v) { return fmap(f, leaf, v); });
  }

}  // namespace gcentre
