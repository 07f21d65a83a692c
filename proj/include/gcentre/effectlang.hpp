#pragma once

// A small effect-annotated expression language and its reordering
// analysis.
//
//   program := decl* 'main' '=' expr
//   decl    := 'prim' IDENT '!' IDENT
//   expr    := 'let' IDENT '=' expr 'in' expr
//            | OP '(' expr ',' expr ')'
//            | IDENT '(' expr ')'
//            | IDENT | INT | '(' expr ')'
//
// OP is `op` followed by symbol characters (`op+`, `op<=`) or an
// identifier starting with `op` that is not a declared primitive and is
// applied to two arguments (`opadd(x, y)`). `#` starts a comment.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graded_monad.hpp"
#include "laws.hpp"
#include "pomonoid.hpp"

namespace gcentre {

  struct SourcePos {
    std::size_t line = 1;
    std::size_t col  = 1;

    std::string str() const {
      return std::to_string(line) + ":" + std::to_string(col);
    }
  };

  struct PrimDecl {
    std::string name;
    std::string grade;
    SourcePos   pos;
    SourcePos   grade_pos;
  };

  struct ExprNode {
    enum class Kind { var, lit, call, op, let };

    Kind                     kind;
    std::string              name;  // variable, primitive, operator, bound name
    long long                value = 0;
    std::vector<std::size_t> kids;  // call: arg; op: l, r; let: bound, body
    SourcePos                pos;
  };

  struct EffectProgram {
    std::vector<PrimDecl> prims;
    std::vector<ExprNode> nodes;
    std::size_t           root = 0;

    PrimDecl const* prim(std::string const& n) const {
      for (auto const& p : prims) {
        if (p.name == n) {
          return &p;
        }
      }
      return nullptr;
    }
  };

  namespace detail {
    class program_parser {
     public:
      explicit program_parser(std::string const& text) : _s(text) {}

      EffectProgram parse() {
        skip();
        while (peek_word() == "prim") {
          parse_decl();
        }
        SourcePos at = pos();
        if (peek_word() != "main") {
          fail(at, "'prim' or 'main'");
        }
        take_word();
        expect('=');
        _p.root = parse_expr();
        skip();
        if (_i != _s.size()) {
          fail(pos(), "end of input");
        }
        return std::move(_p);
      }

     private:
      [[noreturn]] void fail(SourcePos at, std::string const& expected) const {
        std::string got = _i < _s.size() ? std::string("'") + _s[_i] + "'"
                                         : std::string("end of input");
        throw error(errc::syntax_error,
                    at.str() + ": expected " + expected + ", found " + got);
      }

      SourcePos pos() const {
        return {_line, _col};
      }

      void advance() {
        if (_s[_i] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_i;
      }

      void skip() {
        while (_i < _s.size()) {
          if (_s[_i] == '#') {
            while (_i < _s.size() && _s[_i] != '\n') {
              advance();
            }
          } else if (std::isspace(static_cast<unsigned char>(_s[_i]))) {
            advance();
          } else {
            break;
          }
        }
      }

      static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }
      static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      }
      static bool op_symbol(char c) {
        return std::string_view("+-*/<>=&|^%!~.").find(c)
               != std::string_view::npos;
      }

      std::string peek_word() {
        skip();
        std::size_t j = _i;
        while (j < _s.size() && ident_char(_s[j])) {
          ++j;
        }
        return _s.substr(_i, j - _i);
      }

      std::string take_word() {
        skip();
        std::string w;
        while (_i < _s.size() && ident_char(_s[_i])) {
          w += _s[_i];
          advance();
        }
        return w;
      }

      // Grade names may use any non-space, non-comment characters.
      std::string take_grade() {
        skip();
        std::string w;
        while (_i < _s.size() && !std::isspace(static_cast<unsigned char>(_s[_i]))
               && _s[_i] != '#') {
          w += _s[_i];
          advance();
        }
        return w;
      }

      void expect(char c) {
        skip();
        if (_i >= _s.size() || _s[_i] != c) {
          fail(pos(), std::string("'") + c + "'");
        }
        advance();
      }

      bool accept(char c) {
        skip();
        if (_i < _s.size() && _s[_i] == c) {
          advance();
          return true;
        }
        return false;
      }

      void parse_decl() {
        SourcePos at = pos();
        take_word();  // prim
        skip();
        SourcePos name_at = pos();
        if (_i >= _s.size() || !ident_start(_s[_i])) {
          fail(name_at, "primitive name");
        }
        std::string name = take_word();
        expect('!');
        skip();
        SourcePos   gat   = pos();
        std::string grade = take_grade();
        if (grade.empty()) {
          fail(gat, "grade name");
        }
        if (_p.prim(name)) {
          throw error(errc::syntax_error,
                      name_at.str() + ": primitive '" + name
                          + "' declared twice");
        }
        _p.prims.push_back({name, grade, at, gat});
      }

      std::size_t add(ExprNode n) {
        _p.nodes.push_back(std::move(n));
        return _p.nodes.size() - 1;
      }

      std::size_t parse_expr() {
        skip();
        SourcePos at = pos();
        if (_i >= _s.size()) {
          fail(at, "expression");
        }
        char c = _s[_i];
        if (c == '(') {
          advance();
          std::size_t e = parse_expr();
          expect(')');
          return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::string digits;
          while (_i < _s.size()
                 && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            digits += _s[_i];
            advance();
          }
          ExprNode n{ExprNode::Kind::lit, digits, 0, {}, at};
          try {
            n.value = std::stoll(digits);
          } catch (std::exception const&) {
            throw error(errc::syntax_error,
                        at.str() + ": integer literal out of range");
          }
          return add(std::move(n));
        }
        if (!ident_start(c)) {
          fail(at, "expression");
        }
        std::string word = take_word();
        if (word == "let") {
          skip();
          SourcePos vat = pos();
          if (_i >= _s.size() || !ident_start(_s[_i])) {
            fail(vat, "variable name");
          }
          std::string var = take_word();
          expect('=');
          std::size_t bound = parse_expr();
          if (peek_word() != "in") {
            fail(pos(), "'in'");
          }
          take_word();
          std::size_t body = parse_expr();
          return add({ExprNode::Kind::let, var, 0, {bound, body}, at});
        }
        if (word.rfind("op", 0) == 0) {
          std::string name = word;
          while (_i < _s.size() && op_symbol(_s[_i])) {
            name += _s[_i];
            advance();
          }
          bool symbolic = name.size() > word.size() || word == "op";
          if (symbolic || !_p.prim(word)) {
            skip();
            if (_i < _s.size() && _s[_i] == '(') {
              advance();
              std::size_t l = parse_expr();
              expect(',');
              std::size_t r = parse_expr();
              expect(')');
              return add({ExprNode::Kind::op, name, 0, {l, r}, at});
            }
            if (symbolic) {
              fail(pos(), "'(' after operator " + name);
            }
          }
        }
        skip();
        if (_i < _s.size() && _s[_i] == '(') {
          advance();
          std::size_t arg = parse_expr();
          if (!accept(')')) {
            fail(pos(), "')' (primitives take one argument)");
          }
          return add({ExprNode::Kind::call, word, 0, {arg}, at});
        }
        return add({ExprNode::Kind::var, word, 0, {}, at});
      }

      std::string   _s;
      std::size_t   _i    = 0;
      std::size_t   _line = 1;
      std::size_t   _col  = 1;
      EffectProgram _p;
    };

    inline void check_scopes(EffectProgram const&      p,
                             std::size_t               n,
                             std::vector<std::string>& scope) {
      auto const& node = p.nodes[n];
      switch (node.kind) {
        case ExprNode::Kind::lit: return;
        case ExprNode::Kind::var:
          for (auto const& s : scope) {
            if (s == node.name) {
              return;
            }
          }
          throw error(errc::unbound_variable,
                      node.pos.str() + ": '" + node.name + "' is not bound");
        case ExprNode::Kind::call:
          if (!p.prim(node.name)) {
            throw error(errc::unknown_primitive,
                        node.pos.str() + ": '" + node.name
                            + "' is not a declared primitive");
          }
          check_scopes(p, node.kids[0], scope);
          return;
        case ExprNode::Kind::op:
          check_scopes(p, node.kids[0], scope);
          check_scopes(p, node.kids[1], scope);
          return;
        case ExprNode::Kind::let:
          check_scopes(p, node.kids[0], scope);
          scope.push_back(node.name);
          check_scopes(p, node.kids[1], scope);
          scope.pop_back();
          return;
      }
    }
  }  // namespace detail

  // Syntax, primitive and scope checks; grades are checked against a
  // pomonoid by check_grades / infer_grades.
  inline EffectProgram parse_program(std::string const& text) {
    EffectProgram            p = detail::program_parser(text).parse();
    std::vector<std::string> scope;
    detail::check_scopes(p, p.root, scope);
    return p;
  }

  inline void check_grades(EffectProgram const& p, Pomonoid const& g) {
    for (auto const& d : p.prims) {
      if (!g.find(d.grade)) {
        throw error(errc::unknown_grade,
                    d.grade_pos.str() + ": '" + d.grade
                        + "' is not an element of the pomonoid");
      }
    }
  }

  inline EffectProgram parse_program(std::string const& text,
                                     Pomonoid const&    g) {
    EffectProgram p = parse_program(text);
    check_grades(p, g);
    return p;
  }

  // Grade per node (indexed like p.nodes), composing left to right.
  inline std::vector<Grade> infer_grades(EffectProgram const& p,
                                         Pomonoid const&      g) {
    check_grades(p, g);
    std::vector<Grade>                   out(p.nodes.size(), g.unit());
    std::vector<char>                    done(p.nodes.size(), 0);
    std::function<Grade(std::size_t)> go = [&](std::size_t n) -> Grade {
      if (done[n]) {
        return out[n];
      }
      auto const& node = p.nodes[n];
      Grade       r    = g.unit();
      switch (node.kind) {
        case ExprNode::Kind::var:
        case ExprNode::Kind::lit: break;
        case ExprNode::Kind::call:
          r = g.mul(go(node.kids[0]), g.index(p.prim(node.name)->grade));
          break;
        case ExprNode::Kind::op:
        case ExprNode::Kind::let:
          r = g.mul(go(node.kids[0]), go(node.kids[1]));
          break;
      }
      done[n] = 1;
      return out[n] = r;
    };
    go(p.root);
    return out;
  }

  enum class Verdict { free, grade_commutes_only, forced };

  inline char const* verdict_name(Verdict v) {
    switch (v) {
      case Verdict::free: return "FREE";
      case Verdict::grade_commutes_only: return "GRADE_COMMUTES_ONLY";
      case Verdict::forced: return "FORCED";
    }
    return "?";
  }

  struct ReorderEntry {
    std::size_t node = 0;
    SourcePos   pos;
    std::string op;
    std::string a;
    std::string b;
    Verdict     verdict = Verdict::forced;
  };

  // FORCED when the grades do not commute, or when a monad is supplied and
  // the two evaluation orders differ on some tested pair of elements.
  // FREE when not forced and one operand grade is central.
  inline Verdict reorder_verdict(Pomonoid const&          g,
                                 Grade                    a,
                                 Grade                    b,
                                 GradedStrongMonad const* m,
                                 std::size_t              k) {
    bool forced = !g.commute(a, b);
    if (!forced && m) {
      forced = !check_commutative_pair(*m, a, b, k).passed();
    }
    if (forced) {
      return Verdict::forced;
    }
    if (g.is_central(a) || g.is_central(b)) {
      return Verdict::free;
    }
    return Verdict::grade_commutes_only;
  }

  inline std::vector<ReorderEntry> reorder_report(
      EffectProgram const&     p,
      Pomonoid const&          g,
      GradedStrongMonad const* m = nullptr,
      std::size_t              k = 2) {
    if (m && !(m->grading == g)) {
      throw error(errc::grading_mismatch,
                  "monad " + m->name + " is graded by a different pomonoid");
    }
    auto const                grades = infer_grades(p, g);
    std::vector<ReorderEntry> out;
    std::map<std::pair<Grade, Grade>, Verdict> memo;
    // Source order: nodes sorted by position.
    std::vector<std::size_t> ops;
    for (std::size_t n = 0; n < p.nodes.size(); ++n) {
      if (p.nodes[n].kind == ExprNode::Kind::op) {
        ops.push_back(n);
      }
    }
    std::sort(ops.begin(), ops.end(), [&](std::size_t x, std::size_t y) {
      auto const& px = p.nodes[x].pos;
      auto const& py = p.nodes[y].pos;
      return px.line != py.line ? px.line < py.line : px.col < py.col;
    });
    for (auto n : ops) {
      auto const& node = p.nodes[n];
      Grade       a = grades[node.kids[0]], b = grades[node.kids[1]];
      auto        key = std::make_pair(a, b);
      auto        it  = memo.find(key);
      Verdict     v   = it != memo.end()
                            ? it->second
                            : (memo[key] = reorder_verdict(g, a, b, m, k));
      out.push_back({n, node.pos, node.name, g.name(a), g.name(b), v});
    }
    return out;
  }

}  // namespace gcentre
