#pragma once

// Immutable element trees. One type covers plain set elements (atoms),
// tensor pairs, and elements of polynomial functor applications, so that
// nested applications such as T(X ⊗ T Y) need no extra machinery.
//
// Canonical encoding (bit-exact, used in reports and golden files):
//   atom      <tok>
//   Id leaf   x:<value>
//   Const     c:<tok>
//   pair      (<l>,<r>)
//   sum       inl:<value> | inr:<value>
// Tokens never contain whitespace, ':' or unbalanced braces; a '{...}' run
// is one token even when it holds commas.

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gcentre {

  class Value {
   public:
    enum class Kind : unsigned char { atom, id, cnst, pair, inl, inr };

    static Value atom(std::string tok) {
      return Value(Kind::atom, std::move(tok), {});
    }
    static Value id(Value v) {
      return Value(Kind::id, {}, {std::move(v)});
    }
    static Value cnst(std::string tok) {
      return Value(Kind::cnst, std::move(tok), {});
    }
    static Value pair(Value l, Value r) {
      return Value(Kind::pair, {}, {std::move(l), std::move(r)});
    }
    static Value inl(Value v) {
      return Value(Kind::inl, {}, {std::move(v)});
    }
    static Value inr(Value v) {
      return Value(Kind::inr, {}, {std::move(v)});
    }

    Kind kind() const noexcept {
      return _node->kind;
    }
    bool is(Kind k) const noexcept {
      return _node->kind == k;
    }
    std::string const& token() const noexcept {
      return _node->token;
    }

    // Payload of an Id leaf or a sum injection.
    Value const& child() const {
      expect_arity(1);
      return _node->kids[0];
    }
    Value const& first() const {
      expect(Kind::pair);
      return _node->kids[0];
    }
    Value const& second() const {
      expect(Kind::pair);
      return _node->kids[1];
    }

    void expect(Kind k) const {
      if (kind() != k) {
        throw error(errc::shape_mismatch,
                    "unexpected element shape " + encode());
      }
    }

    std::string encode() const {
      std::string out;
      encode_into(out);
      return out;
    }

    static Value parse(std::string_view text);

    friend bool operator==(Value const& a, Value const& b) {
      return compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(Value const& a, Value const& b) {
      int c = compare(a, b);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

   private:
    struct Node {
      Kind               kind;
      std::string        token;
      std::vector<Value> kids;
    };

    Value(Kind k, std::string tok, std::vector<Value> kids)
        : _node(std::make_shared<Node const>(
            Node{k, std::move(tok), std::move(kids)})) {}

    void expect_arity(std::size_t n) const {
      if (_node->kids.size() != n || kind() == Kind::pair) {
        throw error(errc::shape_mismatch,
                    "unexpected element shape " + encode());
      }
    }

    static int compare(Value const& a, Value const& b) {
      if (a._node == b._node) {
        return 0;
      }
      if (a.kind() != b.kind()) {
        return a.kind() < b.kind() ? -1 : 1;
      }
      if (int c = a.token().compare(b.token()); c != 0) {
        return c < 0 ? -1 : 1;
      }
      auto const& ka = a._node->kids;
      auto const& kb = b._node->kids;
      for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
        if (int c = compare(ka[i], kb[i]); c != 0) {
          return c;
        }
      }
      if (ka.size() != kb.size()) {
        return ka.size() < kb.size() ? -1 : 1;
      }
      return 0;
    }

    void encode_into(std::string& out) const {
      switch (kind()) {
        case Kind::atom: out += token(); break;
        case Kind::cnst:
          out += "c:";
          out += token();
          break;
        case Kind::id:
          out += "x:";
          child().encode_into(out);
          break;
        case Kind::inl:
          out += "inl:";
          child().encode_into(out);
          break;
        case Kind::inr:
          out += "inr:";
          child().encode_into(out);
          break;
        case Kind::pair:
          out += '(';
          first().encode_into(out);
          out += ',';
          second().encode_into(out);
          out += ')';
          break;
      }
    }

    std::shared_ptr<Node const> _node;
  };

  namespace detail {
    class value_parser {
     public:
      explicit value_parser(std::string_view s) : _s(s) {}

      Value parse_all() {
        Value v = parse_value();
        if (_pos != _s.size()) {
          fail("trailing characters");
        }
        return v;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw error(errc::parse_error,
                    why + " at offset " + std::to_string(_pos) + " in '"
                        + std::string(_s) + "'");
      }

      bool starts_with(std::string_view p) const {
        return _s.substr(_pos, p.size()) == p;
      }

      Value parse_value() {
        if (starts_with("x:")) {
          _pos += 2;
          return Value::id(parse_value());
        }
        if (starts_with("c:")) {
          _pos += 2;
          return Value::cnst(parse_token());
        }
        if (starts_with("inl:")) {
          _pos += 4;
          return Value::inl(parse_value());
        }
        if (starts_with("inr:")) {
          _pos += 4;
          return Value::inr(parse_value());
        }
        if (starts_with("(")) {
          ++_pos;
          Value l = parse_value();
          if (!starts_with(",")) {
            fail("expected ','");
          }
          ++_pos;
          Value r = parse_value();
          if (!starts_with(")")) {
            fail("expected ')'");
          }
          ++_pos;
          return Value::pair(std::move(l), std::move(r));
        }
        return Value::atom(parse_token());
      }

      std::string parse_token() {
        std::size_t start = _pos;
        int         depth = 0;
        while (_pos < _s.size()) {
          char c = _s[_pos];
          if (c == '{') {
            ++depth;
          } else if (c == '}') {
            if (depth == 0) {
              fail("unbalanced '}'");
            }
            --depth;
          } else if (depth == 0
                     && (c == '(' || c == ')' || c == ',' || c == ':'
                         || c == ' ' || c == '\t' || c == '\n')) {
            break;
          }
          ++_pos;
        }
        if (depth != 0) {
          fail("unbalanced '{'");
        }
        if (_pos == start) {
          fail("expected a token");
        }
        return std::string(_s.substr(start, _pos - start));
      }

      std::string_view _s;
      std::size_t      _pos = 0;
    };
  }  // namespace detail

  inline Value Value::parse(std::string_view text) {
    return detail::value_parser(text).parse_all();
  }

}  // namespace gcentre
