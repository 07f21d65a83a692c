#pragma once

// Finite languages with a length cap, concatenation and shuffle, and the
// duoid obtained by closing a set of generators under both products.
//
// Literal syntax: `{ab,ba}`; `{}` is the empty language, `{_}` is {ε}.
// Canonical literals list words in shortlex order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pomonoid.hpp"

namespace gcentre {

  struct shortlex {
    bool operator()(std::string const& a, std::string const& b) const {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  };

  class CappedLanguage {
   public:
    using word_set = std::set<std::string, shortlex>;

    CappedLanguage() = default;

    CappedLanguage(std::string alphabet, std::size_t cap, word_set words = {})
        : _alphabet(normalize(std::move(alphabet))), _cap(cap) {
      for (auto const& w : words) {
        add(w);
      }
    }

    static CappedLanguage epsilon(std::string alphabet, std::size_t cap) {
      return CappedLanguage(std::move(alphabet), cap, {""});
    }

    static CappedLanguage parse(std::string const& literal,
                                std::string        alphabet,
                                std::size_t        cap) {
      if (literal.size() < 2 || literal.front() != '{'
          || literal.back() != '}') {
        throw error(errc::parse_error,
                    "language literal must be braced: '" + literal + "'");
      }
      CappedLanguage out(std::move(alphabet), cap);
      std::string    body = literal.substr(1, literal.size() - 2);
      if (body.empty()) {
        return out;
      }
      std::size_t start = 0;
      while (true) {
        auto        comma = body.find(',', start);
        std::string w     = body.substr(start, comma - start);
        if (w.empty()) {
          throw error(errc::parse_error,
                      "empty word in '" + literal + "' (write _ for ε)");
        }
        out.add(w == "_" ? std::string() : w);
        if (comma == std::string::npos) {
          break;
        }
        start = comma + 1;
      }
      return out;
    }

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t cap() const noexcept {
      return _cap;
    }
    word_set const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _words.size();
    }
    bool contains(std::string const& w) const {
      return _words.count(w) != 0;
    }

    bool subset_of(CappedLanguage const& other) const {
      return std::includes(other._words.begin(), other._words.end(),
                           _words.begin(), _words.end(), shortlex{});
    }

    std::string literal() const {
      std::string out = "{";
      bool        first = true;
      for (auto const& w : _words) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += w.empty() ? std::string("_") : w;
      }
      return out + "}";
    }

    // All sublanguages, in order of their bitmask over words().
    std::vector<CappedLanguage> subsets() const {
      std::vector<std::string> ws(_words.begin(), _words.end());
      if (ws.size() > 20) {
        throw error(errc::closure_explosion,
                    "too many words to enumerate sublanguages of "
                        + literal());
      }
      std::vector<CappedLanguage> out;
      for (std::size_t mask = 0; mask < (std::size_t(1) << ws.size());
           ++mask) {
        CappedLanguage l(_alphabet, _cap);
        for (std::size_t i = 0; i < ws.size(); ++i) {
          if (mask & (std::size_t(1) << i)) {
            l._words.insert(ws[i]);
          }
        }
        out.push_back(std::move(l));
      }
      return out;
    }

    friend bool operator==(CappedLanguage const& a, CappedLanguage const& b) {
      return a._alphabet == b._alphabet && a._cap == b._cap
             && a._words == b._words;
    }
    friend bool operator<(CappedLanguage const& a, CappedLanguage const& b) {
      if (a._words.size() != b._words.size()) {
        return a._words.size() < b._words.size();
      }
      return std::lexicographical_compare(a._words.begin(), a._words.end(),
                                          b._words.begin(), b._words.end(),
                                          shortlex{});
    }

    void add(std::string const& w) {
      if (w.size() > _cap) {
        throw error(errc::parse_error,
                    "word '" + w + "' is longer than the cap "
                        + std::to_string(_cap));
      }
      for (char c : w) {
        if (_alphabet.find(c) == std::string::npos) {
          throw error(errc::alphabet_mismatch,
                      std::string("symbol '") + c + "' not in alphabet '"
                          + _alphabet + "'");
        }
      }
      _words.insert(w);
    }

    // Insert without validation; used by the products, whose outputs are
    // already over the alphabet and within the cap.
    void add_unchecked(std::string w) {
      _words.insert(std::move(w));
    }

   private:
    static std::string normalize(std::string s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }

    std::string _alphabet;
    std::size_t _cap = 0;
    word_set    _words;
  };

  namespace detail {
    inline void same_universe(CappedLanguage const& a, CappedLanguage const& b) {
      if (a.alphabet() != b.alphabet() || a.cap() != b.cap()) {
        throw error(errc::alphabet_mismatch,
                    "alphabets/caps differ: '" + a.alphabet() + "'/"
                        + std::to_string(a.cap()) + " vs '" + b.alphabet()
                        + "'/" + std::to_string(b.cap()));
      }
    }

    inline void interleave(std::string const& u,
                           std::size_t        i,
                           std::string const& v,
                           std::size_t        j,
                           std::string&       acc,
                           CappedLanguage&    out) {
      if (i == u.size() && j == v.size()) {
        out.add_unchecked(acc);
        return;
      }
      if (i < u.size()) {
        acc.push_back(u[i]);
        interleave(u, i + 1, v, j, acc, out);
        acc.pop_back();
      }
      if (j < v.size()) {
        acc.push_back(v[j]);
        interleave(u, i, v, j + 1, acc, out);
        acc.pop_back();
      }
    }
  }  // namespace detail

  // Words longer than the cap are dropped.
  inline CappedLanguage language_concat(CappedLanguage const& a,
                                        CappedLanguage const& b) {
    detail::same_universe(a, b);
    CappedLanguage out(a.alphabet(), a.cap());
    for (auto const& u : a.words()) {
      for (auto const& v : b.words()) {
        if (u.size() + v.size() <= a.cap()) {
          out.add_unchecked(u + v);
        }
      }
    }
    return out;
  }

  inline CappedLanguage language_shuffle(CappedLanguage const& a,
                                         CappedLanguage const& b) {
    detail::same_universe(a, b);
    CappedLanguage out(a.alphabet(), a.cap());
    std::string    acc;
    for (auto const& u : a.words()) {
      for (auto const& v : b.words()) {
        if (u.size() + v.size() <= a.cap()) {
          detail::interleave(u, 0, v, 0, acc, out);
        }
      }
    }
    return out;
  }

  struct LanguageDuoid {
    Duoid                       duoid;
    std::vector<CappedLanguage> languages;  // indexed by grade
    std::string                 alphabet;
    std::size_t                 cap = 0;

    CappedLanguage const& language(Grade g) const {
      return languages.at(g);
    }
    Grade grade_of(CappedLanguage const& l) const {
      for (Grade g = 0; g < languages.size(); ++g) {
        if (languages[g] == l) {
          return g;
        }
      }
      throw error(errc::unknown_element, l.literal() + " is not a grade");
    }
  };

  // Closes {ε} and the generators under concatenation and shuffle. Grades
  // are the resulting languages, ordered by inclusion; both units are {ε}.
  inline LanguageDuoid language_duoid(std::string const&                 alphabet,
                                      std::size_t                        cap,
                                      std::vector<CappedLanguage> const& gens,
                                      std::size_t budget = 256) {
    if (gens.empty()) {
      throw error(errc::parse_error, "at least one generator is required");
    }
    CappedLanguage const        eps = CappedLanguage::epsilon(alphabet, cap);
    std::vector<CappedLanguage> elems{eps};
    std::set<CappedLanguage>    seen{eps};
    auto push = [&](CappedLanguage const& l) {
      if (seen.insert(l).second) {
        elems.push_back(l);
        if (elems.size() > budget) {
          throw error(errc::closure_explosion,
                      "more than " + std::to_string(budget)
                          + " languages in the closure");
        }
      }
    };
    for (auto const& g : gens) {
      detail::same_universe(eps, g);
      push(g);
    }
    // Worklist: every pair (i, j) is combined exactly once in both orders.
    for (std::size_t j = 0; j < elems.size(); ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        CappedLanguage a = elems[i], b = elems[j];
        push(language_concat(a, b));
        push(language_concat(b, a));
        push(language_shuffle(a, b));
      }
    }
    std::sort(elems.begin(), elems.end());

    PomonoidSpec spec;
    for (auto const& l : elems) {
      spec.elements.push_back(l.literal());
    }
    spec.unit  = eps.literal();
    spec.unit2 = eps.literal();
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        spec.mul.emplace_back(a.literal(), b.literal(),
                              language_concat(a, b).literal());
        spec.op2.emplace_back(a.literal(), b.literal(),
                              language_shuffle(a, b).literal());
        if (a.subset_of(b) && !(a == b)) {
          spec.le.emplace_back(a.literal(), b.literal());
        }
      }
    }
    return LanguageDuoid{duoid_from_spec(spec), std::move(elems),
                         eps.alphabet(), cap};
  }

  inline LanguageDuoid letter_duoid(std::string const& alphabet,
                                    std::size_t        cap,
                                    std::size_t        budget = 256) {
    std::vector<CappedLanguage> gens;
    for (char c : alphabet) {
      gens.push_back(CappedLanguage(alphabet, cap, {std::string(1, c)}));
    }
    return language_duoid(alphabet, cap, gens, budget);
  }

}  // namespace gcentre
