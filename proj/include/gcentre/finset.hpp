#pragma once

// Finite sets, total functions between them, and the cartesian symmetric
// monoidal structure (⊗ = ×, I = {*}).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "value.hpp"

namespace gcentre {

  class FinSet {
   public:
    FinSet() = default;

    // Elements are sorted and deduplicated so equality is set equality.
    FinSet(std::string name, std::vector<Value> elems)
        : _name(std::move(name)), _elems(std::move(elems)) {
      std::sort(_elems.begin(), _elems.end());
      _elems.erase(std::unique(_elems.begin(), _elems.end()), _elems.end());
    }

    std::string const& name() const noexcept {
      return _name;
    }
    std::vector<Value> const& elements() const noexcept {
      return _elems;
    }
    std::size_t size() const noexcept {
      return _elems.size();
    }
    bool empty() const noexcept {
      return _elems.empty();
    }
    bool contains(Value const& v) const {
      return std::binary_search(_elems.begin(), _elems.end(), v);
    }
    // Position of v in canonical order; size() when absent.
    std::size_t index_of(Value const& v) const {
      auto it = std::lower_bound(_elems.begin(), _elems.end(), v);
      if (it == _elems.end() || !(*it == v)) {
        return _elems.size();
      }
      return static_cast<std::size_t>(it - _elems.begin());
    }

    auto begin() const {
      return _elems.begin();
    }
    auto end() const {
      return _elems.end();
    }

    // Same elements, name ignored.
    friend bool operator==(FinSet const& a, FinSet const& b) {
      return a._elems == b._elems;
    }

    std::string describe() const {
      std::string out = "{";
      for (std::size_t i = 0; i < _elems.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += _elems[i].encode();
      }
      return out + "}";
    }

   private:
    std::string        _name;
    std::vector<Value> _elems;
  };

  // Total function given by its graph; images aligned with dom().elements().
  class FinFn {
   public:
    FinFn(FinSet dom, FinSet cod, std::vector<Value> images)
        : _dom(std::move(dom)), _cod(std::move(cod)), _img(std::move(images)) {
      if (_img.size() != _dom.size()) {
        throw error(errc::shape_mismatch,
                    "function graph is not total on " + _dom.name());
      }
      for (auto const& v : _img) {
        if (!_cod.contains(v)) {
          throw error(errc::shape_mismatch,
                      "image " + v.encode() + " not in " + _cod.name());
        }
      }
    }

    static FinFn from(FinSet dom,
                      FinSet cod,
                      std::function<Value(Value const&)> const& f) {
      std::vector<Value> img;
      img.reserve(dom.size());
      for (auto const& x : dom) {
        img.push_back(f(x));
      }
      return FinFn(std::move(dom), std::move(cod), std::move(img));
    }

    static FinFn identity(FinSet const& x) {
      return FinFn(x, x, x.elements());
    }

    FinSet const& dom() const noexcept {
      return _dom;
    }
    FinSet const& cod() const noexcept {
      return _cod;
    }
    std::vector<Value> const& images() const noexcept {
      return _img;
    }

    Value const& operator()(Value const& x) const {
      std::size_t i = _dom.index_of(x);
      if (i == _dom.size()) {
        throw error(errc::shape_mismatch,
                    x.encode() + " is not in the domain " + _dom.name());
      }
      return _img[i];
    }

    bool injective() const {
      std::vector<Value> sorted = _img;
      std::sort(sorted.begin(), sorted.end());
      return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    bool bijective() const {
      return injective() && _img.size() == _cod.size();
    }

    // Function-level equality; names ignored.
    friend bool operator==(FinFn const& a, FinFn const& b) {
      return a._dom == b._dom && a._cod == b._cod && a._img == b._img;
    }

   private:
    FinSet             _dom;
    FinSet             _cod;
    std::vector<Value> _img;
  };

  // g ∘ f
  inline FinFn compose(FinFn const& g, FinFn const& f) {
    if (!(f.cod() == g.dom())) {
      throw error(errc::shape_mismatch,
                  "cannot compose " + f.cod().name() + " with "
                      + g.dom().name());
    }
    std::vector<Value> img;
    img.reserve(f.dom().size());
    for (auto const& y : f.images()) {
      img.push_back(g(y));
    }
    return FinFn(f.dom(), g.cod(), std::move(img));
  }

  // Y_n = {y0, ..., y(n-1)}
  inline FinSet canonical_set(std::size_t n) {
    std::vector<Value> elems;
    elems.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      elems.push_back(Value::atom("y" + std::to_string(i)));
    }
    return FinSet("Y" + std::to_string(n), std::move(elems));
  }

  // All functions dom → cod, in lexicographic order of their image tuples.
  inline std::vector<FinFn> all_functions(FinSet const& dom,
                                          FinSet const& cod) {
    std::vector<FinFn> out;
    if (cod.empty() && !dom.empty()) {
      return out;
    }
    std::vector<std::size_t> digits(dom.size(), 0);
    while (true) {
      std::vector<Value> img;
      img.reserve(dom.size());
      for (auto d : digits) {
        img.push_back(cod.elements()[d]);
      }
      out.emplace_back(dom, cod, std::move(img));
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (++digits[i] < cod.size()) {
          break;
        }
        digits[i] = 0;
      }
      if (i == digits.size()) {
        break;
      }
    }
    return out;
  }

  // Functions between canonical sets of size ≤ k.
  inline std::vector<FinFn> canonical_functions(std::size_t k) {
    std::vector<FinFn> out;
    for (std::size_t n = 0; n <= k; ++n) {
      for (std::size_t m = 0; m <= k; ++m) {
        auto fs = all_functions(canonical_set(n), canonical_set(m));
        out.insert(out.end(), fs.begin(), fs.end());
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoidal structure
  ////////////////////////////////////////////////////////////////////////

  inline Value unit_point() {
    return Value::atom("*");
  }

  inline FinSet unit_set() {
    return FinSet("1", {unit_point()});
  }

  inline FinSet tensor(FinSet const& x, FinSet const& y) {
    std::vector<Value> elems;
    elems.reserve(x.size() * y.size());
    for (auto const& a : x) {
      for (auto const& b : y) {
        elems.push_back(Value::pair(a, b));
      }
    }
    return FinSet("(" + x.name() + "*" + y.name() + ")", std::move(elems));
  }

  // Element-level structure maps, usable inside transformers.
  namespace mon {
    inline Value swap(Value const& p) {
      return Value::pair(p.second(), p.first());
    }
    // ((x,y),z) ↦ (x,(y,z))
    inline Value assoc(Value const& p) {
      Value const& xy = p.first();
      return Value::pair(xy.first(), Value::pair(xy.second(), p.second()));
    }
    // (x,(y,z)) ↦ ((x,y),z)
    inline Value assoc_inv(Value const& p) {
      Value const& yz = p.second();
      return Value::pair(Value::pair(p.first(), yz.first()), yz.second());
    }
    // (*,x) ↦ x
    inline Value left_unitor(Value const& p) {
      return p.second();
    }
    // (x,*) ↦ x
    inline Value right_unitor(Value const& p) {
      return p.first();
    }
  }  // namespace mon

  struct MonoidalKit {
    FinSet xy;   // X ⊗ Y
    FinSet yx;   // Y ⊗ X
    FinFn  gamma;      // X⊗Y → Y⊗X
    FinFn  gamma_inv;  // Y⊗X → X⊗Y
    FinFn  alpha;      // (X⊗Y)⊗Z → X⊗(Y⊗Z)
    FinFn  alpha_inv;
    FinFn  lambda;     // I⊗X → X
    FinFn  lambda_inv;
    FinFn  rho;        // X⊗I → X
    FinFn  rho_inv;
  };

  inline MonoidalKit monoidal_kit(FinSet const& x,
                                  FinSet const& y,
                                  FinSet const& z) {
    FinSet xy   = tensor(x, y);
    FinSet yx   = tensor(y, x);
    FinSet xy_z = tensor(xy, z);
    FinSet x_yz = tensor(x, tensor(y, z));
    FinSet ix   = tensor(unit_set(), x);
    FinSet xi   = tensor(x, unit_set());
    return MonoidalKit{
        xy,
        yx,
        FinFn::from(xy, yx, mon::swap),
        FinFn::from(yx, xy, mon::swap),
        FinFn::from(xy_z, x_yz, mon::assoc),
        FinFn::from(x_yz, xy_z, mon::assoc_inv),
        FinFn::from(ix, x, mon::left_unitor),
        FinFn::from(x, ix, [](Value const& v) {
          return Value::pair(unit_point(), v);
        }),
        FinFn::from(xi, x, mon::right_unitor),
        FinFn::from(x, xi, [](Value const& v) {
          return Value::pair(v, unit_point());
        }),
    };
  }

  // f ⊗ g
  inline FinFn tensor(FinFn const& f, FinFn const& g) {
    return FinFn::from(tensor(f.dom(), g.dom()),
                       tensor(f.cod(), g.cod()),
                       [&](Value const& p) {
                         return Value::pair(f(p.first()), g(p.second()));
                       });
  }

}  // namespace gcentre
