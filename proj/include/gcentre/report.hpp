#pragma once

// Law-check reports. Every evaluated law instance is tallied; failing
// instances are kept as records (up to a per-law cap) with the witness
// input and both sides in canonical element encoding.

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gcentre {

  struct LawRecord {
    std::string              law;
    std::vector<std::string> grades;
    std::vector<std::size_t> set_sizes;
    std::string              witness;
    std::string              lhs;
    std::string              rhs;
    bool                     ok = false;
    std::string              note;

    friend bool operator==(LawRecord const&, LawRecord const&) = default;
  };

  struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;

    friend bool operator==(Tally const&, Tally const&) = default;
  };

  class Report {
   public:
    static constexpr std::size_t default_record_cap = 16;

    Report() = default;
    explicit Report(std::string title, std::size_t cap = default_record_cap)
        : _title(std::move(title)), _cap(cap) {}

    std::string const& title() const noexcept {
      return _title;
    }

    void pass(std::string const& law) {
      ++_tallies[law].passed;
    }

    void fail(LawRecord rec) {
      auto& t = _tallies[rec.law];
      ++t.failed;
      rec.ok = false;
      if (t.failed <= _cap) {
        _records.push_back(std::move(rec));
      }
    }

    void record(bool ok, LawRecord rec) {
      if (ok) {
        pass(rec.law);
      } else {
        fail(std::move(rec));
      }
    }

    // Declares a law that may have no instances (vacuous pass).
    void touch(std::string const& law) {
      _tallies[law];
    }

    void merge(Report const& other) {
      for (auto const& [law, t] : other._tallies) {
        _tallies[law].passed += t.passed;
        _tallies[law].failed += t.failed;
      }
      _records.insert(_records.end(), other._records.begin(),
                      other._records.end());
    }

    bool passed() const {
      for (auto const& [law, t] : _tallies) {
        if (t.failed != 0) {
          return false;
        }
      }
      return true;
    }

    bool law_passed(std::string const& law) const {
      auto it = _tallies.find(law);
      return it == _tallies.end() || it->second.failed == 0;
    }

    std::size_t failure_count() const {
      std::size_t n = 0;
      for (auto const& [law, t] : _tallies) {
        n += t.failed;
      }
      return n;
    }

    std::size_t instance_count() const {
      std::size_t n = 0;
      for (auto const& [law, t] : _tallies) {
        n += t.passed + t.failed;
      }
      return n;
    }

    std::map<std::string, Tally> const& tallies() const noexcept {
      return _tallies;
    }
    std::vector<LawRecord> const& records() const noexcept {
      return _records;
    }

    void print(std::ostream& os) const {
      os << _title << ": " << (passed() ? "PASS" : "FAIL") << " ("
         << instance_count() << " instances, " << failure_count()
         << " failing)\n";
      for (auto const& [law, t] : _tallies) {
        os << "  " << law << ": " << t.passed << " passed, " << t.failed
           << " failed\n";
      }
      for (auto const& r : _records) {
        os << "  witness " << r.law << " grades=[";
        for (std::size_t i = 0; i < r.grades.size(); ++i) {
          os << (i ? "," : "") << r.grades[i];
        }
        os << "] sizes=[";
        for (std::size_t i = 0; i < r.set_sizes.size(); ++i) {
          os << (i ? "," : "") << r.set_sizes[i];
        }
        os << "] in=" << r.witness;
        if (!r.lhs.empty() || !r.rhs.empty()) {
          os << " lhs=" << r.lhs << " rhs=" << r.rhs;
        }
        if (!r.note.empty()) {
          os << " (" << r.note << ")";
        }
        os << "\n";
      }
    }

    std::string to_string() const {
      std::ostringstream os;
      print(os);
      return os.str();
    }

    nlohmann::json to_json() const {
      nlohmann::json j;
      j["title"]  = _title;
      j["passed"] = passed();
      j["cap"]    = _cap;
      auto& t     = j["tallies"];
      t           = nlohmann::json::object();
      for (auto const& [law, tl] : _tallies) {
        t[law] = {{"passed", tl.passed}, {"failed", tl.failed}};
      }
      j["records"] = nlohmann::json::array();
      for (auto const& r : _records) {
        j["records"].push_back({{"law", r.law},
                                {"grades", r.grades},
                                {"set_sizes", r.set_sizes},
                                {"witness", r.witness},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"verdict", r.ok ? "pass" : "fail"},
                                {"note", r.note}});
      }
      return j;
    }

    static Report from_json(nlohmann::json const& j) {
      Report r(j.at("title").get<std::string>(),
               j.at("cap").get<std::size_t>());
      for (auto const& [law, tl] : j.at("tallies").items()) {
        r._tallies[law] = Tally{tl.at("passed").get<std::size_t>(),
                                tl.at("failed").get<std::size_t>()};
      }
      for (auto const& rec : j.at("records")) {
        LawRecord lr;
        lr.law       = rec.at("law").get<std::string>();
        lr.grades    = rec.at("grades").get<std::vector<std::string>>();
        lr.set_sizes = rec.at("set_sizes").get<std::vector<std::size_t>>();
        lr.witness   = rec.at("witness").get<std::string>();
        lr.lhs       = rec.at("lhs").get<std::string>();
        lr.rhs       = rec.at("rhs").get<std::string>();
        lr.ok        = rec.at("verdict").get<std::string>() == "pass";
        lr.note      = rec.at("note").get<std::string>();
        r._records.push_back(std::move(lr));
      }
      return r;
    }

    friend bool operator==(Report const& a, Report const& b) {
      return a._title == b._title && a._cap == b._cap
             && a._tallies == b._tallies && a._records == b._records;
    }

   private:
    std::string                  _title;
    std::size_t                  _cap = default_record_cap;
    std::map<std::string, Tally> _tallies;
    std::vector<LawRecord>       _records;
  };

}  // namespace gcentre
