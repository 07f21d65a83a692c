#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcentre {

  enum class errc {
    duplicate_element,
    missing_table_entry,
    unknown_element,
    associativity_violation,
    unit_violation,
    antisymmetry_violation,
    monotonicity_violation,
    unmapped_element,
    not_absorbing,
    not_top,
    component_missing,
    unknown_name,
    grade_not_central,
    element_not_in_carrier,
    centrality_violation,
    not_a_submonad,
    alphabet_mismatch,
    closure_explosion,
    bimonoid_mismatch,
    not_commutative,
    syntax_error,
    unknown_primitive,
    unbound_variable,
    unknown_grade,
    grading_mismatch,
    shape_mismatch,
    parse_error,
    unknown_subcommand,
    file_not_found,
  };

  inline std::string_view errc_name(errc e) {
    switch (e) {
      case errc::duplicate_element: return "DuplicateElement";
      case errc::missing_table_entry: return "MissingTableEntry";
      case errc::unknown_element: return "UnknownElement";
      case errc::associativity_violation: return "AssociativityViolation";
      case errc::unit_violation: return "UnitViolation";
      case errc::antisymmetry_violation: return "AntisymmetryViolation";
      case errc::monotonicity_violation: return "MonotonicityViolation";
      case errc::unmapped_element: return "UnmappedElement";
      case errc::not_absorbing: return "NotAbsorbing";
      case errc::not_top: return "NotTop";
      case errc::component_missing: return "ComponentMissing";
      case errc::unknown_name: return "UnknownName";
      case errc::grade_not_central: return "GradeNotCentral";
      case errc::element_not_in_carrier: return "ElementNotInCarrier";
      case errc::centrality_violation: return "CentralityViolation";
      case errc::not_a_submonad: return "NotASubmonad";
      case errc::alphabet_mismatch: return "AlphabetMismatch";
      case errc::closure_explosion: return "ClosureExplosion";
      case errc::bimonoid_mismatch: return "BimonoidMismatch";
      case errc::not_commutative: return "NotCommutative";
      case errc::syntax_error: return "SyntaxError";
      case errc::unknown_primitive: return "UnknownPrimitive";
      case errc::unbound_variable: return "UnboundVariable";
      case errc::unknown_grade: return "UnknownGrade";
      case errc::grading_mismatch: return "GradingMismatch";
      case errc::shape_mismatch: return "ShapeMismatch";
      case errc::parse_error: return "ParseError";
      case errc::unknown_subcommand: return "UnknownSubcommand";
      case errc::file_not_found: return "FileNotFound";
    }
    return "Unknown";
  }

  // Every failure raised by the library carries one of the codes above; the
  // message holds the witness.
  class error : public std::runtime_error {
   public:
    error(errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code) {}

    errc code() const noexcept {
      return _code;
    }

   private:
    errc _code;
  };

}  // namespace gcentre
