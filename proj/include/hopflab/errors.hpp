#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

enum class errc {
    field_mismatch,
    not_invertible,
    antipode_not_invertible,
    not_a_cocycle,
    not_lazy,
    not_colinear,
    not_an_r_form,
    not_matched,
    nontrivial_actions,
    not_a_hopf_map,
    not_lazy_algebra_map,
    char_two,
    invalid_datum,
    incompatible_triplet,
    not_invariant,
    not_symmetric,
    axiom_failure,
    parse_error,
    shape_mismatch,
    search_space_too_large,
    no_generator_data,
    incomplete_witness_set,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::field_mismatch: return "FieldMismatch";
        case errc::not_invertible: return "NotInvertible";
        case errc::antipode_not_invertible: return "AntipodeNotInvertible";
        case errc::not_a_cocycle: return "NotACocycle";
        case errc::not_lazy: return "NotLazy";
        case errc::not_colinear: return "NotColinear";
        case errc::not_an_r_form: return "NotAnRForm";
        case errc::not_matched: return "NotMatched";
        case errc::nontrivial_actions: return "NontrivialActions";
        case errc::not_a_hopf_map: return "NotAHopfMap";
        case errc::not_lazy_algebra_map: return "NotLazyAlgebraMap";
        case errc::char_two: return "CharTwo";
        case errc::invalid_datum: return "InvalidDatum";
        case errc::incompatible_triplet: return "IncompatibleTriplet";
        case errc::not_invariant: return "NotInvariant";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::axiom_failure: return "AxiomFailure";
        case errc::parse_error: return "ParseError";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::no_generator_data: return "NoGeneratorData";
        case errc::incomplete_witness_set: return "IncompleteWitnessSet";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) raise(code, what);
}

} // namespace hopflab
