#pragma once

#include <string>

#include "bihom/bundle.hpp"

namespace bihom {

/// Canonical bundle document: JSON with sorted keys, sparse operation tables
/// keyed "bi,bj" whose values are linear-combination expressions over the
/// basis, dense column-convention matrices of scalar expressions. Emitting,
/// parsing and re-emitting is byte-identical.
std::string bundle_to_json(const AlgebraBundle& b);

/// Parses and validates a bundle document. Throws ParseError (with byte
/// offset) on malformed JSON or scalar expressions, ShapeError on structural
/// problems (unknown basis names, bad dimensions, missing ops for the kind).
AlgebraBundle bundle_from_json(const std::string& text);

/// Machine-readable report, mirroring ViolationReport one-to-one. Indices are
/// also rendered with the supplied basis names where they apply.
std::string report_to_json(const ViolationReport& rep, const std::vector<std::string>& basis);

std::string report_to_text(const ViolationReport& rep, const std::vector<std::string>& basis);

/// One linear combination "c1*b1 + ..." over the basis, canonical form.
std::string lincomb_to_string(const VectorS& v, const std::vector<std::string>& basis);

/// Parses a linear combination over params and basis names; basis elements
/// may be scaled and added but not multiplied, divided by, or exponentiated.
VectorS parse_lincomb(const std::string& text, const std::vector<std::string>& params,
                      const std::vector<std::string>& basis);

/// Specializes one parameter to an exact rational everywhere in the bundle
/// and drops it from the parameter list. Throws EvaluationError when a
/// denominator vanishes (an inadmissible specialization).
AlgebraBundle bundle_substitute(const AlgebraBundle& b, const std::string& param,
                                const Rational& value);

}  // namespace bihom
