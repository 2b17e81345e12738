/**
 * @file json_io.hpp
 * @brief JSON serialization and parsing for groups, 2-groups, monomial
 *        2-representations, scalars, matrices, and center-side reports.
 *
 * Conventions:
 *  - Scalars serialize as {"order": N, "coeffs": ["p/q", ...]} on the
 *    reduced-order basis of the cyclotomic field; parsers additionally
 *    accept plain integers and rational strings as shorthands.
 *  - Groups emit in the normalized table form {"kind": "table", "mul": ...};
 *    parsers also accept {"kind": "cyclic"} and {"kind": "product"} specs.
 *  - A 2-group is {"pi1": ..., "pi2": {"factors": [...]}, "action": [[...]],
 *    "alpha": {"entries": [[g,h,k,a], ...]}, "scalar_order": N} with omitted
 *    alpha entries defaulting to 0; a representation is {"n": ...,
 *    "perm": {"g": [...]}, "c": [[g,h,i,scalar]], "tau": [[g,a,i,scalar]]}
 *    with omitted scalar entries defaulting to 1.
 *  - Emission is deterministic and idempotent: re-parsing emitted text and
 *    emitting again reproduces the bytes.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "center.hpp"
#include "charfun.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "linalg.hpp"
#include "scalars.hpp"
#include "twogroup.hpp"
#include "twrep.hpp"

namespace twochar {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& value);
ordered_json scalar_to_json(const Cyclotomic& value);
Cyclotomic scalar_from_json(const ordered_json& j, const std::string& field);

ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const ordered_json& j, const std::string& field);

ordered_json group_to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const ordered_json& j, const std::string& field);

ordered_json two_group_to_json(const FiniteTwoGroup& tg);
FiniteTwoGroup two_group_from_json(const ordered_json& j);
/// Parses a whole JSON document (throws parse_error with context).
FiniteTwoGroup two_group_from_string(const std::string& text);

ordered_json rep_to_json(const MonomialTwoRep& rep);
MonomialTwoRep rep_from_json(const FiniteTwoGroup& tg, const ordered_json& j);

ordered_json class_functor_to_json(const ClassFunctor& f);
ordered_json center_object_to_json(const CenterObject& x);
ordered_json algebra_to_json(const AlgebraStructure& a);
ordered_json lagrangian_to_json(const LagrangianReport& report);

/// Canonical text form used everywhere: two-space indent plus final newline.
std::string dump_json(const ordered_json& j);

/// Wrapper around nlohmann parsing that converts failures to parse_error.
ordered_json parse_json(const std::string& text);

}  // namespace twochar
