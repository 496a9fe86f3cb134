/*
   Copyright 2026 The ribboncheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


/**
 * @file obstruct.hpp
 * @brief Divisibility obstruction to homotopy ribbon concordance.
 *
 * If J is homotopy ribbon concordant to L then Delta_L divides Delta_J.
 * A failed division is therefore a certificate that no such concordance
 * J -> L exists. A successful division proves nothing about existence.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "alexander.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "linkcodec.hpp"

namespace ribboncheck {

enum class Verdict { Obstructed, NotObstructed };

enum class VerdictReason {
    Divisibility,           ///< decided by Delta_L | Delta_J
    ComponentCountMismatch  ///< J and L have different numbers of components
};

struct ObstructionReport {
    std::pair<std::string, std::string> direction{"J", "L"};
    AlexanderPolynomial deltaJ;
    AlexanderPolynomial deltaL;
    Verdict verdict = Verdict::Obstructed;
    VerdictReason reason = VerdictReason::Divisibility;
    /// Canonical Delta_J / Delta_L when the division is exact.
    std::optional<LaurentPoly> quotient;
    /// Canonical gcd(Delta_J, Delta_L); absent on component mismatch.
    std::optional<LaurentPoly> gcdValue;
};

/// Verdict from already computed polynomials. Component mismatch yields an
/// Obstructed report with reason ComponentCountMismatch.
inline ObstructionReport obstruction_report(const AlexanderPolynomial& deltaJ, const AlexanderPolynomial& deltaL,
                                            std::pair<std::string, std::string> direction = {"J", "L"}) {
    ObstructionReport r;
    r.direction = std::move(direction);
    r.deltaJ = deltaJ;
    r.deltaL = deltaL;
    if (deltaJ.variables != deltaL.variables) {
        r.reason = VerdictReason::ComponentCountMismatch;
        return r;
    }
    r.gcdValue = gcd(deltaJ.value, deltaL.value);
    if (auto q = exact_divide(deltaJ.value, deltaL.value)) {
        if (!associates(deltaL.value * *q, deltaJ.value)) throw ComputationError("division witness does not verify");
        r.quotient = canonicalize(*q);
        r.verdict = Verdict::NotObstructed;
    }
    return r;
}

/// Throws DomainError when the component counts differ.
inline ObstructionReport ribbon_obstruction(const LinkDiagram& j, const LinkDiagram& l) {
    if (j.componentCount != l.componentCount)
        throw DomainError("component counts differ (" + std::to_string(j.componentCount) + " vs " +
                          std::to_string(l.componentCount) + "); concordance preserves component count");
    return obstruction_report(alexander_polynomial(j), alexander_polynomial(l));
}

inline LaurentPoly coprimality_report(const LinkDiagram& j, const LinkDiagram& l) {
    if (j.componentCount != l.componentCount) throw DomainError("component counts differ");
    return gcd(alexander_polynomial(j).value, alexander_polynomial(l).value);
}

inline std::string to_string(Verdict v) { return v == Verdict::Obstructed ? "obstructed" : "not_obstructed"; }

inline nlohmann::ordered_json to_json(const ObstructionReport& r) {
    nlohmann::ordered_json j;
    j["direction"] = {r.direction.first, r.direction.second};
    j["deltaJ"] = to_string(r.deltaJ.value);
    j["deltaL"] = to_string(r.deltaL.value);
    j["verdict"] = to_string(r.verdict);
    j["quotient"] = r.quotient ? nlohmann::ordered_json(to_string(*r.quotient)) : nlohmann::ordered_json(nullptr);
    j["gcd"] = r.gcdValue ? nlohmann::ordered_json(to_string(*r.gcdValue)) : nlohmann::ordered_json(nullptr);
    if (r.reason == VerdictReason::ComponentCountMismatch) j["reason"] = "component_count_mismatch";
    return j;
}

/// One-line human-readable verdict.
inline std::string describe(const ObstructionReport& r) {
    const std::string& J = r.direction.first;
    const std::string& L = r.direction.second;
    if (r.reason == VerdictReason::ComponentCountMismatch)
        return "OBSTRUCTED: " + J + " and " + L + " have different component counts (" +
               std::to_string(r.deltaJ.variables) + " vs " + std::to_string(r.deltaL.variables) + ")";
    if (r.verdict == Verdict::Obstructed)
        return "OBSTRUCTED: Delta_" + L + " does not divide Delta_" + J + "; no homotopy ribbon concordance " + J +
               " >= " + L;
    return "not obstructed (quotient: " + to_string(*r.quotient) + ")";
}

}  // namespace ribboncheck
