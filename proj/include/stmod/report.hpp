#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stmod/graph.hpp"
#include "stmod/modulus.hpp"
#include "stmod/oracle.hpp"
#include "stmod/vulnerability.hpp"

// Rendering of results for the command line. Machine formats carry fractions
// as separate integers; text adds a decimal approximation.
namespace stmod::report {

/// {"num": n, "den": d}; each part is a JSON integer when it fits in 64 bits
/// and a decimal string otherwise.
nlohmann::json fraction_json(const Rational& r);
Rational fraction_from_json(const nlohmann::json& j);

nlohmann::json vulnerability_json(const MultiGraph& g, const std::vector<std::string>& labels,
                                  const CriticalSetResult& r);
std::string vulnerability_text(const MultiGraph& g, const std::vector<std::string>& labels,
                               const CriticalSetResult& r);

nlohmann::json modulus_json(const MultiGraph& g, const std::vector<std::string>& labels,
                            const ModulusResult& r);
std::string modulus_text(const MultiGraph& g, const std::vector<std::string>& labels,
                         const ModulusResult& r);
std::string modulus_csv(const MultiGraph& g, const std::vector<std::string>& labels,
                        const ModulusResult& r);

/// Categorical palette for eta* buckets, largest value first; cycles when
/// there are more buckets than colours.
const std::vector<std::string>& dot_palette();
std::string modulus_dot(const MultiGraph& g, const std::vector<std::string>& labels,
                        const ModulusResult& r);

/// Sum of squared eta entries of a modulus JSON document, inverted.
Rational modulus_from_eta_json(const nlohmann::json& doc);

std::string verification_text(const oracle::VerificationReport& report);

}  // namespace stmod::report
