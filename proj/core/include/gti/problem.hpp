#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gti/indicators.hpp"

namespace gti {

/// A parsed problem document: the group-theoretical data plus run options.
/// `product` is set when the group was given as a direct product (needed for
/// the diagonal subgroup and the double construction literal).
struct ProblemSpec {
    GroupTheoreticalData data;
    std::optional<DirectProduct> product;
    TableOptions options;
    nlohmann::json raw; // original document (omega literal is reused by adapt)
};

GroupPtr parse_group(const nlohmann::json& j, std::optional<DirectProduct>* product = nullptr);

/// Parse a cochain literal of the given arity on g. `product` enables the
/// {"type":"double"} literal.
Cochain parse_cochain(const nlohmann::json& j, const GroupPtr& g, int arity,
                      const std::optional<DirectProduct>& product = std::nullopt);

ProblemSpec parse_problem(const nlohmann::json& j);
ProblemSpec parse_problem_text(const std::string& text);

/// Command bodies shared by the CLI and the tests. All return the printable
/// report; failures surface as the library's typed exceptions.
std::string cmd_validate(const ProblemSpec& spec);
std::string cmd_simples(const ProblemSpec& spec);
IndicatorTable cmd_indicators(const ProblemSpec& spec);
IndicatorTable cmd_double(const ProblemSpec& spec);
std::string cmd_adapt(const ProblemSpec& spec);
std::string cmd_predict_twist(const ProblemSpec& spec);
std::string cmd_index_two(const ProblemSpec& spec);

} // namespace gti
