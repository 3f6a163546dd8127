#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hombax/check.hpp"

namespace hombax {

inline constexpr const char* kToolName = "hombax";
inline constexpr const char* kToolVersion = "0.1.0";

// Witness coordinates keep both the raw indices and the resolved labels;
// lhs/rhs are exact scalar strings.
nlohmann::ordered_json witness_to_json(const Witness& w,
                                       const std::vector<std::string>& basis);
nlohmann::ordered_json check_report_to_json(const CheckReport& r,
                                            const std::vector<std::string>& basis);

// Report skeleton: tool block plus command echo; callers append "checks",
// "overall" and "exit". Key order is fixed so identical runs are
// byte-identical.
nlohmann::ordered_json make_report(const std::vector<std::string>& command);

}  // namespace hombax
