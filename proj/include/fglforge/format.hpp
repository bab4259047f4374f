#pragma once

// Shared pieces of the canonical printer.

#include <string>
#include <vector>

namespace fglforge {

/// "c*mono" with the usual elisions ("beta", "-beta", "(1 + beta)*x").
std::string format_term(const std::string& coeff, const std::string& mono);
/// Joins signed terms with " + " / " - "; the empty sum prints as "0".
std::string join_terms(const std::vector<std::string>& terms);
/// "name", "name^e", or "" for e == 0.
std::string power_string(const std::string& name, int e);

}  // namespace fglforge
