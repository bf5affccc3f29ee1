#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slackkit/exactmath/matrix.hpp"
#include "slackkit/groebner/ideal.hpp"
#include "slackkit/scalereduce/reduce.hpp"
#include "slackkit/slackcore/slack_matrix.hpp"

namespace slackkit::io {

enum class Format { Auto, Text, Json };

Format parseFormat(std::string_view name);

// Text: whitespace-separated tokens, one row per line, blank lines ignored.
// Json: an array of arrays of rational strings (integers are also accepted).
exact::RationalMatrix parseMatrix(std::string_view input, Format format = Format::Auto);
std::vector<std::vector<bool>> parsePattern(std::string_view input, Format format = Format::Auto);

std::string formatMatrix(const exact::RationalMatrix& m, Format format);

// Symbolic matrices use the tokens 0, 1 and xK.
slack::SymbolicSlackMatrix parseSymbolic(std::string_view input, Format format = Format::Auto);
std::string formatSymbolic(const slack::SymbolicSlackMatrix& s, Format format);

// {"order": ..., "nvars": n, "generators": [...]}
gb::Ideal parseIdeal(std::string_view input);
std::string formatIdeal(const gb::Ideal& ideal, Format format);

std::string formatCertificate(const scale::Certificate& c);

}  // namespace slackkit::io
