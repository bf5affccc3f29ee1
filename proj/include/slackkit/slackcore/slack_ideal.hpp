#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "slackkit/groebner/ideal.hpp"
#include "slackkit/slackcore/slack_matrix.hpp"

namespace slackkit::slack {

using gb::Ideal;

/// All nonzero k-minors, monic, deduplicated, in lexicographic (rows, cols)
/// order of their first occurrence.
std::vector<Polynomial> minors(const SymbolicSlackMatrix& s, std::size_t k);

mpz_class countMinors(std::size_t d, std::size_t rows, std::size_t cols);
mpz_class countMinors(std::size_t d, const SymbolicSlackMatrix& s);

/// (d+2)-minors saturated by every variable in the matrix.
Ideal slackIdeal(std::size_t d, const SymbolicSlackMatrix& s);
Ideal slackIdeal(std::size_t d, const SlackMatrix& s);
/// For matroids d is replaced by rank - 1 of the homogenized points.
Ideal slackIdeal(const geom::PointConfiguration& v, Source object = Source::Polytope);

SlackMatrix slackFromGaleCircuits(const geom::GaleTransform& g);
SlackMatrix slackFromGalePlucker(const geom::GaleTransform& g,
                                 const std::vector<std::vector<std::size_t>>& cofacets);

Ideal graphicIdeal(const SymbolicSlackMatrix& s);

}  // namespace slackkit::slack
