#pragma once

#include "g2holo/geometry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace g2holo {

/// Lie algebra file: {"dim": n, "brackets": [{"i": i, "j": j,
/// "c": {"k": scalar-token, ...}}, ...]}; unlisted pairs commute; indices
/// are 1-based in the file. Throws std::runtime_error on malformed input.
QLieAlgebra lie_algebra_from_json(const std::string& text);
std::string lie_algebra_to_json(const QLieAlgebra& g);

/// Gram override file: an n x n nested array of scalar tokens.
QMat gram_from_json(const std::string& text);
std::string gram_to_json(const QMat& m);

/// Matrix span file: {"dim": n, "matrices": [[n*n row-major tokens], ...]}.
std::vector<QMat> matrix_span_from_json(const std::string& text);
std::string matrix_span_to_json(const std::vector<QMat>& mats, int n);

/// Three-form file: [{"ijk": [i,j,k], "c": scalar-token}, ...] with 1-based
/// strictly increasing triples; omitted triples are zero.
QThreeForm three_form_from_json(const std::string& text);
std::string three_form_to_json(const QThreeForm& w);

/// Row-major token list of a matrix (the text rendering used in reports).
std::vector<std::string> matrix_tokens(const QMat& m);

}  // namespace g2holo
