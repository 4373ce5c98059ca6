#pragma once

#include <string>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/chain/express.hpp"
#include "invchain/chain/pipeline.hpp"
#include "invchain/groebner/ideal.hpp"
#include "invchain/lattice/int_matrix.hpp"

namespace invchain {

/// JSON documents. Variables are written in their text form ("(1,2)" or
/// "{1,1,2}"), monomials as [[variable, exponent], ...], binomials as
/// {"lead": monomial, "trail": monomial}, and integers of matrices as
/// decimal strings so that no precision is lost.
///
/// Every parse_* function throws InputError on malformed input.

std::string to_json(const Binomial& b);
Binomial parse_binomial_json(const std::string& text);

std::string to_json(const std::vector<Binomial>& bs);
std::vector<Binomial> parse_binomials_json(const std::string& text);

/// {"rows", "cols", "entries": [[...], ...], "labels": [...]}; labels only if present.
std::string to_json(const IntMatrix& m);
IntMatrix parse_matrix_json(const std::string& text);

/// {"order", "ring": [...], "elements": [...]}
std::string to_json(const GroebnerBasis& gb);
GroebnerBasis parse_gb_json(const std::string& text);

/// {"alpha", "original", "bound", "generators": [{"laurent", "binomial",
/// "source", "eta_kernel"}], "stats", "verified": {"6": true, ...}, "engine"}.
/// Run time is left out so that equal inputs give equal documents.
std::string to_json(const ChainGeneratorSet& set);
ChainGeneratorSet parse_chain_json(const std::string& text);

/// {"target", "terms": [{"sign", "coefficient", "sigma", "generator"}], "verified"}
std::string to_json(const EquivariantExpression& e);
EquivariantExpression parse_expression_json(const std::string& text);

/// Library name and version, recorded in cached documents.
std::string engine_version();

}  // namespace invchain
