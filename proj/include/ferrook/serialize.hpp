#pragma once

#include "ferrook/bounds.hpp"
#include "ferrook/census.hpp"
#include "ferrook/construct.hpp"
#include "ferrook/counting.hpp"
#include "ferrook/polynomial.hpp"
#include "ferrook/sampling.hpp"

#include <json.hpp>

namespace ferrook {

using Json = nlohmann::ordered_json;

// Big integers are emitted as decimal strings so no precision is lost.

/// {"<exponent>": "<coefficient>", ...} over nonzero terms
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const DiagonalProfile& p);
Json to_json(const KappaReport& k);

/// {diagram, d, kappa, kappa_vector, diag_sum_all, diag_sum_first_m, tau,
///  mds_constructible, density_class_at: {k: class}} with k = 1..kappa(F, d)
Json verdict_json(const FerrersDiagram& f, int d);

Json to_json(const EquivalenceReport& e);
Json to_json(const RankCensus& c);
Json to_json(const DensityReport& r);
Json to_json(const CountReport& r);
Json to_json(const ChainReport& r);
Json to_json(const RSCode& c);
Json to_json(const SpaceVerdict& v);

/// Sparse basis {"i,j": value} plus {q, d, diagram, dimension, kappa, optimal,
/// transposed, blocks}. Field elements use the FieldTable encoding.
Json to_json(const ConstructedSpace& s);
/// Inverse of to_json(ConstructedSpace); validates cells against the diagram.
ConstructedSpace space_from_json(const Json& j);

}  // namespace ferrook
