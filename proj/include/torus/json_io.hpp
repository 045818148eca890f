#pragma once

#include <string>

#include "json.hpp"
#include "torus/curve.hpp"
#include "torus/dependence.hpp"
#include "torus/dynamics.hpp"
#include "torus/sieve.hpp"
#include "torus/witness.hpp"

namespace torus::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "torus-points/1";

/// Arbitrary-precision values travel as decimal strings.
Json to_json(const Int& n);
Json to_json(const Rat& q);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<IntVector>& rows);
Json to_json(const CycloRational& c);
Json to_json(const TorusPoint& p);
Json to_json(const Lattice& l);
Json to_json(const AlgebraicSubgroup& h);
Json to_json(const GramDet& g);
Json to_json(const RatPoly& f);

/// Doubles rounded to 12 significant digits.
Json real(double x);

Json to_json(const GroupDecomposition& d);
Json to_json(const GammaDecomposition& d);
Json to_json(const WitnessResult& w);
Json to_json(const Intersection& r);
Json to_json(const SieveReport& r);
Json to_json(const DivisorTable& t);
Json to_json(const CosetContainment& c);
Json to_json(const CharacterSearch& s);
Json to_json(const CanonicalHeightEstimate& e);
Json to_json(const Classification& c);
Json to_json(const PeriodicIntersectionReport& r);

/// "[[1,2],[3,4]]"; entries are JSON integers or decimal strings.  `ambient`
/// fixes the column count for an empty list.  Throws ParseError.
IntMatrix parse_int_matrix(const std::string& text, std::size_t ambient = 0);
IntVector parse_int_vector(const std::string& text);

/// Per-coordinate generator lists separated by ';', generators by ','; an
/// empty list is allowed ("2;" is <2> on the first coordinate only).
GammaGroup parse_gamma(const std::string& text, std::size_t ambient,
                       std::uint64_t trial_bound = kDefaultTrialBound);

}  // namespace torus::io
