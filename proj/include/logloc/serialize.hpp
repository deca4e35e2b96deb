#pragma once

#include "logloc/eq_scalar.hpp"
#include "logloc/locus_class.hpp"
#include "logloc/localizer.hpp"
#include "logloc/logmonoid.hpp"
#include "logloc/splitloci.hpp"

#include <json.hpp>

namespace logloc::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "logloc/1";

Json to_json(const Rational& q);
Json to_json(const eq::EqScalar& s);
Json to_json(const eq::LocusClass& c);
Json to_json(const logmonoid::UnitRoot& u);
Json to_json(const logmonoid::ContactMatrix& cm);
Json to_json(const logmonoid::LogHom& h);
Json to_json(const splitloci::DiscreteData& gamma);
Json to_json(const splitloci::SplitData& sd);
Json to_json(const splitloci::LocusLabel& label);
Json to_json(const localizer::LocusContribution& c);

Rational rational_from_json(const Json& j);
eq::EqScalar eq_scalar_from_json(const Json& j);
eq::LocusClass locus_class_from_json(const Json& j);

}  // namespace logloc::io
