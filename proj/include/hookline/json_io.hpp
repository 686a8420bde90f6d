#pragma once

#include <json.hpp>

#include "hookline/harness.hpp"
#include "hookline/qpoly.hpp"
#include "hookline/subset_poly.hpp"
#include "hookline/verify.hpp"

namespace hookline {

using Json = nlohmann::ordered_json;

Json to_json(const QPoly& p);          // {"var":"q","coeffs":[...]}
Json to_json(const SubsetPoly& p);     // [{"vars":[j,...],"coeff":c}, ...]
Json to_json(const DistributionTable& t);
Json to_json(const ChainTrace& t);
Json to_json(const VerificationReport& r);

QPoly qpoly_from_json(const Json& j);
SubsetPoly subset_poly_from_json(const Json& j);

/// Header row then one line per row: value,count[,closed_form].
std::string to_csv(const DistributionTable& t);

}  // namespace hookline
