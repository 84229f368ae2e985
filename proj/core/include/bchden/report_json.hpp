#pragma once

// JSON encodings of the scan reports. Big integers and rationals are emitted
// as decimal strings; each function returns one compact JSON object.

#include <string>

#include "bchden/bch.hpp"

namespace bchden {

/// {degree, alphabet, d_n, common_denominator, observed_lcm, minimal,
///  divisibility_ok, witness}
std::string to_json(const DenominatorReport& report);
std::string to_json(const CongruenceReport& report);
std::string to_json(const GoldbergDegree& result);

} // namespace bchden
