#ifndef SHARPMEANS_REPORT_HPP
#define SHARPMEANS_REPORT_HPP

// JSON, aligned text and CSV renderings of results. Every printed number is
// an object {"value": "<decimal>", "digits": d} so readers know how many
// significant digits were emitted.

#include "sharpmeans/sharp_constants.hpp"
#include "sharpmeans/verifier.hpp"

#include "json.hpp"

#include <string>

namespace sharpmeans {

using Json = nlohmann::ordered_json;

Json number_json(const Real& v, int digits);
/// Reads {"value", "digits"} back at the given precision.
Real number_from_json(const Json& j, Real::Bits bits);

Json to_json(const VerificationReport& report, int digits);
VerificationReport verification_report_from_json(const Json& j, Real::Bits bits);
std::string to_text(const VerificationReport& report, int digits);

Json to_json(const SharpBoundReport& report, int bits, int digits);
std::string to_text(const SharpBoundReport& report, int digits);

Json to_json(const SignProfile& profile, int bits, int digits);
std::string to_text(const SignProfile& profile, int digits);
/// One row per grid sample: x, value, scale, sign.
std::string to_csv(const SignProfile& profile, int digits);

} // namespace sharpmeans

#endif // SHARPMEANS_REPORT_HPP
