#ifndef QEXTREMAL_REPORT_HPP
#define QEXTREMAL_REPORT_HPP

#include "qextremal/family.hpp"
#include "qextremal/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qx {

using Json = nlohmann::ordered_json;

/// Keys present in every single-instance report, in emission order.
const std::vector<std::string> &report_keys();

/// {"k": d, "rows": [[...], ...]}
Json subspace_json(const Subspace &s);

Json verification_json(const VerificationReport &v);

/// Report for `verify`: size and verdict; search-only keys are null.
Json verify_report_json(const Family &f, const VerificationReport &v,
                        const std::string &point_order_hash);

Json extremal_report_json(const std::string &command, const ExtremalReport &r);

/// {"command", "experiment", "instances": [...]}; failed instances carry
/// an "error" string instead of results.
Json batch_report_json(const std::string &command, const BatchReport &b);

/// "key: value" lines for a flat report; nested values are dumped as JSON.
std::string to_text(const Json &report);

} // namespace qx

#endif // QEXTREMAL_REPORT_HPP
