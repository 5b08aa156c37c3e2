#pragma once

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/suites.hpp"

namespace ringlab {

// Report documents keep insertion order, so both output modes are stable.
using Document = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Document new_document(const std::string& command, const std::string& ring);
Document classification_document(const ClassificationReport& report);
Document suite_document(const SuiteResult& result);
// "error" is the exception class name, "message" its text.
Document error_document(const std::string& command, const std::string& ring, const std::exception& e);
std::string error_kind(const std::exception& e);

// Human mode: one "key: value" line per scalar.  Nested objects use dotted
// keys, arrays of scalars are joined by spaces, other arrays use indexes.
std::vector<std::pair<std::string, std::string>> flatten(const Document& doc);
std::string emit_report(const Document& doc, bool json);

}  // namespace ringlab
