#include "ringlab/report.hpp"

#include <sstream>

#include "ringlab/bezout.hpp"
#include "ringlab/core.hpp"

namespace ringlab {

namespace {

std::string scalar_text(const Document& v) {
  if (v.is_string()) {
    std::string s;
    for (char c : v.get<std::string>()) s += c == '\n' ? std::string("\\n") : std::string(1, c);
    return s;
  }
  if (v.is_null()) return "null";
  return v.dump();
}

bool is_scalar_array(const Document& v) {
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void flatten_into(const Document& v, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
  auto child = [&](const std::string& k) { return key.empty() ? k : key + "." + k; };
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten_into(x, child(k), out);
  } else if (v.is_array() && is_scalar_array(v)) {
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : " ") + scalar_text(x);
    out.emplace_back(key, joined);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten_into(v[i], child(std::to_string(i)), out);
  } else {
    out.emplace_back(key, scalar_text(v));
  }
}

Document tri_value(Tri t) {
  if (t == Tri::True) return true;
  if (t == Tri::False) return false;
  return tri_name(t);
}

}  // namespace

Document new_document(const std::string& command, const std::string& ring) {
  Document d;
  d["schema"] = kSchemaVersion;
  d["command"] = command;
  d["ring"] = ring;
  return d;
}

Document classification_document(const ClassificationReport& report) {
  Document d = new_document("classify", report.ring);
  for (const auto& f : report.flags) d[f.name] = tri_value(f.value);
  d["jacobson_index"] = report.jacobson_index ? Document(*report.jacobson_index) : Document(nullptr);
  Document details = Document::object();
  for (const auto& f : report.flags) {
    Document e;
    e["note"] = f.note;
    e["scanned"] = f.scanned;
    e["sampled"] = f.sampled;
    e[f.value == Tri::False ? "counterwitness" : "witness"] = f.witness;
    details[f.name] = e;
  }
  d["details"] = details;
  return d;
}

Document suite_document(const SuiteResult& result) {
  Document d;
  d["suite"] = result.id;
  d["overall"] = outcome_name(result.overall());
  Document rings = Document::array();
  for (const auto& r : result.rings) {
    Document e;
    e["ring"] = r.ring;
    e["outcome"] = outcome_name(r.outcome);
    e["detail"] = r.detail;
    e["checked"] = r.checked;
    e["counterwitness"] = r.counterwitness;
    rings.push_back(e);
  }
  d["rings"] = rings;
  return d;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const NotClean*>(&e)) return "NotClean";
  if (dynamic_cast<const NotPrincipal*>(&e)) return "NotPrincipal";
  if (dynamic_cast<const DiagonalizationFailed*>(&e)) return "DiagonalizationFailed";
  if (dynamic_cast<const NotGelfand*>(&e)) return "NotGelfand";
  if (dynamic_cast<const NotLocal*>(&e)) return "NotLocal";
  if (dynamic_cast<const NotUnimodular*>(&e)) return "NotUnimodular";
  if (dynamic_cast<const WitnessNotFound*>(&e)) return "WitnessNotFound";
  if (dynamic_cast<const HypothesisViolated*>(&e)) return "HypothesisViolated";
  if (dynamic_cast<const DomainNegative*>(&e)) return "DomainNegative";
  if (dynamic_cast<const EnumerationCapExceeded*>(&e)) return "EnumerationCapExceeded";
  if (dynamic_cast<const DimensionCapExceeded*>(&e)) return "DimensionCapExceeded";
  if (dynamic_cast<const SearchCapExceeded*>(&e)) return "SearchCapExceeded";
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const InvalidSpec*>(&e)) return "InvalidSpec";
  if (dynamic_cast<const InfiniteEnumeration*>(&e)) return "InfiniteEnumeration";
  if (dynamic_cast<const UnsupportedRing*>(&e)) return "UnsupportedRing";
  if (dynamic_cast<const UnknownSuite*>(&e)) return "UnknownSuite";
  return "Error";
}

Document error_document(const std::string& command, const std::string& ring, const std::exception& e) {
  Document d = new_document(command, ring);
  d["error"] = error_kind(e);
  d["message"] = e.what();
  if (auto* nc = dynamic_cast<const NotClean*>(&e)) {
    d["counterwitness"] = Document::array({nc->element()});
    d["idempotents_tried"] = nc->idempotents_tried();
  } else if (auto* np = dynamic_cast<const NotPrincipal*>(&e)) {
    d["counterwitness"] = Document::array({np->a(), np->b()});
  } else if (auto* df = dynamic_cast<const DiagonalizationFailed*>(&e)) {
    d["counterwitness"] = Document::array({df->submatrix()});
  }
  return d;
}

std::vector<std::pair<std::string, std::string>> flatten(const Document& doc) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(doc, "", out);
  return out;
}

std::string emit_report(const Document& doc, bool json) {
  if (json) return doc.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [k, v] : flatten(doc)) os << k << ": " << v << "\n";
  return os.str();
}

}  // namespace ringlab
