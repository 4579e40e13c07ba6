#include "vrseq/rspec_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vrseq/errors.hpp"

namespace vrseq {

namespace {

using nlohmann::json;

std::vector<std::int64_t> int_list(const json& j, const char* field) {
  if (!j.is_array()) {
    throw ParseError(std::string("spec field '") + field +
                     "' must be an array of integers");
  }
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("spec field '") + field +
                       "' must contain integers only");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

TableTail tail_from_string(const std::string& s) {
  if (s == "repeat_last") return TableTail::RepeatLast;
  if (s == "clamp_to_one") return TableTail::ClampToOne;
  if (s == "error_past_end") return TableTail::ErrorPastEnd;
  throw ParseError("unknown table tail rule: '" + s + "'");
}

std::string tail_to_string(TableTail t) {
  switch (t) {
    case TableTail::RepeatLast:
      return "repeat_last";
    case TableTail::ClampToOne:
      return "clamp_to_one";
    case TableTail::ErrorPastEnd:
      return "error_past_end";
  }
  return "error_past_end";
}

}  // namespace

RSpec rspec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid spec JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("spec JSON must be an object with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  const bool sublinear = j.value("sublinear", true);

  if (kind == "constant") {
    if (!j.contains("value") || !j["value"].is_number_integer()) {
      throw ParseError("constant spec needs an integer 'value'");
    }
    return RSpec::constant(j["value"].get<std::int64_t>(), sublinear);
  }
  if (kind == "identity") {
    return RSpec::identity();
  }
  if (kind == "table") {
    if (!j.contains("values")) throw ParseError("table spec needs 'values'");
    TableTail tail = TableTail::ErrorPastEnd;
    if (j.contains("tail")) {
      if (!j["tail"].is_string()) throw ParseError("'tail' must be a string");
      tail = tail_from_string(j["tail"].get<std::string>());
    }
    return RSpec::table(int_list(j["values"], "values"), tail, sublinear);
  }
  if (kind == "periodic") {
    if (!j.contains("cycle")) throw ParseError("periodic spec needs 'cycle'");
    std::vector<std::int64_t> prefix;
    if (j.contains("prefix")) prefix = int_list(j["prefix"], "prefix");
    return RSpec::periodic(std::move(prefix), int_list(j["cycle"], "cycle"),
                           sublinear);
  }
  if (kind == "indicator") {
    if (!j.contains("set")) throw ParseError("indicator spec needs 'set'");
    const auto& set = j["set"];
    if (set.is_string()) {
      const std::string s = set.get<std::string>();
      if (s == "powers_of_two")
        return RSpec::indicator(IndicatorFamily::PowersOfTwo);
      if (s == "towers") return RSpec::indicator(IndicatorFamily::Towers);
      throw ParseError("unknown indicator set: '" + s + "'");
    }
    return RSpec::indicator(IndicatorFamily::Explicit, int_list(set, "set"));
  }
  if (kind == "custom_step") {
    if (!j.contains("offsets"))
      throw ParseError("custom_step spec needs 'offsets'");
    std::vector<std::int64_t> prefix;
    if (j.contains("prefix")) prefix = int_list(j["prefix"], "prefix");
    std::int64_t slope = 1;
    if (j.contains("slope")) {
      if (!j["slope"].is_number_integer())
        throw ParseError("'slope' must be an integer");
      slope = j["slope"].get<std::int64_t>();
    }
    return RSpec::custom_step(std::move(prefix), slope,
                              int_list(j["offsets"], "offsets"), sublinear);
  }
  throw ParseError("unknown spec kind: '" + kind + "'");
}

std::string rspec_to_json(const RSpec& spec) {
  json j;
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          j["kind"] = "constant";
          j["value"] = k.value;
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          j["kind"] = "identity";
        } else if constexpr (std::is_same_v<K, TableKind>) {
          j["kind"] = "table";
          j["values"] = k.values;
          j["tail"] = tail_to_string(k.tail);
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          j["kind"] = "periodic";
          j["prefix"] = k.prefix;
          j["cycle"] = k.cycle;
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          j["kind"] = "indicator";
          switch (k.family) {
            case IndicatorFamily::PowersOfTwo:
              j["set"] = "powers_of_two";
              break;
            case IndicatorFamily::Towers:
              j["set"] = "towers";
              break;
            case IndicatorFamily::Explicit:
              j["set"] = k.members;
              break;
          }
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          j["kind"] = "custom_step";
          j["prefix"] = k.prefix;
          j["slope"] = k.slope;
          j["offsets"] = k.offsets;
        }
      },
      spec.kind());
  if (!spec.sublinear()) j["sublinear"] = false;
  return j.dump();
}

RSpec rspec_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open spec file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return rspec_from_json(buf.str());
}

}  // namespace vrseq
