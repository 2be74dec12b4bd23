// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efx/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "efx/errors.h"

namespace efx {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

// Strictly increasing after sorting; duplicates and out-of-range indices are
// rejected.
std::vector<int> ItemList(const json& j, int num_items, const char* what) {
  if (!j.is_array()) {
    throw FormatError(std::string(what) + " must be an array of item indices");
  }
  std::vector<int> items;
  for (const json& e : j) {
    if (!e.is_number_integer()) {
      throw FormatError(std::string(what) + " must contain integers");
    }
    const int item = e.get<int>();
    if (item < 0 || item >= num_items) {
      throw FormatError(std::string(what) + ": item index " +
                        std::to_string(item) + " out of range [0, " +
                        std::to_string(num_items) + ")");
    }
    items.push_back(item);
  }
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
    throw FormatError(std::string(what) + " lists an item twice");
  }
  return items;
}

std::vector<int> Sorted(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  return items;
}

json OptionalInt(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<int> OptionalIntField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + key +
                      "\" must be an integer or null");
  }
  return v.get<int>();
}

std::vector<int> IntArray(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_array()) {
    throw FormatError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw FormatError(std::string("field \"") + key +
                        "\" must contain integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

json SpecToJson(const ValuationSpec& spec) {
  return std::visit(
      Overloaded{
          [](const AdditiveSpec& s) {
            return json{{"family", "additive"}, {"liked", Sorted(s.liked)}};
          },
          [](const ThresholdSpec& s) {
            return json{{"family", "threshold"},
                        {"set", Sorted(s.set)},
                        {"k", s.k}};
          },
          [](const CappedSpec& s) {
            return json{{"family", "capped"},
                        {"liked", Sorted(s.liked)},
                        {"cap", s.cap}};
          },
          [](const MatroidRankSpec& s) {
            json parts = json::array();
            for (const auto& part : s.parts) parts.push_back(Sorted(part));
            return json{
                {"family", "matroid_rank"}, {"parts", parts}, {"caps", s.caps}};
          },
          [](const TableSpec& s) {
            json values = json::object();
            for (size_t mask = 0; mask < s.values.size(); ++mask) {
              values[std::to_string(mask)] = s.values[mask];
            }
            return json{{"family", "table"}, {"values", values}};
          }},
      spec);
}

ValuationSpec SpecFromJson(const json& j, int num_items) {
  const json& family_field = Field(j, "family");
  if (!family_field.is_string()) throw FormatError("family must be a string");
  const std::string family = family_field.get<std::string>();
  if (family == "additive") {
    return AdditiveSpec{ItemList(Field(j, "liked"), num_items, "liked")};
  }
  if (family == "threshold") {
    return ThresholdSpec{ItemList(Field(j, "set"), num_items, "set"),
                         IntField(j, "k")};
  }
  if (family == "capped") {
    return CappedSpec{ItemList(Field(j, "liked"), num_items, "liked"),
                      IntField(j, "cap")};
  }
  if (family == "matroid_rank") {
    MatroidRankSpec spec;
    const json& parts = Field(j, "parts");
    if (!parts.is_array()) throw FormatError("parts must be an array");
    for (const json& part : parts) {
      spec.parts.push_back(ItemList(part, num_items, "part"));
    }
    spec.caps = IntArray(j, "caps");
    return spec;
  }
  if (family == "table") {
    if (num_items > kMaxTableItems) {
      throw FormatError("table valuations support at most " +
                        std::to_string(kMaxTableItems) + " items");
    }
    const json& values = Field(j, "values");
    if (!values.is_object()) throw FormatError("table values must be an object");
    const size_t subsets = size_t{1} << num_items;
    TableSpec spec;
    spec.values.resize(subsets);
    for (size_t mask = 0; mask < subsets; ++mask) {
      const std::string key = std::to_string(mask);
      if (!values.contains(key)) {
        throw FormatError("table is missing subset key \"" + key + "\"");
      }
      const json& v = values.at(key);
      if (!v.is_number_integer()) {
        throw FormatError("table value for \"" + key + "\" must be an integer");
      }
      spec.values[mask] = v.get<int>();
    }
    if (values.size() != subsets) {
      throw FormatError("table has keys outside [0, 2^m)");
    }
    return spec;
  }
  throw FormatError("unknown valuation family \"" + family + "\"");
}

json InstanceToJson(const Instance& instance) {
  json agents = json::array();
  for (int i = 0; i < instance.num_agents(); ++i) {
    agents.push_back(SpecToJson(instance.spec(i)));
  }
  return json{{"version", kInstanceFormatVersion},
              {"n", instance.num_agents()},
              {"m", instance.num_items()},
              {"agents", agents}};
}

Instance InstanceFromJson(const json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  if (IntField(j, "version") != kInstanceFormatVersion) {
    throw FormatError("unsupported instance version");
  }
  const int n = IntField(j, "n");
  const int m = IntField(j, "m");
  if (n < 1) throw FormatError("n must be positive");
  if (m < 0 || m > kMaxItems) throw FormatError("m out of range");
  const json& agents = Field(j, "agents");
  if (!agents.is_array() || static_cast<int>(agents.size()) != n) {
    throw FormatError("agents must be an array of exactly n specs");
  }
  std::vector<ValuationSpec> specs;
  for (const json& a : agents) specs.push_back(SpecFromJson(a, m));
  try {
    return Instance(m, std::move(specs));
  } catch (const UsageError& e) {
    throw FormatError(e.what());
  }
}

std::string SerializeInstance(const Instance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

Instance ParseInstance(const std::string& text) {
  return InstanceFromJson(Parse(text));
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

void SaveInstance(const Instance& instance, const std::string& path) {
  WriteFile(path, SerializeInstance(instance));
}

json AllocationToJson(const Instance& instance,
                      const PartialAllocation& allocation) {
  json bundles = json::array();
  for (const Bundle& b : allocation.bundles) bundles.push_back(b.items());
  return json{{"bundles", bundles},
              {"pool", allocation.pool.items()},
              {"usw", Usw(instance, allocation)},
              {"efx", IsEfx(instance, allocation)}};
}

PartialAllocation AllocationFromJson(const Instance& instance, const json& j) {
  const int m = instance.num_items();
  const json& bundles = Field(j, "bundles");
  if (!bundles.is_array() ||
      static_cast<int>(bundles.size()) != instance.num_agents()) {
    throw FormatError("bundles must be an array of exactly n item lists");
  }
  PartialAllocation allocation;
  for (const json& b : bundles) {
    allocation.bundles.push_back(
        Bundle::FromItems(m, ItemList(b, m, "bundle")));
  }
  allocation.pool = Bundle::FromItems(m, ItemList(Field(j, "pool"), m, "pool"));
  if (auto error = allocation.PartitionError(instance)) {
    throw FormatError("allocation is not a partition: " + *error);
  }
  if (j.contains("usw") && j.at("usw") != Usw(instance, allocation)) {
    throw FormatError("recorded usw does not match the instance");
  }
  if (j.contains("efx") && j.at("efx") != IsEfx(instance, allocation)) {
    throw FormatError("recorded efx flag does not match the instance");
  }
  return allocation;
}

std::string SerializeAllocation(const Instance& instance,
                                const PartialAllocation& allocation) {
  return AllocationToJson(instance, allocation).dump(2) + "\n";
}

PartialAllocation LoadAllocation(const Instance& instance,
                                 const std::string& path) {
  return AllocationFromJson(instance, Parse(ReadFile(path)));
}

void SaveAllocation(const Instance& instance,
                    const PartialAllocation& allocation,
                    const std::string& path) {
  WriteFile(path, SerializeAllocation(instance, allocation));
}

json TraceEventToJson(const TraceEvent& event) {
  return json{{"step", event.step},
              {"kind", EventKindName(event.kind)},
              {"item", OptionalInt(event.item)},
              {"agent", OptionalInt(event.agent)},
              {"cycle", event.cycle},
              {"safe_bundle", event.safe_bundle},
              {"returned_items", event.returned_items},
              {"usw_after", event.usw_after}};
}

TraceEvent TraceEventFromJson(const json& j) {
  if (!j.is_object()) throw FormatError("trace event must be an object");
  TraceEvent event;
  const json& step = Field(j, "step");
  if (!step.is_number_integer()) throw FormatError("step must be an integer");
  event.step = step.get<int64_t>();
  const json& kind = Field(j, "kind");
  if (kind == "U0") {
    event.kind = EventKind::kU0;
  } else if (kind == "U1") {
    event.kind = EventKind::kU1;
  } else if (kind == "CycleElim") {
    event.kind = EventKind::kCycleElim;
  } else {
    throw FormatError("unknown event kind " + kind.dump());
  }
  event.item = OptionalIntField(j, "item");
  event.agent = OptionalIntField(j, "agent");
  event.cycle = IntArray(j, "cycle");
  event.safe_bundle = IntArray(j, "safe_bundle");
  event.returned_items = IntArray(j, "returned_items");
  event.usw_after = IntField(j, "usw_after");
  return event;
}

std::string SerializeTrace(const Trace& trace) {
  std::string out;
  for (const TraceEvent& event : trace) {
    out += TraceEventToJson(event).dump();
    out += "\n";
  }
  return out;
}

Trace ParseTrace(std::istream& in) {
  Trace trace;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      trace.push_back(TraceEventFromJson(Parse(line)));
    } catch (const FormatError& e) {
      throw FormatError("trace line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  return trace;
}

Trace LoadTrace(const std::string& path) {
  std::istringstream in(ReadFile(path));
  return ParseTrace(in);
}

void SaveTrace(const Trace& trace, const std::string& path) {
  WriteFile(path, SerializeTrace(trace));
}

json ReportToJson(const VerificationReport& report) {
  json violations = json::array();
  for (const Finding& f : report.violations) {
    json entry{{"kind", f.kind},
               {"agents", f.agents},
               {"items", f.items},
               {"values", f.values},
               {"message", f.message}};
    entry["step"] = f.step ? json(*f.step) : json(nullptr);
    violations.push_back(std::move(entry));
  }
  return json{{"passed", report.passed}, {"violations", violations}};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
  if (!out) throw FormatError("failed writing " + path);
}

}  // namespace efx
