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

// JSON encodings of instances, allocations, traces (JSONL) and verification
// reports. Writers are canonical: object keys sorted, item lists ascending,
// two-space indentation, trailing newline. All parse failures throw
// FormatError; table valuations that are not binary throw
// BinaryViolationError.

#ifndef EFX_IO_H_
#define EFX_IO_H_

#include <istream>
#include <string>

#include "json.hpp"
#include "efx/efx_core.h"
#include "efx/model.h"
#include "efx/verify.h"

namespace efx {

inline constexpr int kInstanceFormatVersion = 1;

nlohmann::json SpecToJson(const ValuationSpec& spec);
ValuationSpec SpecFromJson(const nlohmann::json& j, int num_items);

nlohmann::json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const nlohmann::json& j);
std::string SerializeInstance(const Instance& instance);
Instance ParseInstance(const std::string& text);
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

// {bundles, pool, usw, efx}; usw and efx are derived from the instance.
nlohmann::json AllocationToJson(const Instance& instance,
                                const PartialAllocation& allocation);
// Rejects files whose recorded usw/efx disagree with the recomputed values
// or whose bundles do not partition the items.
PartialAllocation AllocationFromJson(const Instance& instance,
                                     const nlohmann::json& j);
std::string SerializeAllocation(const Instance& instance,
                                const PartialAllocation& allocation);
PartialAllocation LoadAllocation(const Instance& instance,
                                 const std::string& path);
void SaveAllocation(const Instance& instance,
                    const PartialAllocation& allocation,
                    const std::string& path);

nlohmann::json TraceEventToJson(const TraceEvent& event);
TraceEvent TraceEventFromJson(const nlohmann::json& j);
// One compact JSON object per line.
std::string SerializeTrace(const Trace& trace);
Trace ParseTrace(std::istream& in);
Trace LoadTrace(const std::string& path);
void SaveTrace(const Trace& trace, const std::string& path);

nlohmann::json ReportToJson(const VerificationReport& report);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace efx

#endif  // EFX_IO_H_
