#pragma once
// Report serialization, human tables and resumable sweeps for the CLI.

#include "reflect/report.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "reflect-rings/1";

Json report_json(const reflect::Report& r);
reflect::Report report_from_json(const Json& j);

// {"schema", "command", ...body}
Json envelope(const std::string& command, const Json& body);

// Human-readable rendering of an envelope.
std::string pretty(const Json& doc);

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

// Runs check(batch) over items in order, chunk by chunk.  With a state path the
// merged report and the processed prefix are saved after every chunk and a
// later run with the same command and params picks up where it stopped.
// max_chunks > 0 stops after that many chunks in this run.
struct SweepResult {
  reflect::Report report;
  std::size_t done = 0, total = 0;
  bool complete() const { return done == total; }
};
SweepResult resumable_sweep(const std::string& command, const Json& params, const std::vector<long>& items,
                            const std::function<reflect::Report(const std::vector<long>&)>& check,
                            const std::optional<std::string>& state_path, long max_chunks = 0,
                            std::size_t chunk = 32);

}  // namespace cli
