#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "permwreath/avoidance.hpp"
#include "permwreath/basis_search.hpp"

namespace permwreath {

// Append-only JSON-lines result store. Every line is one object
//   {"kind": ..., "schema_version": 1, "payload": {...}}
// Kinds written here: "basis_record" and "length_complete"; the latter marks a
// finished length of a basis search job and drives resume.

inline constexpr int kStoreSchemaVersion = 1;
inline constexpr const char* kStoreEnvVar = "PERMWREATH_STORE";

struct StoreLine {
  std::string kind;
  nlohmann::json payload = nlohmann::json::object();
  int schema_version = kStoreSchemaVersion;
  int line_number = 0;  // set by store_read
};

class StoreError : public Error {
 public:
  StoreError(const std::filesystem::path& path, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Appends one line and flushes.
void store_append(const std::filesystem::path& path, const StoreLine& line);

/// Every line of the store in file order; a missing file reads as empty.
/// An unparseable line is a hard error naming its line number.
std::vector<StoreLine> store_read(const std::filesystem::path& path);

/// Highest completed length per job key (0 if a job has none).
std::map<std::string, int> store_resume(const std::filesystem::path& path);

/// Identifies a basis search: "av(25134)|av(321)".
std::string job_key(const PermClass& x, const PermClass& y);

nlohmann::json to_json(const BasisRecord& record);
BasisRecord basis_record_from_json(const nlohmann::json& j);

StoreLine basis_record_line(const std::string& job, const BasisRecord& record);
StoreLine length_complete_line(const std::string& job, int length);

/// Basis records stored under a job key, in file order.
std::vector<BasisRecord> stored_records(const std::filesystem::path& path,
                                        const std::string& job);

}  // namespace permwreath
