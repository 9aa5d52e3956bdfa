#include "permwreath/store.hpp"

#include <fstream>

namespace permwreath {

using nlohmann::json;

StoreError::StoreError(const std::filesystem::path& path, int line,
                       const std::string& what)
    : Error(path.string() + ":" + std::to_string(line) + ": " + what), line_(line) {}

void store_append(const std::filesystem::path& path, const StoreLine& line) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw StoreError(path, 0, "cannot open store for appending");
  json j{{"kind", line.kind},
         {"schema_version", line.schema_version},
         {"payload", line.payload}};
  out << j.dump() << '\n';
  out.flush();
  if (!out) throw StoreError(path, 0, "write failed");
}

std::vector<StoreLine> store_read(const std::filesystem::path& path) {
  std::vector<StoreLine> lines;
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return lines;
    throw StoreError(path, 0, "cannot open store for reading");
  }
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw StoreError(path, number, std::string("unparseable line: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
        !j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        !j.contains("payload") || !j["payload"].is_object()) {
      throw StoreError(path, number,
                       "expected {\"kind\", \"schema_version\", \"payload\"}");
    }
    const int version = j["schema_version"].get<int>();
    if (version != kStoreSchemaVersion) {
      throw StoreError(path, number,
                       "unsupported schema_version " + std::to_string(version));
    }
    lines.push_back({j["kind"].get<std::string>(), j["payload"], version, number});
  }
  return lines;
}

std::map<std::string, int> store_resume(const std::filesystem::path& path) {
  std::map<std::string, int> done;
  for (const StoreLine& line : store_read(path)) {
    const int number = line.line_number;
    if (line.kind != "length_complete") continue;
    try {
      const auto job = line.payload.at("job").get<std::string>();
      const int length = line.payload.at("length").get<int>();
      int& best = done[job];
      best = std::max(best, length);
    } catch (const json::exception& e) {
      throw StoreError(path, number, std::string("bad length_complete payload: ") + e.what());
    }
  }
  return done;
}

std::string job_key(const PermClass& x, const PermClass& y) {
  return x.literal() + "|" + y.literal();
}

namespace {

json perm_list(const std::vector<Permutation>& perms) {
  json a = json::array();
  for (const auto& p : perms) a.push_back(p.to_string());
  return a;
}

std::vector<Permutation> parse_perm_list(const json& a) {
  std::vector<Permutation> out;
  for (const auto& s : a) out.push_back(parse_permutation(s.get<std::string>()));
  return out;
}

}  // namespace

json to_json(const BasisRecord& record) {
  return {{"perm", record.perm.to_string()},
          {"x_basis", perm_list(record.x_basis)},
          {"y_basis", perm_list(record.y_basis)},
          {"length", record.length},
          {"discovered_at", record.discovered_at}};
}

BasisRecord basis_record_from_json(const json& j) {
  BasisRecord r;
  r.perm = parse_permutation(j.at("perm").get<std::string>());
  r.x_basis = parse_perm_list(j.at("x_basis"));
  r.y_basis = parse_perm_list(j.at("y_basis"));
  r.length = j.at("length").get<int>();
  r.discovered_at = j.value("discovered_at", std::string());
  if (r.length != r.perm.size()) {
    throw InvalidArgument("basis record length does not match its permutation");
  }
  return r;
}

StoreLine basis_record_line(const std::string& job, const BasisRecord& record) {
  json payload = to_json(record);
  payload["job"] = job;
  return {"basis_record", std::move(payload)};
}

StoreLine length_complete_line(const std::string& job, int length) {
  return {"length_complete", {{"job", job}, {"length", length}}};
}

std::vector<BasisRecord> stored_records(const std::filesystem::path& path,
                                        const std::string& job) {
  std::vector<BasisRecord> out;
  for (const StoreLine& line : store_read(path)) {
    const int number = line.line_number;
    if (line.kind != "basis_record" || line.payload.value("job", "") != job) continue;
    try {
      out.push_back(basis_record_from_json(line.payload));
    } catch (const std::exception& e) {
      throw StoreError(path, number, std::string("bad basis_record payload: ") + e.what());
    }
  }
  return out;
}

}  // namespace permwreath
