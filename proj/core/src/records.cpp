#include "schubert/records.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace schubert {

namespace {

std::string partition_json(const Partition& p) {
  std::string out = "[";
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  return out + "]";
}

Partition partition_from_json(const nlohmann::json& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

}  // namespace

std::string to_record_line(const TableRecord& record) {
  return "{\"coeff\":" + std::to_string(record.coeff) +
         ",\"lambda\":" + partition_json(record.lambda) +
         ",\"mu\":" + partition_json(record.mu) +
         ",\"nu\":" + partition_json(record.nu) + ",\"space\":\"" + record.space +
         "\"}";
}

TableRecord parse_record_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  if (!j.contains("space") || !j.contains("lambda") || !j.contains("mu") ||
      !j.contains("nu") || !j.contains("coeff")) {
    throw std::invalid_argument("record line missing required fields: " + line);
  }
  TableRecord record;
  record.space = j["space"].get<std::string>();
  record.lambda = partition_from_json(j["lambda"]);
  record.mu = partition_from_json(j["mu"]);
  record.nu = partition_from_json(j["nu"]);
  record.coeff = j["coeff"].get<long long>();
  return record;
}

void write_table(const SchubertRing& ring, std::ostream& out) {
  const std::string space = ring.space().to_string();
  for (const Partition& lambda : ring.basis()) {
    for (const Partition& mu : ring.basis()) {
      auto expansion = ring.expansion(lambda, mu);
      std::vector<std::pair<Partition, long long>> terms(expansion.begin(),
                                                         expansion.end());
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return term_less(a.first, b.first); });
      for (const auto& [nu, coeff] : terms) {
        out << to_record_line({space, lambda, mu, nu, coeff}) << '\n';
      }
    }
  }
}

}  // namespace schubert
