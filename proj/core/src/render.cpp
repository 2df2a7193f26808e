#include "fragmerge/render.hpp"

#include <algorithm>

#include "fragmerge/error.hpp"
#include "fragmerge/text_io.hpp"

using nlohmann::json;

namespace fragmerge {
namespace {

std::string aggregate_string(const json& key, const std::string& aggregation) {
  if (aggregation == "sum") return std::to_string(key.at(0).get<int>());
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(key.at(i).get<int>());
  }
  out += ')';
  return out;
}

std::string right(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string left(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

} // namespace

json matrix_report(const Profile& profile, const KnowledgeBase& constraint, MergeSpec spec,
                   const MergeResult& result) {
  if (!result.matrix)
    fail(Errc::Usage, "matrix_report needs a merge result computed with want_matrix");
  const AtomUniverse& u = constraint.universe();

  json doc;
  doc["command"] = "distances";
  doc["universe"] = u.names();
  doc["distance"] = std::string(to_string(spec.distance));
  doc["aggregation"] = std::string(to_string(spec.aggregation));
  doc["profile_size"] = profile.size();

  json rows = json::array();
  for (const MatrixRow& row : *result.matrix) {
    json r;
    r["model"] = format_interpretation(row.model, u);
    r["distances"] = row.distances.entries;
    r["aggregate"] = row.aggregate_key;
    r["minimal"] = row.minimal;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);

  json models = json::array();
  for (Interpretation w : result.models.members()) models.push_back(format_interpretation(w, u));
  doc["result"] = std::move(models);
  return doc;
}

std::string render_matrix_text(const json& report) {
  const std::string aggregation = report.at("aggregation").get<std::string>();
  const std::size_t bases = report.at("profile_size").get<std::size_t>();
  const json& rows = report.at("rows");

  std::size_t label_w = 0;
  std::vector<std::size_t> col_w(bases);
  for (std::size_t c = 0; c < bases; ++c) col_w[c] = ("K" + std::to_string(c + 1)).size();
  std::size_t agg_w = aggregation.size();
  for (const json& row : rows) {
    label_w = std::max(label_w, row.at("model").get<std::string>().size());
    for (std::size_t c = 0; c < bases; ++c)
      col_w[c] = std::max(col_w[c],
                          std::to_string(row.at("distances").at(c).get<int>()).size());
    agg_w = std::max(agg_w, aggregate_string(row.at("aggregate"), aggregation).size());
  }

  std::string out(label_w, ' ');
  for (std::size_t c = 0; c < bases; ++c) out += ' ' + right("K" + std::to_string(c + 1), col_w[c]);
  out += " | " + right(aggregation, agg_w) + '\n';

  for (const json& row : rows) {
    out += left(row.at("model").get<std::string>(), label_w);
    for (std::size_t c = 0; c < bases; ++c)
      out += ' ' + right(std::to_string(row.at("distances").at(c).get<int>()), col_w[c]);
    out += " | " + right(aggregate_string(row.at("aggregate"), aggregation), agg_w);
    if (row.at("minimal").get<bool>()) out += " *";
    out += '\n';
  }
  return out;
}

} // namespace fragmerge
