#include "fragmerge/witness_io.hpp"

#include <filesystem>
#include <json.hpp>

#include "fragmerge/error.hpp"
#include "fragmerge/text_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fragmerge {
namespace {

std::string member_file_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%03u.kb", static_cast<unsigned>(i + 1));
  return buf;
}

} // namespace

void write_witness(const std::string& dir, const DistributionWitness& w) {
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "profile", ec);
  if (ec) fail(Errc::Io, "cannot create witness directory '" + dir + "'");

  json meta;
  meta["construction"] = w.construction;
  meta["detail"] = w.detail;
  meta["fragment"] = std::string(to_string(w.fragment));
  meta["distance"] = std::string(to_string(w.distance));
  json aggs = json::array();
  for (Aggregation a : w.aggregations) aggs.push_back(std::string(to_string(a)));
  meta["aggregations"] = aggs;
  meta["universe"] = w.profile.universe().names();
  meta["base_universe"] = w.base_universe.names();
  meta["fresh_atoms"] = w.fresh_atoms;
  json target = json::array();
  for (Interpretation m : w.target.members())
    target.push_back(format_interpretation(m, w.base_universe));
  meta["target"] = target;
  meta["profile_size"] = w.profile.size();
  meta["bounds"] = {{"max_profile_len", w.max_profile_len}, {"fresh_atoms", w.fresh_atoms}};
  meta["verified"] = w.verified;

  write_file((fs::path(dir) / "meta.json").string(), meta.dump(2) + "\n");
  write_file((fs::path(dir) / "constraint.kb").string(), format_kb(w.constraint));
  for (std::size_t i = 0; i < w.profile.size(); ++i)
    write_file((fs::path(dir) / "profile" / member_file_name(i)).string(),
               format_kb(w.profile[i]));
}

DistributionWitness read_witness(const std::string& dir) {
  json meta;
  try {
    meta = json::parse(read_file((fs::path(dir) / "meta.json").string()));
  } catch (const json::exception& e) {
    fail(Errc::Io, "cannot parse meta.json: " + std::string(e.what()));
  }

  AtomUniverse working{meta.at("universe").get<std::vector<std::string>>()};
  AtomUniverse base{meta.at("base_universe").get<std::vector<std::string>>()};

  std::string target_text;
  for (const auto& line : meta.at("target")) target_text += line.get<std::string>() + "\n";
  ModelSet target = parse_model_set(target_text, base);

  const std::size_t count = meta.at("profile_size").get<std::size_t>();
  std::vector<KnowledgeBase> bases;
  for (std::size_t i = 0; i < count; ++i)
    bases.push_back(
        parse_kb(read_file((fs::path(dir) / "profile" / member_file_name(i)).string()), working));
  KnowledgeBase constraint =
      parse_kb(read_file((fs::path(dir) / "constraint.kb").string()), working);

  std::vector<Aggregation> aggs;
  for (const auto& a : meta.at("aggregations"))
    aggs.push_back(aggregation_from_string(a.get<std::string>()));

  int max_len = static_cast<int>(count);
  if (meta.contains("bounds")) max_len = meta["bounds"].value("max_profile_len", max_len);

  return DistributionWitness{Profile{std::move(bases)},
                             std::move(constraint),
                             fragment_from_string(meta.at("fragment").get<std::string>()),
                             meta.at("construction").get<std::string>(),
                             meta.value("detail", std::string{}),
                             distance_from_string(meta.at("distance").get<std::string>()),
                             std::move(aggs),
                             std::move(target),
                             std::move(base),
                             meta.at("fresh_atoms").get<int>(),
                             max_len,
                             false};
}

} // namespace fragmerge
