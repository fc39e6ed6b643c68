#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "argclinic/error.hpp"
#include "argclinic/tmr/model.hpp"

// JSON guideline bundle:
//
// {
//   "metadata": {...free-form...},
//   "recommendations": [{"name", "action", "deontic_strength": "should" | 0.5,
//                        "tracks": [{"property", "effect", "initial_value": "High" | null,
//                                    "contribution": "+" | "-" | "0"}]}],
//   "interactions": [{"first", "second", "modal": "box" | "diamond"}],
//   "context": {"state": [...], "goals": [...], "preferences": [[a, b]], "priorities": [[g, h]]}
// }
namespace argclinic::io {

using nlohmann::json;

struct GuidelineBundle {
  json metadata = json::object();
  std::vector<tmr::Recommendation> recommendations;
  std::vector<tmr::Interaction> interactions;
  tmr::Context context;

  friend bool operator==(const GuidelineBundle&, const GuidelineBundle&) = default;
};

// Trims and collapses internal whitespace runs to one space.
inline std::string normalize_symbol(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

// Goal symbols additionally accept "not " for the negation sign.
inline std::string normalize_goal(std::string_view raw) {
  std::string s = normalize_symbol(raw);
  if (s.rfind("not ", 0) == 0) {
    s = std::string(tmr::kNegation) + s.substr(4);
  } else if (s.rfind(std::string(tmr::kNegation) + " ", 0) == 0) {
    s = std::string(tmr::kNegation) + s.substr(tmr::kNegation.size() + 1);
  }
  return s;
}

namespace detail {

class BundleReader {
 public:
  GuidelineBundle read(const json& doc) {
    expect_object(doc, "", {"metadata", "recommendations", "interactions", "context"});
    GuidelineBundle out;
    if (doc.contains("metadata")) {
      if (!doc["metadata"].is_object()) schema("/metadata", "must be an object");
      out.metadata = doc["metadata"];
    }
    if (!doc.contains("recommendations")) schema("/recommendations", "is required");
    const auto& recs = doc["recommendations"];
    if (!recs.is_array()) schema("/recommendations", "must be an array");
    if (recs.empty()) schema("/recommendations", "must contain at least one recommendation");
    std::set<std::string> names;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const std::string path = "/recommendations/" + std::to_string(i);
      auto rec = recommendation(recs[i], path);
      if (!names.insert(rec.name).second) {
        throw Error(ErrorKind::DuplicateName, "recommendation '" + rec.name + "' declared twice",
                    path + "/name");
      }
      out.recommendations.push_back(std::move(rec));
    }
    if (doc.contains("interactions")) {
      const auto& ints = doc["interactions"];
      if (!ints.is_array()) schema("/interactions", "must be an array");
      for (std::size_t i = 0; i < ints.size(); ++i) {
        const std::string path = "/interactions/" + std::to_string(i);
        out.interactions.push_back(interaction(ints[i], path));
        try {
          tmr::validate_interactions(out.recommendations, out.interactions);
        } catch (const Error& e) {
          throw Error(e.kind(), e.detail(), path);
        }
      }
    }
    if (doc.contains("context")) out.context = context(doc["context"], out.recommendations);
    try {
      tmr::validate_context(out.context, out.recommendations);
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), "/context");
    }
    return out;
  }

 private:
  [[noreturn]] static void schema(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::SchemaError, msg, path.empty() ? "/" : path);
  }

  static void expect_object(const json& j, const std::string& path,
                            std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) schema(path, "must be an object");
    for (const auto& [key, unused] : j.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) schema(path + "/" + key, "unknown field");
    }
  }

  static std::string string_field(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) schema(path + "/" + key, "is required");
    return string_value(j[key], path + "/" + key);
  }

  static std::string string_value(const json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "must be a string");
    std::string s = normalize_symbol(j.get<std::string>());
    if (s.empty()) schema(path, "must not be empty");
    return s;
  }

  static tmr::Recommendation recommendation(const json& j, const std::string& path) {
    expect_object(j, path, {"name", "action", "deontic_strength", "tracks"});
    tmr::Recommendation rec;
    rec.name = string_field(j, path, "name");
    rec.action = string_field(j, path, "action");
    if (!j.contains("deontic_strength")) schema(path + "/deontic_strength", "is required");
    const auto& ds = j["deontic_strength"];
    try {
      if (ds.is_string()) {
        rec.ds = tmr::DeonticStrength::from_landmark(normalize_symbol(ds.get<std::string>()));
      } else if (ds.is_number()) {
        rec.ds = tmr::DeonticStrength::from_double(ds.get<double>());
      } else {
        schema(path + "/deontic_strength", "must be a landmark string or a number");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SchemaError) throw;
      throw Error(e.kind(), e.detail(), path + "/deontic_strength");
    }
    if (!j.contains("tracks")) schema(path + "/tracks", "is required");
    const auto& tracks = j["tracks"];
    if (!tracks.is_array()) schema(path + "/tracks", "must be an array");
    for (std::size_t k = 0; k < tracks.size(); ++k) {
      rec.tracks.push_back(track(tracks[k], path + "/tracks/" + std::to_string(k)));
    }
    try {
      return tmr::validate_recommendation(std::move(rec));
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), path);
    }
  }

  static tmr::Track track(const json& j, const std::string& path) {
    expect_object(j, path, {"property", "effect", "initial_value", "contribution"});
    tmr::Track t;
    t.property = string_field(j, path, "property");
    t.effect = string_field(j, path, "effect");
    if (j.contains("initial_value") && !j["initial_value"].is_null()) {
      t.initial_value = string_value(j["initial_value"], path + "/initial_value");
      if (*t.initial_value == "?") t.initial_value.reset();
    }
    if (j.contains("contribution")) {
      const std::string c = string_value(j["contribution"], path + "/contribution");
      auto parsed = tmr::parse_contribution(c);
      if (!parsed) schema(path + "/contribution", "must be \"+\", \"-\" or \"0\"");
      t.contribution = *parsed;
    }
    return t;
  }

  static tmr::Interaction interaction(const json& j, const std::string& path) {
    expect_object(j, path, {"first", "second", "modal"});
    tmr::Interaction i;
    i.first = string_field(j, path, "first");
    i.second = string_field(j, path, "second");
    const std::string modal = string_field(j, path, "modal");
    if (modal == "box" || modal == "□" || modal == "necessary") {
      i.modal = tmr::Modal::Necessary;
    } else if (modal == "diamond" || modal == "◇" || modal == "possible") {
      i.modal = tmr::Modal::Possible;
    } else {
      schema(path + "/modal", "must be \"box\" or \"diamond\"");
    }
    return i;
  }

  static std::vector<std::pair<std::string, std::string>> pairs(const json& j, const std::string& path,
                                                                bool goals) {
    if (!j.is_array()) schema(path, "must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      if (!j[i].is_array() || j[i].size() != 2) schema(p, "must be a pair [lower, higher]");
      auto a = string_value(j[i][0], p + "/0");
      auto b = string_value(j[i][1], p + "/1");
      if (goals) {
        a = normalize_goal(a);
        b = normalize_goal(b);
      }
      out.emplace_back(std::move(a), std::move(b));
    }
    return out;
  }

  static tmr::Context context(const json& j, const std::vector<tmr::Recommendation>& recs) {
    expect_object(j, "/context", {"state", "goals", "preferences", "priorities"});
    tmr::Context ctx;
    if (j.contains("state")) {
      if (!j["state"].is_array()) schema("/context/state", "must be an array");
      for (std::size_t i = 0; i < j["state"].size(); ++i) {
        ctx.state.push_back(string_value(j["state"][i], "/context/state/" + std::to_string(i)));
      }
    }
    if (j.contains("goals")) {
      if (!j["goals"].is_array()) schema("/context/goals", "must be an array");
      for (std::size_t i = 0; i < j["goals"].size(); ++i) {
        ctx.goals.push_back(tmr::GoalTerm::parse(
            normalize_goal(string_value(j["goals"][i], "/context/goals/" + std::to_string(i)))));
      }
    }
    if (j.contains("preferences")) {
      ctx.preferences = pairs(j["preferences"], "/context/preferences", false);
      for (std::size_t i = 0; i < ctx.preferences.size(); ++i) {
        const std::string p = "/context/preferences/" + std::to_string(i);
        try {
          tmr::detail::resolve_preference_side(recs, ctx.preferences[i].first);
        } catch (const Error& e) {
          throw Error(e.kind(), e.detail(), p + "/0");
        }
        try {
          tmr::detail::resolve_preference_side(recs, ctx.preferences[i].second);
        } catch (const Error& e) {
          throw Error(e.kind(), e.detail(), p + "/1");
        }
      }
    }
    if (j.contains("priorities")) ctx.priorities = pairs(j["priorities"], "/context/priorities", true);
    return ctx;
  }
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace detail

inline GuidelineBundle parse_bundle(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = detail::line_column(bytes, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "well-formed JSON");
  }
  return detail::BundleReader{}.read(doc);
}

inline json bundle_to_json(const GuidelineBundle& b) {
  json doc = json::object();
  doc["metadata"] = b.metadata;
  json recs = json::array();
  for (const auto& r : b.recommendations) {
    json rec = {{"name", r.name}, {"action", r.action}};
    if (auto lm = r.ds.landmark()) {
      rec["deontic_strength"] = std::string(*lm);
    } else {
      rec["deontic_strength"] = r.ds.value();
    }
    json tracks = json::array();
    for (const auto& t : r.tracks) {
      tracks.push_back({{"property", t.property},
                        {"effect", t.effect},
                        {"initial_value", t.initial_value ? json(*t.initial_value) : json(nullptr)},
                        {"contribution", std::string(tmr::to_string(t.contribution))}});
    }
    rec["tracks"] = std::move(tracks);
    recs.push_back(std::move(rec));
  }
  doc["recommendations"] = std::move(recs);
  json ints = json::array();
  for (const auto& i : b.interactions) {
    ints.push_back({{"first", i.first},
                    {"second", i.second},
                    {"modal", i.modal == tmr::Modal::Necessary ? "box" : "diamond"}});
  }
  doc["interactions"] = std::move(ints);
  json goals = json::array();
  for (const auto& g : b.context.goals) goals.push_back(g.str());
  json prefs = json::array();
  for (const auto& [x, y] : b.context.preferences) prefs.push_back({x, y});
  json prios = json::array();
  for (const auto& [x, y] : b.context.priorities) prios.push_back({x, y});
  doc["context"] = {{"state", b.context.state},
                    {"goals", std::move(goals)},
                    {"preferences", std::move(prefs)},
                    {"priorities", std::move(prios)}};
  return doc;
}

inline std::string serialize_bundle(const GuidelineBundle& b) {
  return bundle_to_json(b).dump(2) + "\n";
}

}  // namespace argclinic::io
