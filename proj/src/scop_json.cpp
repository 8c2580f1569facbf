#include "scop/scop_json.hpp"

#include <istream>
#include <set>

namespace scop {

using nlohmann::ordered_json;

ordered_json to_json(const Scop& s) {
  ordered_json doc;
  doc["states"] = ordered_json::array();
  for (const State& st : s.states()) {
    ordered_json j;
    j["id"] = st.id;
    j["label"] = st.label;
    j["ground"] = st.is_ground;
    if (!st.exemplar_frequencies.empty()) {
      ordered_json freqs;
      ordered_json rates;
      for (const std::string& name : s.exemplar_order()) {
        if (auto it = st.exemplar_frequencies.find(name);
            it != st.exemplar_frequencies.end())
          freqs[name] = it->second;
        if (auto it = st.exemplar_ratings.find(name);
            it != st.exemplar_ratings.end())
          rates[name] = it->second;
      }
      for (const auto& [name, v] : st.exemplar_frequencies)
        if (!freqs.contains(name)) freqs[name] = v;
      for (const auto& [name, v] : st.exemplar_ratings)
        if (!rates.contains(name)) rates[name] = v;
      j["frequencies"] = freqs;
      if (!rates.empty()) j["ratings"] = rates;
    }
    doc["states"].push_back(j);
  }

  doc["contexts"] = ordered_json::array();
  for (const Labeled& c : s.contexts())
    doc["contexts"].push_back({{"id", c.id}, {"label", c.label}});
  doc["properties"] = ordered_json::array();
  for (const Labeled& a : s.properties())
    doc["properties"].push_back({{"id", a.id}, {"label", a.label}});

  // diagonal entries pin the eigenstate sets; explicit rows follow
  doc["mu"] = ordered_json::array();
  std::set<std::pair<std::string, std::string>> explicit_rows;
  for (const auto& [ctx, from, row] : s.explicit_transition_rows()) {
    explicit_rows.insert({ctx, from});
    for (const auto& [q, prob] : row)
      doc["mu"].push_back(
          {{"q", q}, {"e", ctx}, {"p", from}, {"prob", prob}});
  }
  for (const Labeled& c : s.contexts()) {
    if (c.id == kZeroContextId || c.id == kUnitContextId) continue;
    for (const std::string& p : s.eigenstate_set(c.id))
      if (!explicit_rows.count({c.id, p}))
        doc["mu"].push_back(
            {{"q", p}, {"e", c.id}, {"p", p}, {"prob", 1.0}});
  }

  doc["nu"] = ordered_json::array();
  for (const State& st : s.states())
    for (const Labeled& a : s.properties()) {
      double w = s.property_weight(st.id, a.id);
      if (w > 0.0)
        doc["nu"].push_back({{"p", st.id}, {"a", a.id}, {"weight", w}});
    }

  if (!s.exemplar_order().empty()) doc["exemplar_order"] = s.exemplar_order();
  return doc;
}

Scop scop_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw InputError("system document must be a JSON object");
  ScopBuilder b;
  if (!doc.contains("states") || !doc["states"].is_array())
    throw InputError("system document needs a 'states' array");

  struct FreqData {
    std::string id;
    std::map<std::string, double> freqs, rates;
  };
  std::vector<FreqData> freq_data;
  for (const auto& j : doc["states"]) {
    std::string id = j.at("id").get<std::string>();
    b.add_state(id, j.at("label").get<std::string>(),
                j.value("ground", false));
    if (j.contains("frequencies")) {
      FreqData fd;
      fd.id = id;
      for (const auto& [name, v] : j["frequencies"].items())
        fd.freqs[name] = v.get<double>();
      if (j.contains("ratings"))
        for (const auto& [name, v] : j["ratings"].items())
          fd.rates[name] = v.get<double>();
      freq_data.push_back(std::move(fd));
    }
  }
  for (const auto& fd : freq_data) b.set_frequencies(fd.id, fd.freqs, fd.rates);

  for (const auto& j : doc.value("contexts", ordered_json::array()))
    b.add_context(j.at("id").get<std::string>(),
                  j.at("label").get<std::string>());
  for (const auto& j : doc.value("properties", ordered_json::array()))
    b.add_property(j.at("id").get<std::string>(),
                   j.at("label").get<std::string>());

  // group mu triples into rows; diagonal certainties define eigenstates
  std::map<std::string, std::vector<std::string>> eigen;
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>>
      rows;
  std::map<std::pair<std::string, std::string>, bool> row_is_diagonal_only;
  for (const auto& j : doc.value("mu", ordered_json::array())) {
    std::string q = j.at("q").get<std::string>();
    std::string e = j.at("e").get<std::string>();
    std::string p = j.at("p").get<std::string>();
    double prob = j.at("prob").get<double>();
    if (e == kZeroContextId)
      throw InputError("mu triples cannot name the zero context");
    auto key = std::make_pair(e, p);
    auto [it, fresh] = rows.emplace(key, std::map<std::string, double>{});
    if (!it->second.emplace(q, prob).second)
      throw InputError("duplicate mu triple (" + q + ", " + e + ", " + p + ")");
    bool diag = (q == p && prob >= 1.0 - kUnitTolerance);
    if (fresh)
      row_is_diagonal_only[key] = diag;
    else if (!diag)
      row_is_diagonal_only[key] = false;
    if (diag) eigen[e].push_back(p);
  }
  for (const auto& [key, row] : rows) {
    // a bare diagonal certainty declares an eigenstate; anything more is
    // an explicit transition row
    if (row_is_diagonal_only[key] && row.size() == 1) continue;
    b.set_transition_row(key.first, key.second, row);
    for (const auto& [q, prob] : row)
      if (prob >= 1.0 - kUnitTolerance && q != key.second)
        eigen[key.first].push_back(q);
  }
  for (auto& [ctx, states] : eigen) {
    if (ctx == kUnitContextId || ctx == kZeroContextId) continue;
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    b.set_eigenstates(ctx, states);
  }

  for (const auto& j : doc.value("nu", ordered_json::array()))
    b.set_property_weight(j.at("p").get<std::string>(),
                          j.at("a").get<std::string>(),
                          j.at("weight").get<double>());

  if (doc.contains("exemplar_order"))
    b.set_exemplar_order(doc["exemplar_order"].get<std::vector<std::string>>());

  return b.build();
}

std::string to_json_string(const Scop& s) { return to_json(s).dump(2) + "\n"; }

Scop scop_from_json_string(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return scop_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed system document: ") + e.what());
  }
}

Scop load_scop(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return scop_from_json_string(text);
}

}  // namespace scop
