#include "scop/dataset.hpp"

#include <algorithm>
#include <fstream>

namespace scop::ingest {

namespace {

std::string state_id_for_context(const std::string& context_id) {
  if (context_id.size() > 1 && context_id[0] == 'e')
    return "p" + context_id.substr(1);
  return "p_" + context_id;
}

void check_columns(const LabelTable& contexts, const RatingTable& t,
                   const std::string& what) {
  for (const auto& col : t.column_labels())
    if (!contexts.has(col))
      throw InputError(what + " references unknown context: " + col);
  for (const auto& [id, _] : contexts.entries)
    if (!t.has_column(id))
      throw InputError(what + " is missing a column for context " + id);
}

}  // namespace

Dataset load_dataset(const std::string& dir) {
  Dataset d{LabelTable::from_csv_file(dir + "/contexts.csv"),
            LabelTable::from_csv_file(dir + "/properties.csv"),
            RatingTable::from_csv_file(dir + "/exemplars_rate.csv", Layout::wide),
            RatingTable::from_csv_file(dir + "/exemplars_freq.csv", Layout::wide),
            RatingTable::from_csv_file(dir + "/properties_rate.csv", Layout::wide),
            RatingTable::from_csv_file(dir + "/properties_weight.csv",
                                       Layout::wide)};
  return d;
}

Scop build_scop(const Dataset& data) {
  const LabelTable& contexts = data.contexts;
  if (!contexts.has(kUnitContextId))
    throw InputError("the context table must contain the unit context '" +
                     kUnitContextId + "'");
  check_columns(contexts, data.exemplar_rates, "exemplar rating table");
  check_columns(contexts, data.property_rates, "property rating table");
  if (data.exemplar_freqs) {
    check_columns(contexts, *data.exemplar_freqs, "exemplar frequency table");
    if (data.exemplar_freqs->row_labels() != data.exemplar_rates.row_labels())
      throw InputError("frequency table rows do not match the rating table");
  }
  if (data.property_weights) {
    check_columns(contexts, *data.property_weights, "property weight table");
    if (data.property_weights->row_labels() != data.property_rates.row_labels())
      throw InputError("weight table rows do not match the rating table");
  }

  auto frequencies_for = [&](const std::string& ctx) {
    if (data.exemplar_freqs) {
      std::map<std::string, double> out;
      for (const auto& row : data.exemplar_freqs->row_labels())
        out[row] = data.exemplar_freqs->at(row, ctx);
      return out;
    }
    return ratings_to_frequencies(data.exemplar_rates, ctx);
  };
  auto ratings_for = [&](const std::string& ctx) {
    std::map<std::string, double> out;
    for (const auto& row : data.exemplar_rates.row_labels())
      out[row] = data.exemplar_rates.at(row, ctx);
    return out;
  };
  auto weights_for = [&](const std::string& ctx) {
    if (data.property_weights) {
      std::map<std::string, double> out;
      for (const auto& row : data.property_weights->row_labels())
        out[row] = data.property_weights->at(row, ctx);
      return out;
    }
    return ratings_to_weights(data.property_rates, ctx);
  };

  ScopBuilder b;
  b.add_state("ground", contexts.label(kUnitContextId), true);
  for (const auto& [id, label] : contexts.entries) {
    if (id == kUnitContextId) continue;
    if (id == kZeroContextId)
      throw InputError("the zero context cannot appear in rating data");
    b.add_context(id, label);
    b.add_state(state_id_for_context(id), label);
    b.set_eigenstates(id, {state_id_for_context(id)});
  }
  for (const auto& [id, label] : data.properties.entries)
    b.add_property(id, label);

  b.set_frequencies("ground", frequencies_for(kUnitContextId),
                    ratings_for(kUnitContextId));
  for (const auto& [id, _] : contexts.entries) {
    if (id == kUnitContextId) continue;
    b.set_frequencies(state_id_for_context(id), frequencies_for(id),
                      ratings_for(id));
  }

  for (const auto& prop : data.property_rates.row_labels())
    if (!data.properties.has(prop))
      throw InputError("property rating table row '" + prop +
                       "' is not in the property table");
  for (const auto& [id, _] : contexts.entries) {
    std::string state =
        id == kUnitContextId ? "ground" : state_id_for_context(id);
    auto weights = weights_for(id);
    for (const auto& prop : data.property_rates.row_labels())
      b.set_property_weight(state, prop, weights.at(prop));
  }

  b.set_exemplar_order(data.exemplar_rates.row_labels());
  return b.build();
}

Scop build_scop(const LabelTable& contexts, const RatingTable& exemplar_ratings,
                const RatingTable& property_ratings) {
  LabelTable props;
  for (const auto& row : property_ratings.row_labels())
    props.entries.emplace_back(row, row);
  Dataset d{contexts,        std::move(props), exemplar_ratings,
            std::nullopt,    property_ratings, std::nullopt};
  return build_scop(d);
}

std::vector<std::pair<std::string, double>> rank_exemplars(
    const Scop& s, const std::string& context) {
  OutcomeDistribution outcome =
      s.apply_context(context, s.ground_state().id);
  if (!outcome.is_point_mass())
    throw DomainError("context " + context +
                      " does not collapse the ground state to a single state");
  const State& st = s.state(outcome.point_state());
  if (!st.has_frequencies())
    throw DomainError("state " + st.id + " carries no frequency data");

  std::map<std::string, std::size_t> input_order;
  for (std::size_t i = 0; i < s.exemplar_order().size(); ++i)
    input_order[s.exemplar_order()[i]] = i;

  std::vector<std::pair<std::string, double>> ranked(
      st.exemplar_frequencies.begin(), st.exemplar_frequencies.end());
  auto rating = [&](const std::string& name) {
    auto it = st.exemplar_ratings.find(name);
    return it == st.exemplar_ratings.end() ? 0.0 : it->second;
  };
  auto order_of = [&](const std::string& name) {
    auto it = input_order.find(name);
    return it == input_order.end() ? input_order.size() : it->second;
  };
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     if (rating(a.first) != rating(b.first))
                       return rating(a.first) > rating(b.first);
                     return order_of(a.first) < order_of(b.first);
                   });
  return ranked;
}

std::vector<PValueEntry> load_pvalue_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<PValueEntry> out;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (ln == 1 && line.rfind("exemplar,", 0) == 0) continue;
    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                             : line.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw StructureError("line " + std::to_string(ln) +
                           ": expected exemplar,pair,value");
    out.push_back({line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1),
                   line.substr(c2 + 1)});
  }
  if (out.empty()) throw StructureError("empty p-value fixture");
  return out;
}

}  // namespace scop::ingest
