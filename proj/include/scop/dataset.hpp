#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scop/core.hpp"
#include "scop/rating.hpp"

namespace scop::ingest {

// The bundled experiment files: context and property id/label tables, the
// exemplar and property rating matrices, and the frequency/weight columns
// as published. Published columns are authoritative where present; the
// rate-derived values remain available through ratings_to_frequencies and
// ratings_to_weights.
struct Dataset {
  LabelTable contexts;
  LabelTable properties;
  RatingTable exemplar_rates;
  std::optional<RatingTable> exemplar_freqs;
  RatingTable property_rates;
  std::optional<RatingTable> property_weights;
};

// Loads the fixture files from a directory:
//   contexts.csv, properties.csv, exemplars_rate.csv, exemplars_freq.csv,
//   properties_rate.csv, properties_weight.csv
Dataset load_dataset(const std::string& dir);

// Builds the concept system from rating data. The unit context must be
// one of the contexts; each remaining context e contributes one state
// (id "p" + the context id without its leading 'e', or "p_" + id) that is
// the sole eigenstate of e. The ground state carries the unit-context
// columns. Property weights come from the published weight table when
// given, otherwise rating / 7; frequencies likewise.
Scop build_scop(const Dataset& data);
Scop build_scop(const LabelTable& contexts, const RatingTable& exemplar_ratings,
                const RatingTable& property_ratings);

// Exemplars ranked by the frequency carried by the state that context e
// collapses the ground state to. Order: frequency descending, then raw
// rating descending, then original row order.
std::vector<std::pair<std::string, double>> rank_exemplars(
    const Scop& s, const std::string& context);

// The published p-value table ships as display-only strings.
struct PValueEntry {
  std::string exemplar;
  std::string context_pair;
  std::string value;
};
std::vector<PValueEntry> load_pvalue_fixture(const std::string& path);

}  // namespace scop::ingest
