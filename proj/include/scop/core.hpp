#pragma once

#include <map>
#include <string>
#include <vector>

#include "scop/errors.hpp"

namespace scop {

struct Labeled {
  std::string id;
  std::string label;
};

// A mode of the concept. Data-derived states carry the exemplar frequency
// distribution measured for their context (and the raw ratings behind it,
// used only for deterministic tie-breaking when ranking).
struct State {
  std::string id;
  std::string label;
  bool is_ground = false;
  std::map<std::string, double> exemplar_frequencies;
  std::map<std::string, double> exemplar_ratings;

  bool has_frequencies() const { return !exemplar_frequencies.empty(); }
};

// Result of applying a context: a probability distribution over states,
// supported on the eigenstates of the applied context.
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::map<std::string, double> probs)
      : probs_(std::move(probs)) {}

  double at(const std::string& state_id) const;
  const std::map<std::string, double>& probabilities() const { return probs_; }
  double total() const;
  bool is_point_mass() const;
  std::string point_state() const;  // DomainError unless point mass

 private:
  std::map<std::string, double> probs_;
};

// Probabilities within this distance of 1 count as certain; robust to
// rounding in ingested data.
inline constexpr double kUnitTolerance = 1e-9;

// Reserved context ids. Every system contains both: "0" is the context
// with no eigenstates, "1" fixes every state.
inline const std::string kZeroContextId = "0";
inline const std::string kUnitContextId = "1";

class ScopBuilder;

// A state-context-property system: states, contexts, properties, the
// transition probability function mu(q, e, p) and the property weight
// function nu(p, a). Immutable after construction; all queries are const
// and the value is safe to share across threads.
//
// mu is stored as declared eigenstate sets per context plus optional
// explicit transition rows; rows not given explicitly default to the
// first-kind collapse model: an eigenstate of e is fixed by e, any other
// state collapses uniformly onto the eigenstates of e. With singleton
// eigenstate sets this is deterministic collapse. The zero context admits
// no outcome at all (mu identically 0 there).
class Scop {
 public:
  const std::vector<State>& states() const { return states_; }
  const std::vector<Labeled>& contexts() const { return contexts_; }
  const std::vector<Labeled>& properties() const { return properties_; }
  const State& state(const std::string& id) const;
  const Labeled& context(const std::string& id) const;
  const Labeled& property(const std::string& id) const;
  const State& ground_state() const;
  const std::vector<std::string>& exemplar_order() const {
    return exemplar_order_;
  }

  // mu(q, e, p): the probability that state p changes to state q under e.
  double transition_probability(const std::string& q, const std::string& e,
                                const std::string& p) const;

  // True iff mu(p, e, p) >= 1 - kUnitTolerance.
  bool is_eigenstate(const std::string& p, const std::string& e) const;

  // Collapse: the outcome distribution of applying context e to state p.
  // DomainError for the zero context, which has no eigenstates.
  OutcomeDistribution apply_context(const std::string& e,
                                    const std::string& p) const;

  // nu(p, a): the weight of property a in state p.
  double property_weight(const std::string& p, const std::string& a) const;

  // Properties with weight 1 in state p (within kUnitTolerance).
  std::vector<std::string> actual_properties(const std::string& p) const;

  // The eigenstate set of a context, sorted by state id.
  std::vector<std::string> eigenstate_set(const std::string& e) const;

  // The Cartan map: states in which property a is actual.
  std::vector<std::string> cartan_map(const std::string& a) const;

  // e <= f iff every eigenstate of e is an eigenstate of f.
  bool context_leq(const std::string& e, const std::string& f) const;

  // a <= b iff every state making a actual makes b actual.
  bool property_leq(const std::string& a, const std::string& b) const;

  // Intersection of all eigenstate sets containing s (the eigenstate sets
  // form a closure system; the unit context guarantees a containing set).
  std::vector<std::string> closure(const std::vector<std::string>& s) const;

  // True iff p lies in the closure of the union of the eigenstate sets of
  // es but in none of them individually.
  bool is_superposition_state(const std::string& p,
                              const std::vector<std::string>& es) const;

  // Explicitly stored transition rows, in id form, ordered by
  // (context id, state id). Rows not listed follow the default model.
  std::vector<std::tuple<std::string, std::string, std::map<std::string, double>>>
  explicit_transition_rows() const;

 private:
  friend class ScopBuilder;

  std::size_t state_index(const std::string& id) const;
  std::size_t context_index(const std::string& id) const;
  std::size_t property_index(const std::string& id) const;
  std::vector<bool> closure_mask(const std::vector<bool>& mask) const;
  std::vector<std::string> mask_to_ids(const std::vector<bool>& mask) const;

  std::vector<State> states_;
  std::vector<Labeled> contexts_;
  std::vector<Labeled> properties_;
  std::map<std::string, std::size_t> state_index_;
  std::map<std::string, std::size_t> context_index_;
  std::map<std::string, std::size_t> property_index_;
  std::size_t ground_ = 0;
  std::size_t zero_ctx_ = 0, unit_ctx_ = 0;
  std::vector<std::vector<bool>> eigen_;              // context -> state mask
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, double>>
      mu_rows_;                                       // (context, from) -> row
  std::vector<std::vector<double>> nu_;               // state x property
  std::vector<std::string> exemplar_order_;
};

class ScopBuilder {
 public:
  ScopBuilder& add_state(const std::string& id, const std::string& label,
                         bool is_ground = false);
  ScopBuilder& add_context(const std::string& id, const std::string& label);
  ScopBuilder& add_property(const std::string& id, const std::string& label);

  // Declares the eigenstate set of a context. The unit context always has
  // every state as an eigenstate and the zero context none; declarations
  // for them must agree.
  ScopBuilder& set_eigenstates(const std::string& context,
                               const std::vector<std::string>& states);

  // Explicit transition row: the distribution of outcomes when `from`
  // is influenced by `context`. Must sum to 1 and be supported on the
  // context's eigenstates.
  ScopBuilder& set_transition_row(const std::string& context,
                                  const std::string& from,
                                  const std::map<std::string, double>& row);

  ScopBuilder& set_property_weight(const std::string& state,
                                   const std::string& property, double weight);

  ScopBuilder& set_frequencies(const std::string& state,
                               const std::map<std::string, double>& freqs,
                               const std::map<std::string, double>& ratings = {});

  ScopBuilder& set_exemplar_order(const std::vector<std::string>& order);

  // Validates the whole system; throws InputError on any inconsistency.
  Scop build() const;

 private:
  std::vector<State> states_;
  std::vector<Labeled> contexts_;
  std::vector<Labeled> properties_;
  std::map<std::string, std::vector<std::string>> eigen_decl_;
  std::vector<std::tuple<std::string, std::string, std::map<std::string, double>>>
      rows_;
  std::vector<std::tuple<std::string, std::string, double>> weights_;
  std::vector<std::string> exemplar_order_;
};

}  // namespace scop
