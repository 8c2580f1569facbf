#include "scop/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scop {

double OutcomeDistribution::at(const std::string& state_id) const {
  auto it = probs_.find(state_id);
  return it == probs_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
  double t = 0.0;
  for (const auto& [_, v] : probs_) t += v;
  return t;
}

bool OutcomeDistribution::is_point_mass() const {
  for (const auto& [_, v] : probs_)
    if (v >= 1.0 - kUnitTolerance) return true;
  return false;
}

std::string OutcomeDistribution::point_state() const {
  for (const auto& [id, v] : probs_)
    if (v >= 1.0 - kUnitTolerance) return id;
  throw DomainError("outcome distribution is not a point mass");
}

std::size_t Scop::state_index(const std::string& id) const {
  auto it = state_index_.find(id);
  if (it == state_index_.end()) throw IdentifierError("unknown state: " + id);
  return it->second;
}

std::size_t Scop::context_index(const std::string& id) const {
  auto it = context_index_.find(id);
  if (it == context_index_.end())
    throw IdentifierError("unknown context: " + id);
  return it->second;
}

std::size_t Scop::property_index(const std::string& id) const {
  auto it = property_index_.find(id);
  if (it == property_index_.end())
    throw IdentifierError("unknown property: " + id);
  return it->second;
}

const State& Scop::state(const std::string& id) const {
  return states_[state_index(id)];
}

const Labeled& Scop::context(const std::string& id) const {
  return contexts_[context_index(id)];
}

const Labeled& Scop::property(const std::string& id) const {
  return properties_[property_index(id)];
}

const State& Scop::ground_state() const { return states_[ground_]; }

double Scop::transition_probability(const std::string& q, const std::string& e,
                                    const std::string& p) const {
  std::size_t qi = state_index(q);
  std::size_t ei = context_index(e);
  std::size_t pi = state_index(p);
  if (ei == zero_ctx_) return 0.0;  // no state survives the zero context
  auto row = mu_rows_.find({ei, pi});
  if (row != mu_rows_.end()) {
    auto cell = row->second.find(qi);
    return cell == row->second.end() ? 0.0 : cell->second;
  }
  if (eigen_[ei][pi]) return qi == pi ? 1.0 : 0.0;
  std::size_t count = 0;
  for (bool b : eigen_[ei]) count += b;
  return eigen_[ei][qi] ? 1.0 / static_cast<double>(count) : 0.0;
}

bool Scop::is_eigenstate(const std::string& p, const std::string& e) const {
  std::size_t pi = state_index(p);
  std::size_t ei = context_index(e);
  auto row = mu_rows_.find({ei, pi});
  if (row != mu_rows_.end()) {
    auto cell = row->second.find(pi);
    double diag = cell == row->second.end() ? 0.0 : cell->second;
    return diag >= 1.0 - kUnitTolerance;
  }
  return eigen_[ei][pi];
}

OutcomeDistribution Scop::apply_context(const std::string& e,
                                        const std::string& p) const {
  std::size_t ei = context_index(e);
  std::size_t pi = state_index(p);
  if (ei == zero_ctx_)
    throw DomainError("the zero context has no eigenstates; nothing to collapse to");
  std::map<std::string, double> probs;
  auto row = mu_rows_.find({ei, pi});
  if (row != mu_rows_.end()) {
    for (const auto& [qi, prob] : row->second)
      if (prob > 0.0) probs[states_[qi].id] = prob;
    return OutcomeDistribution(std::move(probs));
  }
  if (eigen_[ei][pi]) {
    probs[states_[pi].id] = 1.0;
    return OutcomeDistribution(std::move(probs));
  }
  std::size_t count = 0;
  for (bool b : eigen_[ei]) count += b;
  for (std::size_t qi = 0; qi < states_.size(); ++qi)
    if (eigen_[ei][qi]) probs[states_[qi].id] = 1.0 / static_cast<double>(count);
  return OutcomeDistribution(std::move(probs));
}

double Scop::property_weight(const std::string& p, const std::string& a) const {
  return nu_[state_index(p)][property_index(a)];
}

std::vector<std::string> Scop::actual_properties(const std::string& p) const {
  std::size_t pi = state_index(p);
  std::vector<std::string> out;
  for (std::size_t ai = 0; ai < properties_.size(); ++ai)
    if (nu_[pi][ai] >= 1.0 - kUnitTolerance) out.push_back(properties_[ai].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Scop::eigenstate_set(const std::string& e) const {
  return mask_to_ids(eigen_[context_index(e)]);
}

std::vector<std::string> Scop::cartan_map(const std::string& a) const {
  std::size_t ai = property_index(a);
  std::vector<std::string> out;
  for (std::size_t pi = 0; pi < states_.size(); ++pi)
    if (nu_[pi][ai] >= 1.0 - kUnitTolerance) out.push_back(states_[pi].id);
  std::sort(out.begin(), out.end());
  return out;
}

bool Scop::context_leq(const std::string& e, const std::string& f) const {
  const auto& le = eigen_[context_index(e)];
  const auto& lf = eigen_[context_index(f)];
  for (std::size_t i = 0; i < le.size(); ++i)
    if (le[i] && !lf[i]) return false;
  return true;
}

bool Scop::property_leq(const std::string& a, const std::string& b) const {
  std::size_t ai = property_index(a), bi = property_index(b);
  for (std::size_t pi = 0; pi < states_.size(); ++pi)
    if (nu_[pi][ai] >= 1.0 - kUnitTolerance &&
        nu_[pi][bi] < 1.0 - kUnitTolerance)
      return false;
  return true;
}

std::vector<bool> Scop::closure_mask(const std::vector<bool>& mask) const {
  std::vector<bool> result(states_.size(), true);
  for (const auto& eigenset : eigen_) {
    bool contains = true;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i] && !eigenset[i]) {
        contains = false;
        break;
      }
    if (!contains) continue;
    for (std::size_t i = 0; i < result.size(); ++i)
      result[i] = result[i] && eigenset[i];
  }
  return result;
}

std::vector<std::string> Scop::mask_to_ids(const std::vector<bool>& mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(states_[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Scop::closure(const std::vector<std::string>& s) const {
  std::vector<bool> mask(states_.size(), false);
  for (const std::string& id : s) mask[state_index(id)] = true;
  return mask_to_ids(closure_mask(mask));
}

std::vector<std::tuple<std::string, std::string, std::map<std::string, double>>>
Scop::explicit_transition_rows() const {
  std::vector<std::tuple<std::string, std::string, std::map<std::string, double>>>
      out;
  for (const auto& [key, row] : mu_rows_) {
    std::map<std::string, double> ids;
    for (const auto& [qi, prob] : row) ids[states_[qi].id] = prob;
    out.emplace_back(contexts_[key.first].id, states_[key.second].id,
                     std::move(ids));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  return out;
}

bool Scop::is_superposition_state(const std::string& p,
                                  const std::vector<std::string>& es) const {
  if (es.empty()) throw InputError("superposition test needs at least one context");
  std::size_t pi = state_index(p);
  std::vector<bool> unioned(states_.size(), false);
  for (const std::string& e : es) {
    const auto& eigenset = eigen_[context_index(e)];
    for (std::size_t i = 0; i < unioned.size(); ++i)
      unioned[i] = unioned[i] || eigenset[i];
  }
  if (unioned[pi]) return false;
  return closure_mask(unioned)[pi];
}

// ---------------------------------------------------------------------------
// builder

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw InputError(message);
}

}  // namespace

ScopBuilder& ScopBuilder::add_state(const std::string& id,
                                    const std::string& label, bool is_ground) {
  State s;
  s.id = id;
  s.label = label;
  s.is_ground = is_ground;
  states_.push_back(std::move(s));
  return *this;
}

ScopBuilder& ScopBuilder::add_context(const std::string& id,
                                      const std::string& label) {
  contexts_.push_back({id, label});
  return *this;
}

ScopBuilder& ScopBuilder::add_property(const std::string& id,
                                       const std::string& label) {
  properties_.push_back({id, label});
  return *this;
}

ScopBuilder& ScopBuilder::set_eigenstates(
    const std::string& context, const std::vector<std::string>& states) {
  eigen_decl_[context] = states;
  return *this;
}

ScopBuilder& ScopBuilder::set_transition_row(
    const std::string& context, const std::string& from,
    const std::map<std::string, double>& row) {
  rows_.emplace_back(context, from, row);
  return *this;
}

ScopBuilder& ScopBuilder::set_property_weight(const std::string& state,
                                              const std::string& property,
                                              double weight) {
  weights_.emplace_back(state, property, weight);
  return *this;
}

ScopBuilder& ScopBuilder::set_frequencies(
    const std::string& state, const std::map<std::string, double>& freqs,
    const std::map<std::string, double>& ratings) {
  for (auto& s : states_)
    if (s.id == state) {
      s.exemplar_frequencies = freqs;
      s.exemplar_ratings = ratings;
      return *this;
    }
  throw InputError("set_frequencies: unknown state " + state);
}

ScopBuilder& ScopBuilder::set_exemplar_order(
    const std::vector<std::string>& order) {
  exemplar_order_ = order;
  return *this;
}

Scop ScopBuilder::build() const {
  const auto& states = states_;
  std::vector<Labeled> contexts = contexts_;
  const auto& properties = properties_;
  const auto& eigen_decl = eigen_decl_;
  const auto& rows = rows_;
  const auto& weights = weights_;
  const auto& exemplar_order = exemplar_order_;

  Scop s;
  require(!states.empty(), "a system needs at least one state");
  s.states_ = states;
  for (std::size_t i = 0; i < s.states_.size(); ++i) {
    const State& st = s.states_[i];
    require(!st.id.empty(), "state id must be non-empty");
    require(!st.label.empty(), "state label must be non-empty (id " + st.id + ")");
    require(s.state_index_.emplace(st.id, i).second,
            "duplicate state id: " + st.id);
    if (!st.exemplar_frequencies.empty()) {
      double total = 0.0;
      for (const auto& [name, v] : st.exemplar_frequencies) {
        require(v >= 0.0 && v <= 1.0,
                "frequency out of range for state " + st.id + ", exemplar " + name);
        total += v;
      }
      require(std::abs(total - 1.0) <= 0.02,
              "frequencies of state " + st.id + " sum to " +
                  std::to_string(total) + ", expected 1 within 0.02");
    }
  }
  std::size_t ground_count = 0;
  for (std::size_t i = 0; i < s.states_.size(); ++i)
    if (s.states_[i].is_ground) {
      s.ground_ = i;
      ++ground_count;
    }
  require(ground_count == 1, "exactly one state must be the ground state");

  bool has_zero = false, has_unit = false;
  for (const auto& c : contexts) {
    if (c.id == kZeroContextId) has_zero = true;
    if (c.id == kUnitContextId) has_unit = true;
  }
  if (!has_zero) contexts.push_back({kZeroContextId, "the zero context"});
  if (!has_unit) contexts.push_back({kUnitContextId, "the unit context"});
  s.contexts_ = std::move(contexts);
  for (std::size_t i = 0; i < s.contexts_.size(); ++i) {
    const Labeled& c = s.contexts_[i];
    require(!c.id.empty(), "context id must be non-empty");
    require(!c.label.empty(), "context label must be non-empty (id " + c.id + ")");
    require(s.context_index_.emplace(c.id, i).second,
            "duplicate context id: " + c.id);
  }
  s.zero_ctx_ = s.context_index_.at(kZeroContextId);
  s.unit_ctx_ = s.context_index_.at(kUnitContextId);

  for (std::size_t i = 0; i < properties.size(); ++i) {
    const Labeled& a = properties[i];
    require(!a.id.empty(), "property id must be non-empty");
    require(!a.label.empty(), "property label must be non-empty (id " + a.id + ")");
    require(s.property_index_.emplace(a.id, i).second,
            "duplicate property id: " + a.id);
  }
  s.properties_ = properties;

  s.eigen_.assign(s.contexts_.size(),
                  std::vector<bool>(s.states_.size(), false));
  s.eigen_[s.unit_ctx_].assign(s.states_.size(), true);
  for (const auto& [ctx, ids] : eigen_decl) {
    auto ci = s.context_index_.find(ctx);
    require(ci != s.context_index_.end(),
            "eigenstate declaration for unknown context: " + ctx);
    if (ci->second == s.zero_ctx_) {
      require(ids.empty(), "the zero context cannot have eigenstates");
      continue;
    }
    if (ci->second == s.unit_ctx_) {
      std::set<std::string> declared(ids.begin(), ids.end());
      require(declared.size() == s.states_.size(),
              "the unit context must fix every state");
      for (const std::string& id : ids)
        require(s.state_index_.count(id) > 0,
                "eigenstate declaration names unknown state: " + id);
      continue;
    }
    for (const std::string& id : ids) {
      auto si = s.state_index_.find(id);
      require(si != s.state_index_.end(),
              "eigenstate declaration names unknown state: " + id);
      s.eigen_[ci->second][si->second] = true;
    }
  }

  for (const auto& [ctx, from, row] : rows) {
    auto ci = s.context_index_.find(ctx);
    require(ci != s.context_index_.end(),
            "transition row for unknown context: " + ctx);
    require(ci->second != s.zero_ctx_,
            "the zero context admits no transition row");
    auto pi = s.state_index_.find(from);
    require(pi != s.state_index_.end(),
            "transition row from unknown state: " + from);
    std::map<std::size_t, double> compiled;
    double total = 0.0;
    for (const auto& [q, prob] : row) {
      auto qi = s.state_index_.find(q);
      require(qi != s.state_index_.end(),
              "transition row names unknown state: " + q);
      require(prob >= 0.0 && prob <= 1.0,
              "transition probability out of range for state " + q);
      compiled[qi->second] = prob;
      total += prob;
    }
    require(std::abs(total - 1.0) <= kUnitTolerance,
            "transition row (" + ctx + ", " + from + ") sums to " +
                std::to_string(total));
    for (const auto& [qi, prob] : compiled)
      require(prob <= kUnitTolerance || s.eigen_[ci->second][qi],
              "transition row (" + ctx + ", " + from +
                  ") gives positive probability to a non-eigenstate: " +
                  s.states_[qi].id);
    double diag = 0.0;
    if (auto it = compiled.find(pi->second); it != compiled.end())
      diag = it->second;
    bool declared_eigen = s.eigen_[ci->second][pi->second];
    require(declared_eigen == (diag >= 1.0 - kUnitTolerance),
            "transition row (" + ctx + ", " + from +
                ") disagrees with the declared eigenstate set");
    require(s.mu_rows_.emplace(std::make_pair(ci->second, pi->second),
                               std::move(compiled)).second,
            "duplicate transition row for (" + ctx + ", " + from + ")");
  }

  // every context except the zero context must have at least one eigenstate
  for (std::size_t ci = 0; ci < s.contexts_.size(); ++ci) {
    if (ci == s.zero_ctx_) continue;
    bool any = false;
    for (bool b : s.eigen_[ci]) any = any || b;
    require(any, "context " + s.contexts_[ci].id +
                     " has no eigenstates; only the zero context may");
  }

  s.nu_.assign(s.states_.size(), std::vector<double>(s.properties_.size(), 0.0));
  for (const auto& [state, property, weight] : weights) {
    auto pi = s.state_index_.find(state);
    require(pi != s.state_index_.end(), "weight for unknown state: " + state);
    auto ai = s.property_index_.find(property);
    require(ai != s.property_index_.end(),
            "weight for unknown property: " + property);
    require(weight >= 0.0 && weight <= 1.0,
            "property weight out of range: " + state + ", " + property);
    s.nu_[pi->second][ai->second] = weight;
  }

  s.exemplar_order_ = exemplar_order;
  return s;
}

}  // namespace scop
