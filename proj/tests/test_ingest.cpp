#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "scop/dataset.hpp"
#include "scop/rating.hpp"
#include "scop/scop_json.hpp"
#include "scop/fixtures.hpp"

using scop::DegenerateColumnError;
using scop::DomainError;
using scop::IdentifierError;
using scop::InputError;
using scop::ParseError;
using scop::Scop;
using scop::StructureError;
using scop::ingest::Dataset;
using scop::ingest::LabelTable;
using scop::ingest::Layout;
using scop::ingest::RatingTable;

namespace {

const std::string kData = SCOP_DATA_DIR;

Dataset bundled() { return scop::ingest::load_dataset(kData); }

}  // namespace

TEST_CASE("wide parsing of the bundled exemplar table") {
  RatingTable t =
      RatingTable::from_csv_file(kData + "/exemplars_rate.csv", Layout::wide);
  CHECK(t.row_labels().size() == 14);
  CHECK(t.column_labels().size() == 7);
  CHECK(t.at("dog", "e1") == 6.81);
  CHECK(t.at("guinea pig", "1") == 3.90);
  CHECK_THROWS_AS(t.at("dragon", "e1"), IdentifierError);
  CHECK_THROWS_AS(t.at("dog", "e9"), IdentifierError);
}

TEST_CASE("parse errors carry their location") {
  {
    std::istringstream empty("");
    CHECK_THROWS_AS(RatingTable::from_csv(empty, Layout::wide),
                    StructureError);
  }
  {
    std::istringstream ragged("label,e1,e2\nx,1.0\n");
    CHECK_THROWS_AS(RatingTable::from_csv(ragged, Layout::wide),
                    StructureError);
  }
  {
    std::istringstream bad("label,e1\nx,abc\n");
    try {
      RatingTable::from_csv(bad, Layout::wide);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      std::string msg = e.what();
      CHECK(msg.find("line 2") != std::string::npos);
      CHECK(msg.find("e1") != std::string::npos);
      CHECK(msg.find("x") != std::string::npos);
    }
  }
  {
    std::istringstream out_of_range("label,e1\nx,7.5\n");
    CHECK_THROWS_AS(RatingTable::from_csv(out_of_range, Layout::wide),
                    ParseError);
  }
  {
    std::istringstream negative("label,e1\nx,-0.1\n");
    CHECK_THROWS_AS(RatingTable::from_csv(negative, Layout::wide), ParseError);
  }
  {
    std::istringstream dup("x,e1,1.0\nx,e1,2.0\n");
    CHECK_THROWS_AS(RatingTable::from_csv(dup, Layout::long_form),
                    StructureError);
  }
  {
    // long data that does not fill the rectangle
    std::istringstream holes("x,e1,1.0\ny,e2,2.0\n");
    CHECK_THROWS_AS(RatingTable::from_csv(holes, Layout::long_form),
                    StructureError);
  }
}

TEST_CASE("long layout assembles and round-trips") {
  std::istringstream in(
      "label,context,rate\n"
      "x,e1,1.5\nx,e2,2\ny,e1,0\ny,e2,6.25\n");
  RatingTable t = RatingTable::from_csv(in, Layout::long_form);
  CHECK(t.at("x", "e2") == 2.0);
  CHECK(t.at("y", "e1") == 0.0);

  std::istringstream again(t.to_csv(Layout::long_form));
  CHECK(RatingTable::from_csv(again, Layout::long_form) == t);
  std::istringstream wide(t.to_csv(Layout::wide));
  CHECK(RatingTable::from_csv(wide, Layout::wide) == t);
}

TEST_CASE("round trips are bit-exact on random tables") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> rate(0.0, 7.0);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int round = 0; round < 25; ++round) {
    int nr = dim(rng), nc = dim(rng);
    std::vector<std::string> rows, cols;
    for (int r = 0; r < nr; ++r) rows.push_back("r" + std::to_string(r));
    for (int c = 0; c < nc; ++c) cols.push_back("c" + std::to_string(c));
    std::vector<std::vector<double>> cells(nr, std::vector<double>(nc));
    for (auto& row : cells)
      for (auto& cell : row) cell = rate(rng);
    RatingTable t(rows, cols, cells);

    for (Layout layout : {Layout::wide, Layout::long_form}) {
      std::istringstream in(t.to_csv(layout));
      RatingTable back = RatingTable::from_csv(in, layout);
      CHECK(back == t);  // bit-exact cell equality
    }
  }
}

TEST_CASE("weights are ratings over seven") {
  Dataset d = bundled();
  auto unit = ratings_to_weights(d.property_rates, "1");
  CHECK(unit.at("a1") == 6.60 / 7.0);
  CHECK(std::abs(unit.at("a1") - 0.94) <= 0.005);
  auto e6 = ratings_to_weights(d.property_rates, "e6");
  CHECK(std::abs(e6.at("a7") - 1.00) <= 0.005);

  RatingTable zero({"x"}, {"e"}, {{0.0}});
  CHECK(ratings_to_weights(zero, "e").at("x") == 0.0);
  CHECK_THROWS_AS(ratings_to_weights(zero, "f"), IdentifierError);
}

TEST_CASE("frequencies normalize by the column sum") {
  Dataset d = bundled();

  // column-sum oracle over the fourteen printed rates
  double unit_sum = 0.0;
  for (const auto& row : d.exemplar_rates.row_labels())
    unit_sum += d.exemplar_rates.at(row, "1");
  CHECK(unit_sum == doctest::Approx(56.28).epsilon(1e-12));

  auto unit = ratings_to_frequencies(d.exemplar_rates, "1");
  CHECK(unit.at("dog") == doctest::Approx(6.65 / 56.28).epsilon(1e-12));
  CHECK(std::abs(unit.at("dog") - 0.12) <= 0.01);

  double e1_sum = 0.0;
  for (const auto& row : d.exemplar_rates.row_labels())
    e1_sum += d.exemplar_rates.at(row, "e1");
  CHECK(e1_sum == doctest::Approx(15.84).epsilon(1e-12));
  auto e1 = ratings_to_frequencies(d.exemplar_rates, "e1");
  CHECK(e1.at("cat") == doctest::Approx(0.25).epsilon(1e-12));

  // frequencies sum to one in every column
  for (const auto& col : d.exemplar_rates.column_labels()) {
    auto freq = ratings_to_frequencies(d.exemplar_rates, col);
    double total = 0.0;
    for (const auto& [_, v] : freq) total += v;
    CHECK(std::abs(total - 1.0) <= 1e-9);
  }

  RatingTable single({"only"}, {"e"}, {{3.0}});
  CHECK(ratings_to_frequencies(single, "e").at("only") == 1.0);

  RatingTable zero({"x", "y"}, {"e"}, {{0.0}, {0.0}});
  CHECK_THROWS_AS(ratings_to_frequencies(zero, "e"), DegenerateColumnError);
}

TEST_CASE("building the pet system from the bundled tables") {
  Scop s = scop::ingest::build_scop(bundled());

  CHECK(s.states().size() == 7);
  CHECK(s.properties().size() == 14);
  CHECK(s.contexts().size() == 8);  // e1..e6 plus the bounds
  CHECK(s.ground_state().id == "ground");

  // published frequencies are authoritative
  CHECK(s.ground_state().exemplar_frequencies.at("dog") == 0.12);
  CHECK(s.state("p1").exemplar_frequencies.at("dog") == 0.50);

  // published weights are authoritative
  CHECK(s.property_weight("ground", "a1") == 0.94);
  CHECK(s.property_weight("p1", "a3") == 0.08);
  CHECK(s.property_weight("p5", "a6") == 0.82);

  // actuality: only a7 under the fish context reaches weight 1
  CHECK(s.actual_properties("p6") == std::vector<std::string>{"a7"});
  CHECK(s.actual_properties("ground").empty());
  CHECK(s.cartan_map("a7") == std::vector<std::string>{"p6"});
  CHECK(s.cartan_map("a1").empty());

  // deterministic collapse per context
  CHECK(s.transition_probability("p3", "e3", "p3") == 1.0);
  CHECK(s.transition_probability("p1", "e1", "ground") == 1.0);
  CHECK(s.transition_probability("p3", "e1", "ground") == 0.0);
  for (int i = 1; i <= 6; ++i) {
    std::string e = "e" + std::to_string(i);
    std::string p = "p" + std::to_string(i);
    CHECK(s.eigenstate_set(e) == std::vector<std::string>{p});
    auto d = s.apply_context(e, "ground");
    CHECK(d.is_point_mass());
    CHECK(d.point_state() == p);
  }
  auto fixed = s.apply_context("1", "p3");
  CHECK(fixed.is_point_mass());
  CHECK(fixed.point_state() == "p3");
}

TEST_CASE("building smaller or broken datasets") {
  Dataset d = bundled();

  {
    // unit context only: just the ground state
    Dataset unit_only = d;
    unit_only.contexts.entries = {{"1", "just the concept"}};
    RatingTable ex({"x", "y"}, {"1"}, {{3.0}, {1.0}});
    RatingTable pr({"a"}, {"1"}, {{7.0}});
    unit_only.exemplar_rates = ex;
    unit_only.exemplar_freqs.reset();
    unit_only.property_rates = pr;
    unit_only.property_weights.reset();
    unit_only.properties.entries = {{"a", "a property"}};
    Scop s = scop::ingest::build_scop(unit_only);
    CHECK(s.states().size() == 1);
    CHECK(s.ground_state().exemplar_frequencies.at("x") == 0.75);
    CHECK(s.property_weight("ground", "a") == 1.0);
  }
  {
    // property table referencing an unknown context
    Dataset broken = d;
    RatingTable pr({"a1"}, {"e9"}, {{1.0}});
    broken.property_rates = pr;
    broken.property_weights.reset();
    CHECK_THROWS_AS(scop::ingest::build_scop(broken), InputError);
  }
  {
    // missing unit context
    Dataset broken = d;
    broken.contexts.entries = {{"e1", "only one"}};
    CHECK_THROWS_AS(scop::ingest::build_scop(broken), InputError);
  }
  {
    // exemplar table missing a context column
    Dataset broken = d;
    RatingTable ex({"x"}, {"1"}, {{1.0}});
    broken.exemplar_rates = ex;
    broken.exemplar_freqs.reset();
    CHECK_THROWS_AS(scop::ingest::build_scop(broken), InputError);
  }
}

TEST_CASE("ranking exemplars") {
  Scop s = scop::ingest::build_scop(bundled());

  auto e1 = scop::ingest::rank_exemplars(s, "e1");
  REQUIRE(e1.size() == 14);
  CHECK(e1[0].first == "dog");
  CHECK(e1[0].second == 0.50);
  CHECK(e1[1].first == "cat");
  CHECK(e1[1].second == 0.25);

  auto e6 = scop::ingest::rank_exemplars(s, "e6");
  CHECK(e6[0].first == "goldfish");
  CHECK(e6[0].second == 0.48);
  CHECK(e6[1].first == "guppy");
  CHECK(e6[1].second == 0.46);

  auto e4 = scop::ingest::rank_exemplars(s, "e4");
  CHECK(e4[0].first == "spider");
  CHECK(e4[0].second == 0.23);
  CHECK(e4[1].first == "snake");
  CHECK(e4[1].second == 0.22);

  // the ranking is a permutation of the exemplar set
  std::set<std::string> seen;
  for (const auto& [name, _] : e1) seen.insert(name);
  CHECK(seen.size() == 14);

  // frequencies never increase down the list
  for (std::size_t i = 1; i < e1.size(); ++i)
    CHECK(e1[i - 1].second >= e1[i].second);

  // equal frequencies break ties by raw rating: hamster (0.85) ahead of
  // rabbit (0.07) at frequency 0.04 under e1
  std::size_t rabbit = 0, hamster = 0;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (e1[i].first == "rabbit") rabbit = i;
    if (e1[i].first == "hamster") hamster = i;
  }
  CHECK(e1[rabbit].second == e1[hamster].second);
  CHECK(hamster < rabbit);

  // the unit context ranks the ground state's frequencies
  auto unit = scop::ingest::rank_exemplars(s, "1");
  CHECK((unit[0].first == "dog" || unit[0].first == "cat"));

  // a state without frequency data cannot be ranked
  auto garden = scop::fixtures::garden();
  CHECK_THROWS_AS(scop::ingest::rank_exemplars(garden.scop, "e3"),
                  DomainError);
  CHECK_THROWS_AS(scop::ingest::rank_exemplars(s, "0"), DomainError);
  CHECK_THROWS_AS(scop::ingest::rank_exemplars(s, "e9"), IdentifierError);
}

TEST_CASE("ranking is invariant under positive rescaling of a column") {
  LabelTable contexts;
  contexts.entries = {{"e1", "ctx"}, {"1", "unit"}};
  RatingTable rates({"w", "x", "y", "z"}, {"e1", "1"},
                    {{6.0, 2.0}, {3.0, 2.0}, {1.5, 2.0}, {0.5, 2.0}});
  RatingTable props({"a"}, {"e1", "1"}, {{1.0, 1.0}});
  Scop s1 = scop::ingest::build_scop(contexts, rates, props);

  RatingTable scaled({"w", "x", "y", "z"}, {"e1", "1"},
                     {{3.0, 2.0}, {1.5, 2.0}, {0.75, 2.0}, {0.25, 2.0}});
  Scop s2 = scop::ingest::build_scop(contexts, scaled, props);

  auto r1 = scop::ingest::rank_exemplars(s1, "e1");
  auto r2 = scop::ingest::rank_exemplars(s2, "e1");
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    CHECK(r1[i].first == r2[i].first);
}

TEST_CASE("published p-values ship verbatim") {
  auto entries = scop::ingest::load_pvalue_fixture(kData + "/pvalues.csv");
  CHECK(entries.size() == 14 * 21);

  std::set<std::string> exemplars, pairs;
  for (const auto& e : entries) {
    exemplars.insert(e.exemplar);
    pairs.insert(e.context_pair);
  }
  CHECK(exemplars.size() == 14);
  CHECK(pairs.size() == 21);

  auto value_of = [&](const std::string& ex, const std::string& pair) {
    for (const auto& e : entries)
      if (e.exemplar == ex && e.context_pair == pair) return e.value;
    return std::string("missing");
  };
  CHECK(value_of("rabbit", "e1/e2") == "6.79E-5");
  CHECK(value_of("parrot", "e1/e2") == "6.30E-28");
  // the source table's irregular cells are preserved exactly as printed
  CHECK(value_of("snake", "e1/e4") == "2. 38E-23");
  CHECK(value_of("mouse", "e3/1") == "9/81E-7");
  CHECK(value_of("spider", "e2/e3") == "5.96");
}

TEST_CASE("system json round trip preserves behavior") {
  Scop pet = scop::ingest::build_scop(bundled());
  Scop back = scop::scop_from_json_string(scop::to_json_string(pet));

  CHECK(back.states().size() == pet.states().size());
  CHECK(back.contexts().size() == pet.contexts().size());
  CHECK(back.properties().size() == pet.properties().size());
  for (const auto& ctx : pet.contexts()) {
    if (ctx.id == "0") continue;
    CHECK(back.eigenstate_set(ctx.id) == pet.eigenstate_set(ctx.id));
  }
  for (const auto& st : pet.states())
    for (const auto& a : pet.properties())
      CHECK(back.property_weight(st.id, a.id) ==
            pet.property_weight(st.id, a.id));
  for (const auto& q : pet.states())
    for (const auto& ctx : pet.contexts())
      for (const auto& p : pet.states())
        CHECK(back.transition_probability(q.id, ctx.id, p.id) ==
              pet.transition_probability(q.id, ctx.id, p.id));
  for (const auto& ctx : pet.contexts()) {
    if (ctx.id == "0" || ctx.id == "1") continue;
    auto r1 = scop::ingest::rank_exemplars(pet, ctx.id);
    auto r2 = scop::ingest::rank_exemplars(back, ctx.id);
    CHECK(r1 == r2);
  }

  // a fixture with a multi-state eigenstate structure also survives
  Scop garden = scop::fixtures::garden().scop;
  Scop garden_back = scop::scop_from_json_string(scop::to_json_string(garden));
  for (const auto& ctx : garden.contexts())
    CHECK(garden_back.eigenstate_set(ctx.id) == garden.eigenstate_set(ctx.id));
  CHECK(garden_back.is_superposition_state("p11", {"e7", "e10"}));
}

TEST_CASE("the bundled garden system matches the in-code fixture") {
  std::ifstream in(kData + "/garden.json");
  REQUIRE(in.good());
  Scop shipped = scop::load_scop(in);
  Scop built = scop::fixtures::garden().scop;

  CHECK(scop::to_json_string(shipped) == scop::to_json_string(built));
  CHECK(shipped.is_superposition_state("p11", {"e7", "e10"}));
  CHECK(shipped.is_superposition_state("ground", {"e3", "e3'"}));
}

TEST_CASE("system json input errors") {
  CHECK_THROWS_AS(scop::scop_from_json_string("not json"), ParseError);
  CHECK_THROWS_AS(scop::scop_from_json_string("{}"), InputError);
  CHECK_THROWS_AS(scop::scop_from_json_string(
                      R"({"states": [{"id": "p", "label": "x"}]})"),
                  InputError);  // nobody is ground
  // duplicate mu triple
  CHECK_THROWS_AS(scop::scop_from_json_string(R"({
    "states": [{"id": "p", "label": "x", "ground": true}],
    "contexts": [{"id": "e", "label": "ctx"}],
    "mu": [{"q": "p", "e": "e", "p": "p", "prob": 1.0},
           {"q": "p", "e": "e", "p": "p", "prob": 1.0}]
  })"),
                  InputError);
}
