#include "scop/fixtures.hpp"

namespace scop::fixtures {

GardenFixture garden() {
  ScopBuilder b;
  b.add_state("ground", "The pet, not influenced by any particular context", true);
  b.add_state("p3", "The pet runs through the garden");
  b.add_state("p7", "The pet runs through the garden trying to catch a cat");
  b.add_state("p10", "The pet runs through the garden barking loudly to be fed");
  b.add_state("p11",
              "The pet runs through the garden trying to catch a cat or "
              "barking loudly to be fed");
  b.add_state("p13", "The pet tries to catch a cat outside the garden");

  b.add_context("e3", "The pet runs through the garden");
  b.add_context("e7", "The pet runs through the garden trying to catch a cat");
  b.add_context("e8",
                "The pet runs through the garden trying to catch a cat while "
                "barking loudly");
  b.add_context("e9", "The pet tries to catch a cat");
  b.add_context("e10",
                "The pet runs through the garden barking loudly to be fed");
  b.add_context("e11",
                "The pet runs through the garden trying to catch a cat or "
                "barking loudly to be fed");
  b.add_context("e12", "The pet barks loudly to be fed");
  b.add_context("e3'", "The pet does not run through the garden");

  b.set_eigenstates("e3", {"p3", "p7", "p10", "p11"});
  b.set_eigenstates("e7", {"p7"});
  b.set_eigenstates("e8", {"p7"});
  b.set_eigenstates("e9", {"p7", "p13"});
  b.set_eigenstates("e10", {"p10"});
  b.set_eigenstates("e11", {"p7", "p10", "p11"});
  b.set_eigenstates("e12", {"p10"});
  b.set_eigenstates("e3'", {"p13"});

  GardenFixture f{b.build(),
                  {{"e9", "e3", "e7"}, {"e3", "e3'", "0"}},
                  {{"e7", "e10", "e11"}, {"e3", "e3'", "1"}}};
  return f;
}

Scop feathered_swimmer() {
  ScopBuilder b;
  b.add_state("s0", "The pet, not influenced by any particular context", true);
  b.add_state("s1", "The pet is a duck");
  b.add_state("s2", "The pet is a canary");
  b.add_state("s3", "The pet is a goldfish");
  b.add_state("s4", "The pet is a cat");
  b.add_state("s5", "The pet is known not to be a feathered swimmer, nothing more");

  b.add_property("a3", "feathered");
  b.add_property("a7", "able to swim");
  b.add_property("a15", "feathered and able to swim");
  b.add_property("a3'", "not feathered");
  b.add_property("a7'", "unable to swim");
  b.add_property("a15'", "not feathered or unable to swim");

  auto actual = [&](const std::string& property,
                    const std::vector<std::string>& states) {
    for (const auto& s : states) b.set_property_weight(s, property, 1.0);
  };
  actual("a3", {"s1", "s2"});
  actual("a7", {"s1", "s3"});
  actual("a15", {"s1"});
  actual("a3'", {"s3", "s4"});
  actual("a7'", {"s2", "s4"});
  actual("a15'", {"s2", "s3", "s4", "s5"});

  // graded weights elsewhere; the ground state makes nothing actual
  b.set_property_weight("s0", "a3", 0.59);
  b.set_property_weight("s0", "a7", 0.60);
  b.set_property_weight("s0", "a15", 0.40);
  b.set_property_weight("s0", "a3'", 0.41);
  b.set_property_weight("s0", "a7'", 0.40);
  b.set_property_weight("s0", "a15'", 0.60);
  b.set_property_weight("s5", "a3", 0.50);
  b.set_property_weight("s5", "a7", 0.50);
  b.set_property_weight("s5", "a15", 0.0);
  b.set_property_weight("s5", "a3'", 0.50);
  b.set_property_weight("s5", "a7'", 0.50);
  b.set_property_weight("s2", "a7", 0.10);
  b.set_property_weight("s3", "a3", 0.05);
  b.set_property_weight("s4", "a15", 0.0);

  return b.build();
}

lattice::OrthoPoset garden_term_poset() {
  using lattice::Term;
  Term e3 = Term::generator("e3");
  Term e8 = Term::generator("e8");
  Term e9 = Term::generator("e9");
  Term e10 = Term::generator("e10");
  Term e12 = Term::generator("e12");
  Term e7 = Term::meet_of(e3, e9);
  Term e11 = Term::join_of(e7, e10);

  std::vector<Term> elements = {e3, e8, e9, e10, e12, e7, e11};
  std::vector<std::pair<Term, Term>> declared = {
      {e8, e7}, {e10, e3}, {e10, e12}, {e11, e3}};
  return lattice::OrthoPoset::from_elements(elements, declared);
}

}  // namespace scop::fixtures
