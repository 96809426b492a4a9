#include <doctest.h>

#include "ontoforge/core.hpp"

using namespace ontoforge;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(Rational(69).str() == "69");
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational::parse("69") == Rational(69));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("3.5") == Rational(7, 2));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
    CHECK_THROWS_AS(Rational::parse("abc"), ValidationError);
}

TEST_CASE("concept ids validate and order by lemma then sense") {
    const ConceptId book("book");
    const ConceptId book1("book", 1);
    CHECK(book.str() == "book");
    CHECK(book1.str() == "book#1");
    CHECK(ConceptId::parse("book#1") == book1);
    CHECK(ConceptId::parse("book") == book);
    CHECK(book < book1);  // no sense sorts first
    CHECK(ConceptId("apple") < ConceptId("book"));
    CHECK_THROWS_AS(ConceptId(""), ValidationError);
    CHECK_THROWS_AS(ConceptId("two words"), ValidationError);
    CHECK_THROWS_AS(ConceptId::parse("book#x"), ValidationError);
}

TEST_CASE("individual ids keep case and spaces") {
    const IndividualId billy("Billy the Kid");
    CHECK(billy.name() == "Billy the Kid");
    CHECK_THROWS_AS(IndividualId(""), ValidationError);
}

TEST_CASE("property slots serialize and order lexicographically") {
    const PropertySlot heavy("HEAVY", Slot::Arg0);
    CHECK(heavy.str() == "HEAVY/arg0");
    CHECK(PropertySlot::parse("HEAVY/arg0") == heavy);
    CHECK(PropertySlot::parse("DRIVE/object") == PropertySlot("DRIVE", Slot::Object));
    // slot order matches the alphabetical order of the serialized names
    CHECK(PropertySlot("DRIVE", Slot::Agent) < PropertySlot("DRIVE", Slot::Arg0));
    CHECK(PropertySlot("DRIVE", Slot::Arg0) < PropertySlot("DRIVE", Slot::Object));
    CHECK_THROWS_AS(PropertySlot::parse("HEAVY"), ValidationError);
    CHECK_THROWS_AS(PropertySlot::parse("HEAVY/argX"), ValidationError);
    CHECK_THROWS_AS(PropertySlot("HAS SPACE", Slot::Arg0), ValidationError);
}

TEST_CASE("the primitive relation vocabulary is closed with eight members") {
    const char* names[] = {"instanceOf", "eq",       "hasProp",  "inState",
                           "agentOf",    "objectOf", "hasValue", "participantIn"};
    CHECK(kPrimitiveRelationCount == 8);
    for (int i = 0; i < kPrimitiveRelationCount; ++i) {
        const auto r = static_cast<PrimitiveRelation>(i);
        CHECK(std::string(relation_name(r)) == names[i]);
        CHECK(parse_relation(names[i]) == r);
    }
    CHECK_THROWS_AS(parse_relation("partOf"), ValidationError);
}

TEST_CASE("measure values require attributes, and units only when bound") {
    const MeasureValue age(Rational(69), "YRS", "age");
    CHECK(age.value_str() == "69 YRS");
    const MeasureValue height(Rational(70), "in", "height");
    CHECK(height.value_str() == "5'10\"");
    const MeasureValue unbound(std::nullopt, "", "height");
    CHECK(unbound.value_str() == "?");
    CHECK_THROWS_AS(MeasureValue(Rational(1), "", "age"), ValidationError);
    CHECK_THROWS_AS(MeasureValue(std::nullopt, "", ""), ValidationError);
}

TEST_CASE("predication records derive their level from the subject") {
    const PredicationRecord individual(IndividualId("Frido"), PropertySlot("HUNGRY", Slot::Arg0),
                                       "Frido is hungry");
    CHECK(individual.level() == Level::Individual);
    const PredicationRecord generic(ConceptId("car"), PropertySlot("HEAVY", Slot::Arg0),
                                    "heavy car", 3);
    CHECK(generic.level() == Level::Concept);
    CHECK(generic.count() == 3);
    CHECK_THROWS_AS(PredicationRecord(ConceptId("car"), PropertySlot("HEAVY", Slot::Arg0), "", 0),
                    ValidationError);
}

TEST_CASE("triples enforce relation/object shapes") {
    CHECK_NOTHROW(PrimitiveTriple(IndividualId("Frido"), PrimitiveRelation::InstanceOf,
                                  ConceptId("dog")));
    CHECK_THROWS_AS(PrimitiveTriple(IndividualId("Frido"), PrimitiveRelation::InstanceOf,
                                    IndividualId("Rex")),
                    ValidationError);
    CHECK_THROWS_AS(PrimitiveTriple(ConceptId("human"), PrimitiveRelation::HasProp,
                                    ConceptId("wisdom")),
                    ValidationError);
    CHECK_NOTHROW(PrimitiveTriple(ConceptId("human"), PrimitiveRelation::HasProp,
                                  TropeId("articulation", "ARTICULATE")));
    CHECK_THROWS_AS(PrimitiveTriple(IndividualId("Dan"), PrimitiveRelation::HasValue,
                                    TropeId("age", "OLD")),
                    ValidationError);
    CHECK_NOTHROW(PrimitiveTriple(IndividualId("Dan"), PrimitiveRelation::HasValue,
                                  MeasureValue(Rational(69), "YRS", "age")));
}

TEST_CASE("triples render in relation-column style") {
    CHECK(to_string(PrimitiveTriple(IndividualId("Frido"), PrimitiveRelation::InstanceOf,
                                    ConceptId("dog"))) == "Frido instanceOf dog");
    CHECK(to_string(PrimitiveTriple(IndividualId("Billy the Kid"), PrimitiveRelation::Eq,
                                    IndividualId("William H. Boney"))) ==
          "Billy the Kid eq William H. Boney");
    CHECK(to_string(PrimitiveTriple(IndividualId("Mary"), PrimitiveRelation::HasProp,
                                    TropeId("wisdom", "WISE"))) == "Mary hasProp wisdom");
    CHECK(to_string(PrimitiveTriple(IndividualId("Dan"), PrimitiveRelation::HasValue,
                                    MeasureValue(Rational(69), "YRS", "age"))) ==
          "Dan's age hasValue 69 YRS");
    CHECK(to_string(PrimitiveTriple(IndividualId("John"), PrimitiveRelation::HasValue,
                                    MeasureValue(Rational(70), "in", "height"))) ==
          "John's height hasValue 5'10\"");
    CHECK(to_string(PrimitiveTriple(ConceptId("living"), PrimitiveRelation::InState,
                                    TropeId("hunger", "HUNGRY"))) == "living inState hunger");
}
