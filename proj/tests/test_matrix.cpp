#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "ontoforge/matrix.hpp"
#include "oracle.hpp"

using namespace ontoforge;
namespace tt = ontoforge::testing;

namespace {

PredicationRecord rec(const char* c, const char* pred, Slot slot, std::uint64_t count = 1) {
    return PredicationRecord(ConceptId(c), PropertySlot(pred, slot), "", count);
}

}  // namespace

TEST_CASE("build_matrix sums counts and rejects individual-level input") {
    const auto m = build_matrix({rec("car", "HEAVY", Slot::Arg0, 2), rec("car", "HEAVY", Slot::Arg0),
                                 rec("dog", "HUNGRY", Slot::Arg0)},
                                1);
    CHECK(m.concept_count() == 2);
    CHECK(m.property_count() == 2);
    const auto car = m.concept_index(ConceptId("car"));
    const auto heavy = m.property_index(PropertySlot("HEAVY", Slot::Arg0));
    REQUIRE(car);
    REQUIRE(heavy);
    CHECK(m.count_at(*car, *heavy) == 3);
    CHECK(m.applies(*car, *heavy));

    CHECK_THROWS_AS(
        build_matrix({PredicationRecord(IndividualId("Frido"), PropertySlot("HUNGRY", Slot::Arg0),
                                        "")},
                     1),
        ValidationError);
}

TEST_CASE("an empty record list builds an empty matrix") {
    const auto m = build_matrix({}, 1);
    CHECK(m.concept_count() == 0);
    CHECK(m.property_count() == 0);
    CHECK(enumerate_concepts(m).size() == 1);  // the single degenerate node
}

TEST_CASE("threshold semantics: counts below tau do not apply") {
    const auto m = build_matrix({rec("car", "HEAVY", Slot::Arg0, 3)}, 5);
    CHECK_FALSE(m.applies(0, 0));
    CHECK(m.count_at(0, 0) == 3);
}

TEST_CASE("extent and intent honor the empty-set conventions") {
    const auto m = build_matrix({rec("car", "HEAVY", Slot::Arg0), rec("dog", "HEAVY", Slot::Arg0),
                                 rec("dog", "HUNGRY", Slot::Arg0)},
                                1);
    // empty property set -> every concept
    CHECK(m.extent({}).size() == 2);
    // empty concept set -> every property
    CHECK(m.intent({}).size() == 2);
    CHECK(m.extent({PropertySlot("HUNGRY", Slot::Arg0)}) ==
          std::vector<ConceptId>{ConceptId("dog")});
    CHECK_THROWS_AS(m.extent({PropertySlot("NOPE", Slot::Arg0)}), UnknownSymbolError);
    CHECK_THROWS_AS(m.intent({ConceptId("unicorn")}), UnknownSymbolError);
}

TEST_CASE("disjoint property requirements intersect to an empty extent") {
    const auto m = build_matrix({rec("dog", "HUNGRY", Slot::Arg0), rec("car", "ASSEMBLE", Slot::Object)},
                                1);
    CHECK(m.extent({PropertySlot("HUNGRY", Slot::Arg0), PropertySlot("ASSEMBLE", Slot::Object)})
              .empty());
}

TEST_CASE("close is extensive and idempotent on a shipped example") {
    const auto fixture = tt::toy_fixture();
    const auto& m = fixture.matrix;
    const FormalConcept closed = m.close({ConceptId("car")});
    const auto car = m.concept_index(ConceptId("car"));
    REQUIRE(car);
    CHECK(closed.extent.test(*car));
    const FormalConcept twice = m.close_bits(closed.extent);
    CHECK(twice == closed);
}

TEST_CASE("enumerating a full context yields exactly one concept") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0), rec("a", "Q", Slot::Arg0),
                                 rec("b", "P", Slot::Arg0), rec("b", "Q", Slot::Arg0)},
                                1);
    const auto concepts = enumerate_concepts(m);
    CHECK(concepts.size() == 1);
    CHECK(concepts[0].extent.count() == 2);
    CHECK(concepts[0].intent.count() == 2);
}

TEST_CASE("enumerating a diagonal context yields top, bottom and two atoms") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0), rec("b", "Q", Slot::Arg0)}, 1);
    const auto concepts = enumerate_concepts(m);
    CHECK(concepts.size() == 4);
    CHECK(tt::to_index_pairs(concepts) == tt::powerset_closure_oracle(m));
}

TEST_CASE("the enumeration bound is enforced by name") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0)}, 1);
    CHECK_THROWS_WITH_AS(enumerate_concepts(m, 0), doctest::Contains("enumeration bound"),
                         CapacityError);
}

TEST_CASE("enumeration equals the powerset-closure oracle on random contexts") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        const auto m = tt::random_matrix(rng);
        CAPTURE(i);
        CHECK(tt::to_index_pairs(enumerate_concepts(m)) == tt::powerset_closure_oracle(m));
    }
}

TEST_CASE("enumeration emits top first and bottom last") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const auto m = tt::random_matrix(rng);
        const auto concepts = enumerate_concepts(m);
        REQUIRE(!concepts.empty());
        CHECK(concepts.front().extent == Bitset(m.concept_count(), true));
        CHECK(concepts.back().intent == Bitset(m.property_count(), true));
    }
}

TEST_CASE("galois laws hold over random matrices and subsets") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto m = tt::random_matrix(rng);
        const Bitset s = tt::random_concept_subset(rng, m);
        const Bitset t = s | tt::random_concept_subset(rng, m);  // s subset of t

        // extensivity
        CHECK(s.is_subset_of(m.close_bits(s).extent));
        // antitone intent
        CHECK(m.intent_bits(t).is_subset_of(m.intent_bits(s)));
        // monotone + idempotent closure
        const FormalConcept cs = m.close_bits(s);
        const FormalConcept ct = m.close_bits(t);
        CHECK(cs.extent.is_subset_of(ct.extent));
        CHECK(m.close_bits(cs.extent) == cs);
    }
}

TEST_CASE("adding a record at tau=1 never flips an applied cell off") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        auto records = tt::random_concept_records(rng, 6, 6, rng() % 20);
        const auto before = build_matrix(records, 1);
        records.push_back(tt::random_concept_records(rng, 6, 6, 1).front());
        const auto after = build_matrix(records, 1);
        for (std::size_t ci = 0; ci < before.concept_count(); ++ci) {
            for (std::size_t pi = 0; pi < before.property_count(); ++pi) {
                if (!before.applies(ci, pi)) continue;
                const auto ci2 = after.concept_index(before.concepts()[ci]);
                const auto pi2 = after.property_index(before.properties()[pi]);
                REQUIRE(ci2);
                REQUIRE(pi2);
                CHECK(after.applies(*ci2, *pi2));
            }
        }
    }
}

TEST_CASE("shuffling record order leaves the induced concepts unchanged") {
    std::mt19937_64 rng(5);
    auto records = tt::random_concept_records(rng, 8, 8, 30);
    const auto baseline = tt::to_index_pairs(enumerate_concepts(build_matrix(records, 1)));
    for (int i = 0; i < 5; ++i) {
        std::shuffle(records.begin(), records.end(), rng);
        CHECK(tt::to_index_pairs(enumerate_concepts(build_matrix(records, 1))) == baseline);
    }
}

TEST_CASE("property order reports subsumptions and equivalences from column inclusion") {
    const auto fixture = tt::toy_fixture();
    const PropertyOrder order = property_order(fixture.matrix);
    const auto has_pair = [&](const char* sub, const char* super) {
        return std::find(order.subsumptions.begin(), order.subsumptions.end(),
                         std::make_pair(PropertySlot::parse(sub), PropertySlot::parse(super))) !=
               order.subsumptions.end();
    };
    CHECK(has_pair("MANUFACTURE/object", "MAKE/object"));
    CHECK(has_pair("ARTICULATE/arg0", "OLD/arg0"));
    CHECK_FALSE(has_pair("MAKE/object", "MANUFACTURE/object"));
    // MAKE/object and ASSEMBLE/object cover the same concepts in the corpus
    const auto equivalent = std::make_pair(PropertySlot::parse("ASSEMBLE/object"),
                                           PropertySlot::parse("MAKE/object"));
    CHECK(std::find(order.equivalences.begin(), order.equivalences.end(), equivalent) !=
          order.equivalences.end());

    CHECK(property_order(build_matrix({}, 1)).subsumptions.empty());
}
