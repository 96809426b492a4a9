#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ontoforge/lattice.hpp"

using namespace ontoforge;
namespace tt = ontoforge::testing;

namespace {

PredicationRecord rec(const char* c, const char* pred, Slot slot, std::uint64_t count = 1) {
    return PredicationRecord(ConceptId(c), PropertySlot(pred, slot), "", count);
}

}  // namespace

TEST_CASE("the everyday-kinds corpus induces the expected labeled hierarchy") {
    const auto fixture = tt::toy_fixture();
    const TypeLattice& lattice = fixture.lattice;

    CHECK(lattice.node_count() == 10);
    CHECK(lattice.label_below("car", "physical"));
    CHECK(lattice.label_below("physical", "entity"));
    CHECK(lattice.label_below("car", "entity"));
    CHECK(lattice.label_below("instrument", "artifact"));
    CHECK(lattice.label_below("human", "living"));
    CHECK(lattice.label_below("vehicle", "artifact"));
    CHECK_FALSE(lattice.label_below("car", "living"));
    CHECK_FALSE(lattice.label_below("physical", "car"));
    CHECK_THROWS_AS(lattice.label_below("car", "noSuchLabel"), UnknownSymbolError);

    // the top node is labeled by the everything-applicable seed
    CHECK(lattice.display_name(lattice.top()) == "entity");
    CHECK(lattice.node(lattice.bottom()).extent.none());
}

TEST_CASE("every cover edge is a strict inclusion with nothing in between") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const auto m = tt::random_matrix(rng, 8);
        const auto concepts = enumerate_concepts(m);
        const auto built = build_lattice(m, concepts, {});
        const TypeLattice& lattice = built.lattice;
        for (const auto& [parent, child] : lattice.edges()) {
            CHECK(lattice.node(child).extent.is_proper_subset_of(lattice.node(parent).extent));
            for (std::size_t mid = 0; mid < lattice.node_count(); ++mid) {
                if (mid == parent || mid == child) continue;
                const bool between =
                    lattice.node(child).extent.is_proper_subset_of(lattice.node(mid).extent) &&
                    lattice.node(mid).extent.is_proper_subset_of(lattice.node(parent).extent);
                CHECK_FALSE(between);
            }
        }
    }
}

TEST_CASE("an all-false context degenerates to a two-node lattice") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0, 1), rec("b", "Q", Slot::Arg0, 1)}, 5);
    const auto concepts = enumerate_concepts(m);
    const auto built = build_lattice(m, concepts, {});
    CHECK(built.lattice.node_count() == 2);
    CHECK(built.lattice.node(built.lattice.top()).extent.count() == 2);
    CHECK(built.lattice.node(built.lattice.top()).intent.none());
    CHECK(built.lattice.node(built.lattice.bottom()).extent.none());
    CHECK(built.lattice.edges().size() == 1);
}

TEST_CASE("a single-concept lattice has no edges") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0)}, 1);
    const auto built = build_lattice(m, enumerate_concepts(m), {});
    CHECK(built.lattice.node_count() == 1);
    CHECK(built.lattice.edges().empty());
    CHECK(built.lattice.top() == built.lattice.bottom());
}

TEST_CASE("seeds resolving to one node attach both labels and warn") {
    // P and Q have identical columns, so their intent seeds meet in one node
    const auto m = build_matrix({rec("a", "P", Slot::Arg0), rec("a", "Q", Slot::Arg0),
                                 rec("b", "R", Slot::Arg0)},
                                1);
    LabelSeeds seeds;
    seeds.emplace("first", std::vector<PropertySlot>{PropertySlot("P", Slot::Arg0)});
    seeds.emplace("second", std::vector<PropertySlot>{PropertySlot("Q", Slot::Arg0)});
    const auto built = build_lattice(m, enumerate_concepts(m), seeds);
    CHECK(built.warnings.size() == 1);
    const auto node = built.lattice.node_of_label("first");
    REQUIRE(node);
    CHECK(built.lattice.node_of_label("second") == node);
    CHECK(built.lattice.labels(*node) == std::vector<std::string>{"first", "second"});
}

TEST_CASE("seeds naming unknown symbols fail loudly") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0)}, 1);
    LabelSeeds bad_concept;
    bad_concept.emplace("x", std::vector<ConceptId>{ConceptId("unicorn")});
    CHECK_THROWS_AS(build_lattice(m, enumerate_concepts(m), bad_concept), ValidationError);
    LabelSeeds bad_property;
    bad_property.emplace("x", std::vector<PropertySlot>{PropertySlot("NOPE", Slot::Arg0)});
    CHECK_THROWS_AS(build_lattice(m, enumerate_concepts(m), bad_property), ValidationError);
}

TEST_CASE("unlabeled nodes synthesize names from properties introduced at them") {
    const auto m = build_matrix({rec("dog", "HUNGRY", Slot::Arg0), rec("dog", "OLD", Slot::Arg0),
                                 rec("car", "OLD", Slot::Arg0), rec("car", "DRIVE", Slot::Object)},
                                1);
    const auto built = build_lattice(m, enumerate_concepts(m), {});
    const TypeLattice& lattice = built.lattice;
    bool saw_hungry = false;
    bool saw_drive_object = false;
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
        if (lattice.display_name(i) == "type_HUNGRY") saw_hungry = true;
        if (lattice.display_name(i) == "type_DRIVE_object") saw_drive_object = true;
    }
    CHECK(saw_hungry);
    CHECK(saw_drive_object);
}

TEST_CASE("upward paths follow cover edges deterministically") {
    const auto fixture = tt::toy_fixture();
    const TypeLattice& lattice = fixture.lattice;
    const auto car = lattice.node_of_label("car");
    const auto entity = lattice.node_of_label("entity");
    REQUIRE(car);
    REQUIRE(entity);
    const auto path = lattice.upward_path(*car, *entity);
    REQUIRE(path);
    CHECK(path->front() == *car);
    CHECK(path->back() == *entity);
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        CHECK(lattice.node((*path)[i]).extent.is_proper_subset_of(
            lattice.node((*path)[i + 1]).extent));
    }
    // no downward path exists from a label to its subtype
    CHECK_FALSE(lattice.upward_path(*entity, *car).has_value());
}

TEST_CASE("lattices validate their parts") {
    const auto m = build_matrix({rec("a", "P", Slot::Arg0)}, 1);
    const auto concepts = enumerate_concepts(m);
    // duplicate extents are rejected
    auto doubled = concepts;
    doubled.push_back(concepts.front());
    CHECK_THROWS_AS(TypeLattice(m.concepts(), m.properties(), doubled,
                                std::vector<std::vector<std::string>>(doubled.size()), {}, 0, 0),
                    ValidationError);
    // edges must point from strict supersets to subsets
    CHECK_THROWS_AS(TypeLattice(m.concepts(), m.properties(), concepts,
                                std::vector<std::vector<std::string>>(concepts.size()),
                                {{0, 0}}, 0, 0),
                    ValidationError);
}
