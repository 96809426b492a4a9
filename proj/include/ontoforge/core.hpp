#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ontoforge {

// Error taxonomy. The CLI maps these onto exit codes: ValidationError and
// IoError exit 1, UnknownSymbolError exits 2, CapacityError exits 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownSymbolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_lower_ascii(std::string_view s);
std::string to_upper_ascii(std::string_view s);
bool contains_whitespace(std::string_view s);

// Exact rational, always normalized: den > 0, gcd(|num|, den) == 1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integral() const { return den_ == 1; }

    std::string str() const;               // "69" or "7/2"
    static Rational parse(std::string_view text);  // "69", "7/2", "3.5"

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// A word sense: lowercase noun lemma plus an optional sense suffix, e.g. book#1.
// Senses are opaque identifiers supplied by input data; the engine never
// splits senses itself.
class ConceptId {
public:
    explicit ConceptId(std::string lemma, std::optional<int> sense = std::nullopt);

    const std::string& lemma() const { return lemma_; }
    std::optional<int> sense() const { return sense_; }

    std::string str() const;
    static ConceptId parse(std::string_view text);

    friend bool operator==(const ConceptId&, const ConceptId&) = default;
    friend auto operator<=>(const ConceptId&, const ConceptId&) = default;

private:
    std::string lemma_;
    std::optional<int> sense_;
};

// A named individual; case and internal spaces preserved ("Billy the Kid").
class IndividualId {
public:
    explicit IndividualId(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const IndividualId&, const IndividualId&) = default;
    friend auto operator<=>(const IndividualId&, const IndividualId&) = default;

private:
    std::string name_;
};

// Argument position a predicate constrains. Unary predicates (adjectives)
// use Arg0; a binary verb contributes Agent and Object slots separately so
// the applicability matrix stays boolean and two-dimensional.
// Enumerators are declared in name order so the default ordering matches the
// lexicographic ordering of the serialized forms.
enum class Slot { Agent, Arg0, Object };

std::string_view slot_name(Slot slot);
Slot parse_slot(std::string_view text);

// One column key of the applicability matrix: predicate label + slot,
// serialized "HEAVY/arg0", "DRIVE/object".
class PropertySlot {
public:
    PropertySlot(std::string predicate, Slot slot);

    const std::string& predicate() const { return predicate_; }
    Slot slot() const { return slot_; }

    std::string str() const;
    static PropertySlot parse(std::string_view text);

    friend bool operator==(const PropertySlot&, const PropertySlot&) = default;
    friend auto operator<=>(const PropertySlot&, const PropertySlot&) = default;

private:
    std::string predicate_;
    Slot slot_;
};

// The closed set of language-agnostic primitive relations.
enum class PrimitiveRelation {
    InstanceOf,
    Eq,
    HasProp,
    InState,
    AgentOf,
    ObjectOf,
    HasValue,
    ParticipantIn,
};

inline constexpr int kPrimitiveRelationCount = 8;

std::string_view relation_name(PrimitiveRelation r);
PrimitiveRelation parse_relation(std::string_view text);

// A reified predicate: the abstract object a predication is nominalized
// into (articulate -> articulation). sourcePredicate keeps the originating
// predicate label for round-trips.
class TropeId {
public:
    TropeId(std::string noun, std::string source_predicate);

    const std::string& noun() const { return noun_; }
    const std::string& source_predicate() const { return source_predicate_; }

    friend bool operator==(const TropeId&, const TropeId&) = default;
    friend auto operator<=>(const TropeId&, const TropeId&) = default;

private:
    std::string noun_;
    std::string source_predicate_;
};

// A measured attribute value ("69 YRS" on the age dimension). The quantity
// is optional: a type-level fact ("humans have a height") carries the
// attribute with the value unbound. When a quantity is bound the unit must
// be non-empty.
class MeasureValue {
public:
    MeasureValue(std::optional<Rational> quantity, std::string unit, std::string attribute);

    const std::optional<Rational>& quantity() const { return quantity_; }
    const std::string& unit() const { return unit_; }
    const std::string& attribute() const { return attribute_; }

    // "69 YRS", "5'10\"" for integral inch values, "?" when unbound
    std::string value_str() const;

    friend bool operator==(const MeasureValue&, const MeasureValue&) = default;
    friend auto operator<=>(const MeasureValue&, const MeasureValue&) = default;

private:
    std::optional<Rational> quantity_;
    std::string unit_;
    std::string attribute_;
};

using EntityRef = std::variant<ConceptId, IndividualId>;

bool is_concept(const EntityRef& e);
std::string entity_name(const EntityRef& e);

enum class Level { Individual, Concept };

// One observed (subject, predicate-slot) predication with provenance and an
// evidence count. The level is derived from the subject alternative, so the
// "level=concept iff subject is a ConceptId" invariant holds by construction.
class PredicationRecord {
public:
    PredicationRecord(EntityRef subject, PropertySlot property, std::string sentence,
                      std::uint64_t count = 1);

    const EntityRef& subject() const { return subject_; }
    const PropertySlot& property() const { return property_; }
    const std::string& sentence() const { return sentence_; }
    std::uint64_t count() const { return count_; }
    Level level() const { return is_concept(subject_) ? Level::Concept : Level::Individual; }

    friend bool operator==(const PredicationRecord&, const PredicationRecord&) = default;

private:
    EntityRef subject_;
    PropertySlot property_;
    std::string sentence_;
    std::uint64_t count_;
};

using TripleObject = std::variant<ConceptId, IndividualId, TropeId, MeasureValue>;

// A reified fact: subject -(relation)-> object. Construction enforces the
// relation/object shape constraints:
//   hasValue          -> MeasureValue object
//   hasProp, inState  -> TropeId object
//   agentOf, objectOf, participantIn -> TropeId object (the event noun)
//   instanceOf        -> ConceptId object
class PrimitiveTriple {
public:
    PrimitiveTriple(EntityRef subject, PrimitiveRelation relation, TripleObject object);

    const EntityRef& subject() const { return subject_; }
    PrimitiveRelation relation() const { return relation_; }
    const TripleObject& object() const { return object_; }

    friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;

private:
    EntityRef subject_;
    PrimitiveRelation relation_;
    TripleObject object_;
};

// Canonical one-line rendering: "Frido instanceOf dog",
// "Dan's age hasValue 69 YRS".
std::string to_string(const PrimitiveTriple& t);

}  // namespace ontoforge
