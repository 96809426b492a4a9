#include "ontoforge/core.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace ontoforge {

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string to_upper_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
}

bool contains_whitespace(std::string_view s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("not a valid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ValidationError("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash), "numerator"),
                        parse_int(text.substr(slash + 1), "denominator"));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) {
            throw ValidationError("not a valid decimal: '" + std::string(text) + "'");
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool neg = !whole.empty() && whole.front() == '-';
        const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole, "number");
        const std::int64_t f = parse_int(frac, "number");
        const std::int64_t mag = (w < 0 ? -w : w) * den + f;
        return Rational(neg ? -mag : mag, den);
    }
    return Rational(parse_int(text, "number"));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // scales stay small in practice; cross-multiplication is exact enough here
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ConceptId::ConceptId(std::string lemma, std::optional<int> sense)
    : lemma_(std::move(lemma)), sense_(sense) {
    if (lemma_.empty()) throw ValidationError("concept lemma must be non-empty");
    if (contains_whitespace(lemma_)) {
        throw ValidationError("concept lemma must not contain whitespace: '" + lemma_ + "'");
    }
    if (lemma_.find('#') != std::string::npos) {
        throw ValidationError("concept lemma must not contain '#': '" + lemma_ + "'");
    }
}

std::string ConceptId::str() const {
    if (!sense_) return lemma_;
    return lemma_ + "#" + std::to_string(*sense_);
}

ConceptId ConceptId::parse(std::string_view text) {
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
        const std::int64_t sense = parse_int(text.substr(hash + 1), "sense suffix");
        return ConceptId(std::string(text.substr(0, hash)), static_cast<int>(sense));
    }
    return ConceptId(std::string(text));
}

IndividualId::IndividualId(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw ValidationError("individual name must be non-empty");
}

std::string_view slot_name(Slot slot) {
    switch (slot) {
        case Slot::Agent: return "agent";
        case Slot::Arg0: return "arg0";
        case Slot::Object: return "object";
    }
    throw ValidationError("invalid slot value");
}

Slot parse_slot(std::string_view text) {
    if (text == "agent") return Slot::Agent;
    if (text == "arg0") return Slot::Arg0;
    if (text == "object") return Slot::Object;
    throw ValidationError("unknown slot: '" + std::string(text) + "'");
}

PropertySlot::PropertySlot(std::string predicate, Slot slot)
    : predicate_(std::move(predicate)), slot_(slot) {
    if (predicate_.empty()) throw ValidationError("property predicate must be non-empty");
    if (contains_whitespace(predicate_)) {
        throw ValidationError("property predicate must not contain whitespace: '" + predicate_ + "'");
    }
    if (predicate_.find('/') != std::string::npos) {
        throw ValidationError("property predicate must not contain '/': '" + predicate_ + "'");
    }
}

std::string PropertySlot::str() const {
    return predicate_ + "/" + std::string(slot_name(slot_));
}

PropertySlot PropertySlot::parse(std::string_view text) {
    const auto slash = text.rfind('/');
    if (slash == std::string_view::npos) {
        throw ValidationError("property must have the form PREDICATE/slot: '" + std::string(text) + "'");
    }
    return PropertySlot(std::string(text.substr(0, slash)), parse_slot(text.substr(slash + 1)));
}

std::string_view relation_name(PrimitiveRelation r) {
    switch (r) {
        case PrimitiveRelation::InstanceOf: return "instanceOf";
        case PrimitiveRelation::Eq: return "eq";
        case PrimitiveRelation::HasProp: return "hasProp";
        case PrimitiveRelation::InState: return "inState";
        case PrimitiveRelation::AgentOf: return "agentOf";
        case PrimitiveRelation::ObjectOf: return "objectOf";
        case PrimitiveRelation::HasValue: return "hasValue";
        case PrimitiveRelation::ParticipantIn: return "participantIn";
    }
    throw ValidationError("invalid relation value");
}

PrimitiveRelation parse_relation(std::string_view text) {
    if (text == "instanceOf") return PrimitiveRelation::InstanceOf;
    if (text == "eq") return PrimitiveRelation::Eq;
    if (text == "hasProp") return PrimitiveRelation::HasProp;
    if (text == "inState") return PrimitiveRelation::InState;
    if (text == "agentOf") return PrimitiveRelation::AgentOf;
    if (text == "objectOf") return PrimitiveRelation::ObjectOf;
    if (text == "hasValue") return PrimitiveRelation::HasValue;
    if (text == "participantIn") return PrimitiveRelation::ParticipantIn;
    throw ValidationError("unknown relation: '" + std::string(text) + "'");
}

TropeId::TropeId(std::string noun, std::string source_predicate)
    : noun_(std::move(noun)), source_predicate_(std::move(source_predicate)) {
    if (noun_.empty()) throw ValidationError("trope noun must be non-empty");
}

MeasureValue::MeasureValue(std::optional<Rational> quantity, std::string unit, std::string attribute)
    : quantity_(quantity), unit_(std::move(unit)), attribute_(std::move(attribute)) {
    if (attribute_.empty()) throw ValidationError("measure attribute must be non-empty");
    if (quantity_ && unit_.empty()) {
        throw ValidationError("measure with a bound quantity needs a unit (attribute '" + attribute_ + "')");
    }
}

std::string MeasureValue::value_str() const {
    if (!quantity_) return "?";
    // inch values print in the conventional feet'inches" form
    if (unit_ == "in" && quantity_->is_integral() && quantity_->num() >= 0) {
        const std::int64_t total = quantity_->num();
        return std::to_string(total / 12) + "'" + std::to_string(total % 12) + "\"";
    }
    return quantity_->str() + " " + unit_;
}

bool is_concept(const EntityRef& e) {
    return std::holds_alternative<ConceptId>(e);
}

std::string entity_name(const EntityRef& e) {
    if (const auto* c = std::get_if<ConceptId>(&e)) return c->str();
    return std::get<IndividualId>(e).name();
}

PredicationRecord::PredicationRecord(EntityRef subject, PropertySlot property,
                                     std::string sentence, std::uint64_t count)
    : subject_(std::move(subject)),
      property_(std::move(property)),
      sentence_(std::move(sentence)),
      count_(count) {
    if (count_ < 1) throw ValidationError("predication count must be >= 1");
}

PrimitiveTriple::PrimitiveTriple(EntityRef subject, PrimitiveRelation relation, TripleObject object)
    : subject_(std::move(subject)), relation_(relation), object_(std::move(object)) {
    const bool object_is_measure = std::holds_alternative<MeasureValue>(object_);
    const bool object_is_trope = std::holds_alternative<TropeId>(object_);
    const bool object_is_concept = std::holds_alternative<ConceptId>(object_);
    switch (relation_) {
        case PrimitiveRelation::HasValue:
            if (!object_is_measure) throw ValidationError("hasValue requires a measure object");
            break;
        case PrimitiveRelation::HasProp:
        case PrimitiveRelation::InState:
        case PrimitiveRelation::AgentOf:
        case PrimitiveRelation::ObjectOf:
        case PrimitiveRelation::ParticipantIn:
            if (!object_is_trope) {
                throw ValidationError(std::string(relation_name(relation_)) + " requires a trope object");
            }
            break;
        case PrimitiveRelation::InstanceOf:
            if (!object_is_concept) throw ValidationError("instanceOf requires a concept object");
            break;
        case PrimitiveRelation::Eq:
            if (object_is_measure || object_is_trope) {
                throw ValidationError("eq requires an entity object");
            }
            break;
    }
}

std::string to_string(const PrimitiveTriple& t) {
    const std::string subject = entity_name(t.subject());
    if (t.relation() == PrimitiveRelation::HasValue) {
        const auto& m = std::get<MeasureValue>(t.object());
        return subject + "'s " + m.attribute() + " hasValue " + m.value_str();
    }
    std::string object;
    if (const auto* c = std::get_if<ConceptId>(&t.object())) {
        object = c->str();
    } else if (const auto* i = std::get_if<IndividualId>(&t.object())) {
        object = i->name();
    } else {
        object = std::get<TropeId>(t.object()).noun();
    }
    return subject + " " + std::string(relation_name(t.relation())) + " " + object;
}

}  // namespace ontoforge
