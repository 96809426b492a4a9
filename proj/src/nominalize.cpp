#include "ontoforge/nominalize.hpp"

namespace ontoforge {

Classification classify(const PropertySlot& p, const PredicateLexicon& lex) {
    if (const LexiconEntry* entry = lex.find_predicate(p.predicate())) {
        return Classification{entry->category, true};
    }
    if (p.slot() == Slot::Agent || p.slot() == Slot::Object) {
        return Classification{LexCategory::ActionVerb, false};
    }
    if (to_lower_ascii(p.predicate()).ends_with("ing")) {
        return Classification{LexCategory::ActionVerb, false};
    }
    return Classification{LexCategory::PropertyAdj, false};
}

TropeId nominalize_lemma(std::string_view predicate, const PredicateLexicon& lex) {
    const std::string source(predicate);
    const std::string lemma = to_lower_ascii(predicate);
    const LexiconEntry* entry = lex.find(lemma);
    if (entry && !entry->trope.empty()) return TropeId(entry->trope, source);

    const bool is_verb = (entry && entry->category == LexCategory::ActionVerb) ||
                         lemma.ends_with("ed") || lemma.ends_with("en");
    if (is_verb) {
        std::string stem = lemma;
        if (stem.ends_with("ed") || stem.ends_with("en")) stem.resize(stem.size() - 2);
        return TropeId(gerund_of(stem), source);
    }
    if (lemma.ends_with("ate")) {
        return TropeId(lemma.substr(0, lemma.size() - 1) + "ion", source);
    }
    if (lemma.ends_with("y")) {
        return TropeId(lemma.substr(0, lemma.size() - 1) + "iness", source);
    }
    return TropeId(lemma + "ness", source);
}

PrimitiveTriple reify(const PropertySlot& p, const EntityRef& subject,
                      const PredicateLexicon& lex) {
    const Classification cls = classify(p, lex);
    const LexiconEntry* entry = lex.find_predicate(p.predicate());
    switch (cls.category) {
        case LexCategory::PropertyAdj:
            return PrimitiveTriple(subject, PrimitiveRelation::HasProp,
                                   nominalize_lemma(p.predicate(), lex));
        case LexCategory::StateAdj:
            return PrimitiveTriple(subject, PrimitiveRelation::InState,
                                   nominalize_lemma(p.predicate(), lex));
        case LexCategory::ActionVerb: {
            const TropeId event = nominalize_lemma(p.predicate(), lex);
            if (p.slot() == Slot::Object) {
                return PrimitiveTriple(subject, PrimitiveRelation::ObjectOf, event);
            }
            const PrimitiveRelation rel =
                entry ? entry->agent_relation : PrimitiveRelation::AgentOf;
            return PrimitiveTriple(subject, rel, event);
        }
        case LexCategory::MeasureAdj:
            return PrimitiveTriple(subject, PrimitiveRelation::HasValue,
                                   MeasureValue(std::nullopt, "", entry->attribute));
        case LexCategory::Identity:
        case LexCategory::Kind:
            throw ValidationError("predicate '" + p.predicate() +
                                  "' is an identity/kind marker and does not reify");
    }
    throw ValidationError("unreachable predicate category");
}

PrimitiveTriple reify(const PropertySlot& p, const ConceptId& subject,
                      const PredicateLexicon& lex) {
    return reify(p, EntityRef(subject), lex);
}

}  // namespace ontoforge
