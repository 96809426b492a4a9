#pragma once

#include "ontoforge/core.hpp"
#include "ontoforge/lexicon.hpp"

namespace ontoforge {

struct Classification {
    LexCategory category;
    bool from_lexicon;  // false when a fallback heuristic decided
};

// Category of a property-slot: lexicon verdict when the predicate is known,
// otherwise slot-driven fallback (agent/object slots are verb evidence;
// arg0 predicates ending in -ING count as verbs; everything else is read as
// a property adjective and flagged).
Classification classify(const PropertySlot& p, const PredicateLexicon& lex);

// The trope a predicate reifies into: lexicon trope when present, otherwise
// suffix rules. Verbs (by lexicon category or -ed/-en surface) become event
// nouns via -ing; adjectives go -ate -> -ation, -y -> -iness, default -ness.
TropeId nominalize_lemma(std::string_view predicate, const PredicateLexicon& lex);

// Rewrites an applicability fact about `subject` into a primitive-relation
// triple:
//   property-adj          -> subject hasProp trope
//   state-adj             -> subject inState trope
//   action-verb at agent  -> subject agentOf|participantIn event-trope
//   action-verb at object -> subject objectOf event-trope
//   measure-adj           -> subject's attribute hasValue (unbound)
// Identity and kind categories never reify; they only arise as direct facts
// at the individual level.
PrimitiveTriple reify(const PropertySlot& p, const EntityRef& subject, const PredicateLexicon& lex);
PrimitiveTriple reify(const PropertySlot& p, const ConceptId& subject, const PredicateLexicon& lex);

}  // namespace ontoforge
