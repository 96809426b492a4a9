#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ontoforge/core.hpp"
#include "ontoforge/lattice.hpp"
#include "ontoforge/lexicon.hpp"

namespace ontoforge {

// A concept's meaning organized by primitive-relation dimension: for every
// property applicable to the concept, the reified trope lands in its
// relation's bucket. Buckets are sorted by trope noun and deduplicated by
// noun (first source kept), so two predicates sharing a trope collapse.
struct MeaningProfile {
    ConceptId subject_concept;
    std::map<PrimitiveRelation, std::vector<TropeId>> dimensions;
};

struct Sensibility {
    bool sensible = false;
    // Display names of the justification chain: the concept's node up to
    // the property's signature node when sensible, otherwise the concept's
    // ancestor chain up to the top (showing where the concept actually
    // lives).
    std::vector<std::string> path;
};

// Read-only questions over a built lattice; fully parallel-safe.
class QueryEngine {
public:
    QueryEngine(const TypeLattice& lattice, const PredicateLexicon& lexicon)
        : lattice_(lattice), lexicon_(lexicon) {}

    // Every applicable property of the concept, reified and bucketed by
    // primitive relation. Unknown concepts raise UnknownSymbolError.
    MeaningProfile profile(const ConceptId& subject_concept) const;

    // The lattice node whose extent is exactly the property's extent — its
    // selectional type.
    std::size_t signature_node(const PropertySlot& property) const;

    // Type-correctness of a predication: true iff the concept lies at or
    // below the property's signature node. Never silently false on unknown
    // symbols.
    Sensibility is_sensible(const PropertySlot& property, const ConceptId& subject_concept) const;

    // The least node containing both concepts (their join); unique because
    // closed extents are intersection-closed.
    std::size_t common_supertype(const ConceptId& a, const ConceptId& b) const;

    const TypeLattice& lattice() const { return lattice_; }

private:
    const TypeLattice& lattice_;
    const PredicateLexicon& lexicon_;

    std::size_t require_concept(const ConceptId& c) const;
    std::size_t require_property(const PropertySlot& p) const;
};

}  // namespace ontoforge
