#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ontoforge/bitset.hpp"
#include "ontoforge/core.hpp"

namespace ontoforge {

// A mutually closed (extent, intent) pair over matrix indices: the extent is
// exactly the set of concepts every intent property applies to, and vice
// versa. These pairs are the induced types.
struct FormalConcept {
    Bitset extent;  // over concept indices
    Bitset intent;  // over property indices

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

// Boolean applicability context over concepts x property-slots, backed by
// evidence counts and a threshold tau: a property applies to a concept iff
// its summed evidence count reaches tau. The boolean view is derived from
// the counts, never stored independently. Concepts and properties are kept
// in lexicographic order so every downstream artifact is deterministic.
class ApplicabilityMatrix {
public:
    ApplicabilityMatrix() = default;

    // Validated assembly from parts (snapshot loading). Concept/property
    // vectors must be strictly sorted; count keys must be in range.
    ApplicabilityMatrix(std::vector<ConceptId> concepts, std::vector<PropertySlot> properties,
                        std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts,
                        std::uint64_t tau);

    std::uint64_t tau() const { return tau_; }
    std::size_t concept_count() const { return concepts_.size(); }
    std::size_t property_count() const { return properties_.size(); }
    const std::vector<ConceptId>& concepts() const { return concepts_; }
    const std::vector<PropertySlot>& properties() const { return properties_; }

    std::optional<std::size_t> concept_index(const ConceptId& c) const;
    std::optional<std::size_t> property_index(const PropertySlot& p) const;

    std::uint64_t count_at(std::size_t ci, std::size_t pi) const;
    bool applies(std::size_t ci, std::size_t pi) const { return count_at(ci, pi) >= tau_; }

    // Ordered (concept index, property index) -> count; only nonzero cells.
    const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& counts() const {
        return counts_;
    }

    const Bitset& concept_row(std::size_t ci) const { return rows_[ci]; }
    const Bitset& property_column(std::size_t pi) const { return columns_[pi]; }

    // Index-space derivation operators of the Galois connection.
    Bitset extent_bits(const Bitset& properties) const;
    Bitset intent_bits(const Bitset& concepts) const;
    FormalConcept close_bits(const Bitset& concepts) const;

    // Id-space wrappers; unknown symbols raise UnknownSymbolError.
    std::vector<ConceptId> extent(const std::vector<PropertySlot>& ps) const;
    std::vector<PropertySlot> intent(const std::vector<ConceptId>& cs) const;
    FormalConcept close(const std::vector<ConceptId>& cs) const;

    std::vector<ConceptId> concepts_of(const Bitset& extent) const;
    std::vector<PropertySlot> properties_of(const Bitset& intent) const;

    friend bool operator==(const ApplicabilityMatrix&, const ApplicabilityMatrix&) = default;

private:
    std::vector<ConceptId> concepts_;
    std::vector<PropertySlot> properties_;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts_;
    std::uint64_t tau_ = 1;
    std::vector<Bitset> rows_;     // per concept, over properties
    std::vector<Bitset> columns_;  // per property, over concepts

    void rebuild_incidence();
};

// Sums evidence per (concept, property) pair. Rejects individual-level
// records: callers must generalize first.
ApplicabilityMatrix build_matrix(const std::vector<PredicationRecord>& records, std::uint64_t tau);

inline constexpr std::size_t kEnumerationBound = 4096;

// All formal concepts of the context, in lexicographic closure order
// (top, with extent = all concepts, first; bottom last). Dimensions beyond
// `bound` raise CapacityError.
std::vector<FormalConcept> enumerate_concepts(const ApplicabilityMatrix& m,
                                              std::size_t bound = kEnumerationBound);

// Predicate subsumption read off column inclusion: (p, q) pairs with
// extent({p}) strictly contained in extent({q}), plus equal-column pairs
// reported separately as equivalences (each unordered pair once).
struct PropertyOrder {
    std::vector<std::pair<PropertySlot, PropertySlot>> subsumptions;
    std::vector<std::pair<PropertySlot, PropertySlot>> equivalences;
};

PropertyOrder property_order(const ApplicabilityMatrix& m);

}  // namespace ontoforge
