#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ontoforge/bitset.hpp"
#include "ontoforge/core.hpp"
#include "ontoforge/matrix.hpp"

namespace ontoforge {

// Label seeds: a label names either a concept set (the node is the closure
// of that set) or a property set (the node is that set's extent). Map keys
// keep labels unique.
using SeedTarget = std::variant<std::vector<ConceptId>, std::vector<PropertySlot>>;
using LabelSeeds = std::map<std::string, SeedTarget>;

// The induced type hierarchy: a DAG of formal concepts ordered by extent
// inclusion, with transitively irreducible cover edges. Nodes keep the
// enumeration order (closure-lexicographic), so the top node (extent = all
// concepts) is first and the bottom node (intent = all properties) is last.
// Immutable after construction; safe for concurrent readers.
class TypeLattice {
public:
    TypeLattice() = default;

    // Assembles and validates a lattice from parts; used by build_lattice
    // and by snapshot loading. Edges must be the cover edges of extent
    // inclusion (parent, child).
    TypeLattice(std::vector<ConceptId> concepts, std::vector<PropertySlot> properties,
                std::vector<FormalConcept> nodes, std::vector<std::vector<std::string>> labels,
                std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t top,
                std::size_t bottom);

    std::size_t node_count() const { return nodes_.size(); }
    const FormalConcept& node(std::size_t i) const { return nodes_[i]; }
    const std::vector<std::string>& labels(std::size_t i) const { return labels_[i]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }
    const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }

    const std::vector<ConceptId>& concepts() const { return concepts_; }
    const std::vector<PropertySlot>& properties() const { return properties_; }
    std::optional<std::size_t> concept_index(const ConceptId& c) const;
    std::optional<std::size_t> property_index(const PropertySlot& p) const;

    // First label, or a name synthesized from the most specific property
    // introduced at the node (type_HUNGRY, type_DRIVE_object), or node<i>.
    const std::string& display_name(std::size_t i) const { return display_names_[i]; }

    std::optional<std::size_t> node_of_label(const std::string& label) const;
    std::optional<std::size_t> node_of_extent(const Bitset& extent) const;

    // The most specific node containing the concept (its object concept).
    std::size_t object_node(std::size_t concept_idx) const { return object_nodes_[concept_idx]; }

    // The most general node carrying the property in its intent; its extent
    // equals the property's column, i.e. the property's selectional type.
    std::size_t signature_node(std::size_t property_idx) const {
        return signature_nodes_[property_idx];
    }

    // Subtype test between labeled nodes, by extent inclusion.
    bool label_below(const std::string& sub, const std::string& super) const;

    // Chain of cover edges from `from` up to its ancestor `to`, inclusive;
    // nullopt when `to` is not an ancestor-or-self. Deterministic (shortest,
    // lowest-index tie-break).
    std::optional<std::vector<std::size_t>> upward_path(std::size_t from, std::size_t to) const;

    std::vector<std::size_t> path_to_top(std::size_t from) const;

    friend bool operator==(const TypeLattice& a, const TypeLattice& b);

private:
    std::vector<ConceptId> concepts_;
    std::vector<PropertySlot> properties_;
    std::vector<FormalConcept> nodes_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;

    // derived
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::string> display_names_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> extent_index_;
    std::map<std::string, std::size_t> label_index_;
    std::vector<std::size_t> object_nodes_;
    std::vector<std::size_t> signature_nodes_;

    void derive();
};

struct LatticeBuild {
    TypeLattice lattice;
    std::vector<std::string> warnings;
};

// Computes cover edges from extent inclusion and attaches seed labels.
// A seed resolving to no node is a ValidationError; two seeds resolving to
// the same node both stick, with a warning.
LatticeBuild build_lattice(const ApplicabilityMatrix& m, const std::vector<FormalConcept>& concepts,
                           const LabelSeeds& seeds);

}  // namespace ontoforge
