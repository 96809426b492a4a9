#include "ontoforge/query.hpp"

#include <algorithm>

#include "ontoforge/nominalize.hpp"

namespace ontoforge {

std::size_t QueryEngine::require_concept(const ConceptId& c) const {
    const auto ci = lattice_.concept_index(c);
    if (!ci) throw UnknownSymbolError("unknown concept: " + c.str());
    return *ci;
}

std::size_t QueryEngine::require_property(const PropertySlot& p) const {
    const auto pi = lattice_.property_index(p);
    if (!pi) throw UnknownSymbolError("unknown property: " + p.str());
    return *pi;
}

MeaningProfile QueryEngine::profile(const ConceptId& subject_concept) const {
    const std::size_t ci = require_concept(subject_concept);
    MeaningProfile out{subject_concept, {}};

    for (std::size_t pi = 0; pi < lattice_.properties().size(); ++pi) {
        // app(p, c) holds iff c lies in the property's signature extent
        if (!lattice_.node(lattice_.signature_node(pi)).extent.test(ci)) continue;
        const PropertySlot& p = lattice_.properties()[pi];
        const PrimitiveTriple triple = reify(p, subject_concept, lexicon_);
        TropeId trope = [&] {
            if (triple.relation() == PrimitiveRelation::HasValue) {
                // measured dimensions bucket under their attribute noun
                return TropeId(std::get<MeasureValue>(triple.object()).attribute(), p.predicate());
            }
            return std::get<TropeId>(triple.object());
        }();
        out.dimensions[triple.relation()].push_back(std::move(trope));
    }

    for (auto& [relation, tropes] : out.dimensions) {
        std::sort(tropes.begin(), tropes.end());
        // dedup by noun, first source kept
        tropes.erase(std::unique(tropes.begin(), tropes.end(),
                                 [](const TropeId& a, const TropeId& b) {
                                     return a.noun() == b.noun();
                                 }),
                     tropes.end());
    }
    return out;
}

std::size_t QueryEngine::signature_node(const PropertySlot& property) const {
    return lattice_.signature_node(require_property(property));
}

Sensibility QueryEngine::is_sensible(const PropertySlot& property, const ConceptId& subject_concept) const {
    const std::size_t ci = require_concept(subject_concept);
    const std::size_t sig = signature_node(property);
    const std::size_t start = lattice_.object_node(ci);

    Sensibility out;
    out.sensible = lattice_.node(sig).extent.test(ci);
    const auto nodes_to_names = [&](const std::vector<std::size_t>& nodes) {
        std::vector<std::string> names;
        names.reserve(nodes.size());
        for (const std::size_t n : nodes) names.push_back(lattice_.display_name(n));
        return names;
    };
    if (out.sensible) {
        const auto path = lattice_.upward_path(start, sig);
        // the signature node is an ancestor-or-self of every node whose
        // extent it contains, so the path always exists
        out.path = nodes_to_names(path.value());
    } else {
        out.path = nodes_to_names(lattice_.path_to_top(start));
    }
    return out;
}

std::size_t QueryEngine::common_supertype(const ConceptId& a, const ConceptId& b) const {
    const std::size_t ca = require_concept(a);
    const std::size_t cb = require_concept(b);

    std::size_t best = lattice_.top();
    std::size_t best_size = lattice_.node(best).extent.count();
    for (std::size_t i = 0; i < lattice_.node_count(); ++i) {
        const auto& extent = lattice_.node(i).extent;
        if (extent.test(ca) && extent.test(cb)) {
            const std::size_t sz = extent.count();
            if (sz < best_size || (sz == best_size && i < best)) {
                best = i;
                best_size = sz;
            }
        }
    }
    return best;
}

}  // namespace ontoforge
