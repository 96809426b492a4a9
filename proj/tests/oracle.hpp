#pragma once

// Brute-force reference for the closure machinery. Works directly off the
// count cells with plain loops — deliberately independent of the bitset
// incidence paths it checks.

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ontoforge/matrix.hpp"

namespace ontoforge::testing {

using IndexSet = std::vector<std::size_t>;
using ConceptPair = std::pair<IndexSet, IndexSet>;  // (extent, intent)

inline bool oracle_applies(const ApplicabilityMatrix& m, std::size_t ci, std::size_t pi) {
    return m.count_at(ci, pi) >= m.tau();
}

inline IndexSet oracle_intent(const ApplicabilityMatrix& m, const IndexSet& concepts) {
    IndexSet out;
    for (std::size_t pi = 0; pi < m.property_count(); ++pi) {
        bool all = true;
        for (const std::size_t ci : concepts) {
            if (!oracle_applies(m, ci, pi)) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(pi);
    }
    return out;
}

inline IndexSet oracle_extent(const ApplicabilityMatrix& m, const IndexSet& properties) {
    IndexSet out;
    for (std::size_t ci = 0; ci < m.concept_count(); ++ci) {
        bool all = true;
        for (const std::size_t pi : properties) {
            if (!oracle_applies(m, ci, pi)) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(ci);
    }
    return out;
}

// Closes every subset of the concept set; the distinct results are exactly
// the formal concepts.
inline std::set<ConceptPair> powerset_closure_oracle(const ApplicabilityMatrix& m) {
    if (m.concept_count() > 16) {
        throw std::invalid_argument("powerset oracle is limited to 16 concepts");
    }
    std::set<ConceptPair> out;
    const std::size_t n = m.concept_count();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IndexSet subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) subset.push_back(i);
        }
        const IndexSet intent = oracle_intent(m, subset);
        out.emplace(oracle_extent(m, intent), intent);
    }
    return out;
}

inline ConceptPair to_index_pair(const FormalConcept& fc) {
    return {fc.extent.indices(), fc.intent.indices()};
}

inline std::set<ConceptPair> to_index_pairs(const std::vector<FormalConcept>& concepts) {
    std::set<ConceptPair> out;
    for (const auto& fc : concepts) out.insert(to_index_pair(fc));
    return out;
}

}  // namespace ontoforge::testing
