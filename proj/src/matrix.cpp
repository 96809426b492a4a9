#include "ontoforge/matrix.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ontoforge {

namespace {

template <typename T>
bool strictly_sorted(const std::vector<T>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] < v[i])) return false;
    }
    return true;
}

}  // namespace

ApplicabilityMatrix::ApplicabilityMatrix(
    std::vector<ConceptId> concepts, std::vector<PropertySlot> properties,
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts, std::uint64_t tau)
    : concepts_(std::move(concepts)),
      properties_(std::move(properties)),
      counts_(std::move(counts)),
      tau_(tau) {
    if (tau_ < 1) throw ValidationError("threshold tau must be >= 1");
    if (!strictly_sorted(concepts_)) throw ValidationError("matrix concepts must be strictly sorted");
    if (!strictly_sorted(properties_)) throw ValidationError("matrix properties must be strictly sorted");
    for (const auto& [key, count] : counts_) {
        if (key.first >= concepts_.size() || key.second >= properties_.size()) {
            throw ValidationError("matrix count cell out of range");
        }
        if (count == 0) throw ValidationError("matrix count cells must be positive");
    }
    rebuild_incidence();
}

void ApplicabilityMatrix::rebuild_incidence() {
    rows_.assign(concepts_.size(), Bitset(properties_.size()));
    columns_.assign(properties_.size(), Bitset(concepts_.size()));
    for (const auto& [key, count] : counts_) {
        if (count >= tau_) {
            rows_[key.first].set(key.second);
            columns_[key.second].set(key.first);
        }
    }
}

std::optional<std::size_t> ApplicabilityMatrix::concept_index(const ConceptId& c) const {
    const auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c);
    if (it == concepts_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<std::size_t> ApplicabilityMatrix::property_index(const PropertySlot& p) const {
    const auto it = std::lower_bound(properties_.begin(), properties_.end(), p);
    if (it == properties_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - properties_.begin());
}

std::uint64_t ApplicabilityMatrix::count_at(std::size_t ci, std::size_t pi) const {
    const auto it = counts_.find({ci, pi});
    return it == counts_.end() ? 0 : it->second;
}

Bitset ApplicabilityMatrix::extent_bits(const Bitset& properties) const {
    Bitset out(concepts_.size(), true);
    properties.for_each_set([&](std::size_t pi) { out &= columns_[pi]; });
    return out;
}

Bitset ApplicabilityMatrix::intent_bits(const Bitset& concepts) const {
    Bitset out(properties_.size(), true);
    concepts.for_each_set([&](std::size_t ci) { out &= rows_[ci]; });
    return out;
}

FormalConcept ApplicabilityMatrix::close_bits(const Bitset& concepts) const {
    const Bitset intent = intent_bits(concepts);
    return FormalConcept{extent_bits(intent), intent};
}

std::vector<ConceptId> ApplicabilityMatrix::extent(const std::vector<PropertySlot>& ps) const {
    Bitset wanted(properties_.size());
    for (const auto& p : ps) {
        const auto pi = property_index(p);
        if (!pi) throw UnknownSymbolError("unknown property: " + p.str());
        wanted.set(*pi);
    }
    return concepts_of(extent_bits(wanted));
}

std::vector<PropertySlot> ApplicabilityMatrix::intent(const std::vector<ConceptId>& cs) const {
    Bitset wanted(concepts_.size());
    for (const auto& c : cs) {
        const auto ci = concept_index(c);
        if (!ci) throw UnknownSymbolError("unknown concept: " + c.str());
        wanted.set(*ci);
    }
    return properties_of(intent_bits(wanted));
}

FormalConcept ApplicabilityMatrix::close(const std::vector<ConceptId>& cs) const {
    Bitset wanted(concepts_.size());
    for (const auto& c : cs) {
        const auto ci = concept_index(c);
        if (!ci) throw UnknownSymbolError("unknown concept: " + c.str());
        wanted.set(*ci);
    }
    return close_bits(wanted);
}

std::vector<ConceptId> ApplicabilityMatrix::concepts_of(const Bitset& extent) const {
    std::vector<ConceptId> out;
    extent.for_each_set([&](std::size_t ci) { out.push_back(concepts_[ci]); });
    return out;
}

std::vector<PropertySlot> ApplicabilityMatrix::properties_of(const Bitset& intent) const {
    std::vector<PropertySlot> out;
    intent.for_each_set([&](std::size_t pi) { out.push_back(properties_[pi]); });
    return out;
}

ApplicabilityMatrix build_matrix(const std::vector<PredicationRecord>& records, std::uint64_t tau) {
    if (tau < 1) throw ValidationError("threshold tau must be >= 1");
    std::set<ConceptId> concept_set;
    std::set<PropertySlot> property_set;
    for (const auto& r : records) {
        if (r.level() != Level::Concept) {
            throw ValidationError("individual-level record for subject '" +
                                  entity_name(r.subject()) + "' — generalize before building");
        }
        concept_set.insert(std::get<ConceptId>(r.subject()));
        property_set.insert(r.property());
    }
    std::vector<ConceptId> concepts(concept_set.begin(), concept_set.end());
    std::vector<PropertySlot> properties(property_set.begin(), property_set.end());

    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
    for (const auto& r : records) {
        const auto ci = std::lower_bound(concepts.begin(), concepts.end(),
                                         std::get<ConceptId>(r.subject())) -
                        concepts.begin();
        const auto pi =
            std::lower_bound(properties.begin(), properties.end(), r.property()) - properties.begin();
        counts[{static_cast<std::size_t>(ci), static_cast<std::size_t>(pi)}] += r.count();
    }
    return ApplicabilityMatrix(std::move(concepts), std::move(properties), std::move(counts), tau);
}

std::vector<FormalConcept> enumerate_concepts(const ApplicabilityMatrix& m, std::size_t bound) {
    if (m.concept_count() > bound || m.property_count() > bound) {
        throw CapacityError("context exceeds the enumeration bound of " + std::to_string(bound) +
                            ": " + std::to_string(m.concept_count()) + " concepts x " +
                            std::to_string(m.property_count()) + " properties");
    }

    const std::size_t n = m.property_count();
    std::vector<FormalConcept> out;

    // Lexicographic closure enumeration over property sets: start from the
    // closure of the empty set and repeatedly find the lexicographically
    // next closed set. Emission order is therefore canonical.
    Bitset current = m.intent_bits(Bitset(m.concept_count(), true));
    out.push_back(FormalConcept{m.extent_bits(current), current});

    while (true) {
        bool advanced = false;
        Bitset candidate_base = current;
        for (std::size_t idx = n; idx-- > 0;) {
            if (candidate_base.test(idx)) {
                candidate_base.reset(idx);
                continue;
            }
            Bitset seed = candidate_base;
            seed.set(idx);
            const Bitset closed = m.intent_bits(m.extent_bits(seed));
            // canonical step: the closure must not add properties below idx
            bool canonical = true;
            for (std::size_t lower = 0; lower < idx && canonical; ++lower) {
                if (closed.test(lower) && !candidate_base.test(lower)) canonical = false;
            }
            if (canonical) {
                current = closed;
                out.push_back(FormalConcept{m.extent_bits(current), current});
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

PropertyOrder property_order(const ApplicabilityMatrix& m) {
    PropertyOrder order;
    const std::size_t n = m.property_count();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            const Bitset& ep = m.property_column(p);
            const Bitset& eq = m.property_column(q);
            if (ep == eq) {
                if (p < q) order.equivalences.emplace_back(m.properties()[p], m.properties()[q]);
            } else if (ep.is_subset_of(eq)) {
                order.subsumptions.emplace_back(m.properties()[p], m.properties()[q]);
            }
        }
    }
    return order;
}

}  // namespace ontoforge
