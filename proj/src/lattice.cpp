#include "ontoforge/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ontoforge {

TypeLattice::TypeLattice(std::vector<ConceptId> concepts, std::vector<PropertySlot> properties,
                         std::vector<FormalConcept> nodes,
                         std::vector<std::vector<std::string>> labels,
                         std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t top,
                         std::size_t bottom)
    : concepts_(std::move(concepts)),
      properties_(std::move(properties)),
      nodes_(std::move(nodes)),
      labels_(std::move(labels)),
      edges_(std::move(edges)),
      top_(top),
      bottom_(bottom) {
    if (nodes_.empty()) throw ValidationError("lattice needs at least one node");
    if (labels_.size() != nodes_.size()) throw ValidationError("label list size mismatch");
    if (top_ >= nodes_.size() || bottom_ >= nodes_.size()) {
        throw ValidationError("top/bottom node index out of range");
    }
    for (const auto& n : nodes_) {
        if (n.extent.size() != concepts_.size() || n.intent.size() != properties_.size()) {
            throw ValidationError("node extent/intent dimensions do not match the lattice");
        }
    }
    for (const auto& [parent, child] : edges_) {
        if (parent >= nodes_.size() || child >= nodes_.size()) {
            throw ValidationError("edge node index out of range");
        }
        if (!nodes_[child].extent.is_proper_subset_of(nodes_[parent].extent)) {
            throw ValidationError("edge violates extent inclusion");
        }
    }
    derive();
}

void TypeLattice::derive() {
    const std::size_t n = nodes_.size();

    extent_index_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (!extent_index_.emplace(nodes_[i].extent, i).second) {
            throw ValidationError("lattice node extents must be pairwise distinct");
        }
    }

    parents_.assign(n, {});
    children_.assign(n, {});
    for (const auto& [parent, child] : edges_) {
        parents_[child].push_back(parent);
        children_[parent].push_back(child);
    }
    for (auto& v : parents_) std::sort(v.begin(), v.end());
    for (auto& v : children_) std::sort(v.begin(), v.end());

    label_index_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& label : labels_[i]) {
            if (!label_index_.emplace(label, i).second) {
                throw ValidationError("duplicate lattice label: '" + label + "'");
            }
        }
    }

    // object concept per matrix concept: the smallest extent containing it
    object_nodes_.assign(concepts_.size(), 0);
    for (std::size_t ci = 0; ci < concepts_.size(); ++ci) {
        std::size_t best = top_;
        std::size_t best_size = nodes_[top_].extent.count() + 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (nodes_[i].extent.test(ci)) {
                const std::size_t sz = nodes_[i].extent.count();
                if (sz < best_size) {
                    best = i;
                    best_size = sz;
                }
            }
        }
        object_nodes_[ci] = best;
    }

    // signature node per property: the largest extent whose intent carries it
    signature_nodes_.assign(properties_.size(), bottom_);
    std::vector<bool> seen(properties_.size(), false);
    for (std::size_t i = 0; i < n; ++i) {
        nodes_[i].intent.for_each_set([&](std::size_t pi) {
            if (!seen[pi] ||
                nodes_[i].extent.count() > nodes_[signature_nodes_[pi]].extent.count()) {
                signature_nodes_[pi] = i;
                seen[pi] = true;
            }
        });
    }

    // display names: first label, else a name from a property introduced
    // here (each property is introduced exactly at its signature node)
    std::vector<std::vector<std::size_t>> introduced(n);
    for (std::size_t pi = 0; pi < properties_.size(); ++pi) {
        if (seen[pi]) introduced[signature_nodes_[pi]].push_back(pi);
    }
    display_names_.assign(n, "");
    for (std::size_t i = 0; i < n; ++i) {
        if (!labels_[i].empty()) {
            display_names_[i] = labels_[i].front();
        } else if (!introduced[i].empty()) {
            const PropertySlot& p = properties_[introduced[i].front()];
            std::string name = "type_" + p.predicate();
            if (p.slot() != Slot::Arg0) name += "_" + std::string(slot_name(p.slot()));
            display_names_[i] = name;
        } else {
            display_names_[i] = "node" + std::to_string(i);
        }
    }
}

std::optional<std::size_t> TypeLattice::concept_index(const ConceptId& c) const {
    const auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c);
    if (it == concepts_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<std::size_t> TypeLattice::property_index(const PropertySlot& p) const {
    const auto it = std::lower_bound(properties_.begin(), properties_.end(), p);
    if (it == properties_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - properties_.begin());
}

std::optional<std::size_t> TypeLattice::node_of_label(const std::string& label) const {
    const auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> TypeLattice::node_of_extent(const Bitset& extent) const {
    const auto it = extent_index_.find(extent);
    if (it == extent_index_.end()) return std::nullopt;
    return it->second;
}

bool TypeLattice::label_below(const std::string& sub, const std::string& super) const {
    const auto a = node_of_label(sub);
    const auto b = node_of_label(super);
    if (!a) throw UnknownSymbolError("unknown label: '" + sub + "'");
    if (!b) throw UnknownSymbolError("unknown label: '" + super + "'");
    return nodes_[*a].extent.is_subset_of(nodes_[*b].extent);
}

std::optional<std::vector<std::size_t>> TypeLattice::upward_path(std::size_t from,
                                                                 std::size_t to) const {
    if (from == to) return std::vector<std::size_t>{from};
    // BFS over parent edges; parents are visited in ascending index order,
    // so the reconstructed path is deterministic.
    std::vector<std::size_t> prev(nodes_.size(), nodes_.size());
    std::deque<std::size_t> queue{from};
    prev[from] = from;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const std::size_t parent : parents_[cur]) {
            if (prev[parent] != nodes_.size()) continue;
            prev[parent] = cur;
            if (parent == to) {
                std::vector<std::size_t> path{to};
                for (std::size_t at = cur; at != from; at = prev[at]) path.push_back(at);
                path.push_back(from);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(parent);
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> TypeLattice::path_to_top(std::size_t from) const {
    std::vector<std::size_t> path{from};
    std::size_t cur = from;
    while (cur != top_) {
        if (parents_[cur].empty()) break;  // only top lacks parents in a valid lattice
        cur = parents_[cur].front();
        path.push_back(cur);
    }
    return path;
}

bool operator==(const TypeLattice& a, const TypeLattice& b) {
    return a.concepts_ == b.concepts_ && a.properties_ == b.properties_ && a.nodes_ == b.nodes_ &&
           a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.top_ == b.top_ &&
           a.bottom_ == b.bottom_;
}

namespace {

// minimal strict supersets of each node's extent
std::vector<std::pair<std::size_t, std::size_t>> cover_edges(
    const std::vector<FormalConcept>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<std::size_t> by_size(n);
    std::iota(by_size.begin(), by_size.end(), 0);
    std::vector<std::size_t> sizes(n);
    for (std::size_t i = 0; i < n; ++i) sizes[i] = nodes[i].extent.count();
    std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        return sizes[a] != sizes[b] ? sizes[a] < sizes[b] : a < b;
    });

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t child = 0; child < n; ++child) {
        std::vector<std::size_t> covers;
        for (const std::size_t candidate : by_size) {
            if (sizes[candidate] <= sizes[child]) continue;
            if (!nodes[child].extent.is_proper_subset_of(nodes[candidate].extent)) continue;
            bool minimal = true;
            for (const std::size_t chosen : covers) {
                if (nodes[chosen].extent.is_subset_of(nodes[candidate].extent)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) covers.push_back(candidate);
        }
        for (const std::size_t parent : covers) edges.emplace_back(parent, child);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

LatticeBuild build_lattice(const ApplicabilityMatrix& m, const std::vector<FormalConcept>& concepts,
                           const LabelSeeds& seeds) {
    if (concepts.empty()) throw ValidationError("cannot build a lattice from zero concepts");

    std::unordered_map<Bitset, std::size_t, BitsetHash> extent_index;
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        extent_index.emplace(concepts[i].extent, i);
    }

    std::vector<std::vector<std::string>> labels(concepts.size());
    std::vector<std::string> warnings;
    for (const auto& [label, target] : seeds) {
        Bitset extent;
        if (const auto* cs = std::get_if<std::vector<ConceptId>>(&target)) {
            Bitset wanted(m.concept_count());
            for (const auto& c : *cs) {
                const auto ci = m.concept_index(c);
                if (!ci) {
                    throw ValidationError("seed '" + label + "' references unknown concept: " +
                                          c.str());
                }
                wanted.set(*ci);
            }
            extent = m.close_bits(wanted).extent;
        } else {
            Bitset wanted(m.property_count());
            for (const auto& p : std::get<std::vector<PropertySlot>>(target)) {
                const auto pi = m.property_index(p);
                if (!pi) {
                    throw ValidationError("seed '" + label + "' references unknown property: " +
                                          p.str());
                }
                wanted.set(*pi);
            }
            extent = m.extent_bits(wanted);
        }
        const auto it = extent_index.find(extent);
        if (it == extent_index.end()) {
            // extents of seeds are closures, so this indicates an
            // inconsistent node list rather than user input
            throw ValidationError("seed '" + label + "' resolves to no enumerated node");
        }
        if (!labels[it->second].empty()) {
            warnings.push_back("seeds '" + labels[it->second].front() + "' and '" + label +
                               "' resolve to the same node");
        }
        labels[it->second].push_back(label);
    }
    for (auto& ls : labels) std::sort(ls.begin(), ls.end());

    auto edges = cover_edges(concepts);

    // enumeration emits the full-extent node first and the full-intent node
    // last; locate them defensively anyway
    std::size_t top = 0;
    std::size_t bottom = concepts.size() - 1;
    const Bitset all_concepts(m.concept_count(), true);
    const Bitset all_properties(m.property_count(), true);
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        if (concepts[i].extent == all_concepts) top = i;
        if (concepts[i].intent == all_properties) bottom = i;
    }

    TypeLattice lattice(m.concepts(), m.properties(), concepts, std::move(labels),
                        std::move(edges), top, bottom);
    return LatticeBuild{std::move(lattice), std::move(warnings)};
}

}  // namespace ontoforge
