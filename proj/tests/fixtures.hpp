#pragma once

// Shared test fixtures: shipped data files plus deterministic random data.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ontoforge/extractor.hpp"
#include "ontoforge/io.hpp"
#include "ontoforge/lattice.hpp"
#include "ontoforge/lexicon.hpp"
#include "ontoforge/matrix.hpp"

namespace ontoforge::testing {

inline std::filesystem::path data_dir() { return std::filesystem::path(ONTOFORGE_DATA_DIR); }

inline PredicateLexicon seed_lexicon() {
    return PredicateLexicon::load(data_dir() / "lexicon.tsv");
}

// extract -> generalize on a shipped tagged corpus
inline std::vector<PredicationRecord> concept_records(const std::filesystem::path& corpus,
                                                      const PredicateLexicon& lexicon) {
    const auto sentences = load_tagged_corpus(corpus);
    const CorpusExtraction extraction = extract_corpus(sentences, lexicon);
    std::vector<PrimitiveTriple> kinds;
    for (const auto& fact : extraction.facts) {
        if (fact.relation() == PrimitiveRelation::InstanceOf) kinds.push_back(fact);
    }
    return generalize(extraction.records, kinds).records;
}

struct BuiltFixture {
    ApplicabilityMatrix matrix;
    TypeLattice lattice;
};

inline BuiltFixture build_fixture(const std::filesystem::path& corpus,
                                  const std::filesystem::path& seeds_file,
                                  const PredicateLexicon& lexicon, std::uint64_t tau = 1) {
    const auto records = concept_records(corpus, lexicon);
    ApplicabilityMatrix matrix = build_matrix(records, tau);
    const auto concepts = enumerate_concepts(matrix);
    LatticeBuild built =
        build_lattice(matrix, concepts, seeds_file.empty() ? LabelSeeds{} : load_seeds(seeds_file));
    return BuiltFixture{std::move(matrix), std::move(built.lattice)};
}

// instance corpus of kinds and copula predications over eight everyday types
inline BuiltFixture toy_fixture() {
    return build_fixture(data_dir() / "toy_corpus.txt", data_dir() / "toy_seeds.tsv",
                         seed_lexicon());
}

// computer / car / couch with assembly, running, on/off
inline BuiltFixture machines_fixture() {
    return build_fixture(data_dir() / "machines_corpus.txt", data_dir() / "machines_seeds.tsv",
                         seed_lexicon());
}

// Deterministic random concept-level records. Raw engine draws with modulo
// keep results identical across platforms.
inline std::vector<PredicationRecord> random_concept_records(std::mt19937_64& rng,
                                                             std::size_t max_concepts,
                                                             std::size_t max_properties,
                                                             std::size_t cells) {
    const std::size_t nc = rng() % max_concepts + 1;
    const std::size_t np = rng() % max_properties + 1;
    const Slot slots[] = {Slot::Arg0, Slot::Agent, Slot::Object};
    std::vector<PredicationRecord> records;
    for (std::size_t i = 0; i < cells; ++i) {
        const std::size_t ci = rng() % nc;
        const std::size_t pi = rng() % np;
        char concept_name[8];
        std::snprintf(concept_name, sizeof(concept_name), "c%02zu", ci);
        char pred_name[8];
        std::snprintf(pred_name, sizeof(pred_name), "P%02zu", pi);
        records.emplace_back(ConceptId(concept_name), PropertySlot(pred_name, slots[pi % 3]), "",
                             rng() % 3 + 1);
    }
    return records;
}

inline ApplicabilityMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 10) {
    const std::size_t cells = rng() % (max_dim * max_dim + 1);
    const std::uint64_t tau = rng() % 3 == 0 ? 2 : 1;
    return build_matrix(random_concept_records(rng, max_dim, max_dim, cells), tau);
}

// a deterministic subset of the matrix's concepts
inline Bitset random_concept_subset(std::mt19937_64& rng, const ApplicabilityMatrix& m) {
    Bitset s(m.concept_count());
    for (std::size_t i = 0; i < m.concept_count(); ++i) {
        if (rng() % 2) s.set(i);
    }
    return s;
}

inline Bitset random_property_subset(std::mt19937_64& rng, const ApplicabilityMatrix& m) {
    Bitset s(m.property_count());
    for (std::size_t i = 0; i < m.property_count(); ++i) {
        if (rng() % 2) s.set(i);
    }
    return s;
}

}  // namespace ontoforge::testing
