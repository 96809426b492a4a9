#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ontoforge/core.hpp"
#include "ontoforge/lattice.hpp"
#include "ontoforge/matrix.hpp"
#include "ontoforge/tagger.hpp"

namespace ontoforge {

// Records file: JSON lines with fields subject, subjectKind
// (individual|concept), predicate, slot, count, sentence.
std::string record_to_json_line(const PredicationRecord& r);
PredicationRecord record_from_json_line(const std::string& line);
void save_records(const std::filesystem::path& file, const std::vector<PredicationRecord>& records);
std::vector<PredicationRecord> load_records(const std::filesystem::path& file);

// Facts file: JSON lines with subject, subjectKind, relation, object,
// objectKind (concept|individual|trope|measure). Trope objects serialize as
// {noun, sourcePredicate}; measures as {attribute[, quantity, unit]} with
// exact rational quantities as strings.
std::string triple_to_json_line(const PrimitiveTriple& t);
PrimitiveTriple triple_from_json_line(const std::string& line);
void save_triples(const std::filesystem::path& file, const std::vector<PrimitiveTriple>& triples);
std::vector<PrimitiveTriple> load_triples(const std::filesystem::path& file);

// Tagged corpus: one sentence per line, space-separated surface/TAG pairs;
// underscores in surfaces stand for spaces. Malformed tokens report the
// 1-based line number.
TaggedSentence parse_tagged_line(const std::string& line);
std::string tagged_line(const TaggedSentence& s);
std::vector<TaggedSentence> load_tagged_corpus(const std::filesystem::path& file);
void save_tagged_corpus(const std::filesystem::path& file,
                        const std::vector<TaggedSentence>& sentences);

// Label seeds: tab-separated `label  extent|intent  item,item,...`.
LabelSeeds load_seeds(const std::filesystem::path& file);

// Snapshots carry a format/version pair; loading a mismatch fails loudly.
void save_matrix(const std::filesystem::path& file, const ApplicabilityMatrix& m);
ApplicabilityMatrix load_matrix(const std::filesystem::path& file);

void save_lattice(const std::filesystem::path& file, const TypeLattice& lattice);
TypeLattice load_lattice(const std::filesystem::path& file);

// Graphviz rendering: one node per lattice node (display name, labels and
// intent size), one edge per cover edge parent -> child.
std::string lattice_to_dot(const TypeLattice& lattice);

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, const std::string& content);

}  // namespace ontoforge
