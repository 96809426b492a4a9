#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ontoforge::cli {

// Exit codes: 0 ok, 1 I/O or validation failure, 2 unknown-symbol query.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUnknownSymbol = 2;

struct ExtractOptions {
    std::filesystem::path corpus;
    std::filesystem::path lexicon;
    std::filesystem::path out_records;
    std::filesystem::path out_facts;  // default: <records>.facts.jsonl
    std::filesystem::path skip_log;   // default: <records>.skip
};

struct TagOptions {
    std::filesystem::path input;  // raw sentences, one per line
    std::filesystem::path lexicon;
    std::filesystem::path output;  // tagged corpus
};

struct BuildOptions {
    std::filesystem::path records;
    std::filesystem::path facts;  // optional; instanceOf facts for generalization
    std::filesystem::path seeds;  // optional
    std::uint64_t tau = 1;
    std::filesystem::path out_matrix;
    std::filesystem::path out_lattice;
};

struct QueryOptions {
    std::filesystem::path lattice;
    std::filesystem::path lexicon;  // optional; needed for profile tropes
    std::string subcommand;         // profile | sensible | supertype | signature
    std::vector<std::string> args;
    bool json = false;
};

struct ExportOptions {
    std::filesystem::path lattice;
    std::string format;  // dot | json
    std::filesystem::path output;
};

struct ElicitOptions {
    std::filesystem::path concepts;   // one concept per line
    std::filesystem::path templates;  // optional JSON template file
    std::filesystem::path transcripts;
    bool offline = false;
    int jobs = 4;
};

struct IngestOptions {
    std::filesystem::path transcripts;
    std::filesystem::path out_records;
    std::size_t min_vote = 1;
};

struct GenOptions {
    std::size_t concepts = 1000;
    std::size_t properties = 1000;
    std::size_t records = 10000;
    std::uint64_t seed = 0;
    std::filesystem::path out_records;
};

int run_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err);
int run_tag(const TagOptions& opt, std::ostream& out, std::ostream& err);
int run_build(const BuildOptions& opt, std::ostream& out, std::ostream& err);
int run_query(const QueryOptions& opt, std::ostream& out, std::ostream& err);
int run_export(const ExportOptions& opt, std::ostream& out, std::ostream& err);
int run_elicit(const ElicitOptions& opt, std::ostream& out, std::ostream& err);
int run_ingest(const IngestOptions& opt, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace ontoforge::cli
