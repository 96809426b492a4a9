#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontoforge/core.hpp"

namespace ontoforge {

// A mask prompt along one meaning dimension. The pattern must contain
// exactly one [MASK] and at least one {CONCEPT}; k is the number of
// replacements the instruction header asks for.
class PromptTemplate {
public:
    PromptTemplate(PrimitiveRelation dimension, std::string pattern, int k);

    PrimitiveRelation dimension() const { return dimension_; }
    const std::string& pattern() const { return pattern_; }
    int k() const { return k_; }

private:
    PrimitiveRelation dimension_;
    std::string pattern_;
    int k_;
};

// The shipped per-dimension templates (agentOf, objectOf, hasProp).
const std::vector<PromptTemplate>& default_templates();

// Substitutes every {CONCEPT} with the concept lemma, keeps [MASK]
// verbatim, and prepends an instruction header asking for exactly k
// plausible replacements as a numbered list.
std::string render_prompt(const PromptTemplate& tpl, const ConceptId& subject_concept);

struct CandidateParse {
    std::vector<std::string> items;  // lowercased, trimmed, first-occurrence dedup
    std::size_t matched_lines = 0;   // numbered lines captured before dedup
    bool warning = false;            // no numbered lines at all
};

// Captures `^\s*\d+[.)]\s*(.+)$` lines in order.
CandidateParse parse_candidates(const std::string& response);

// One concept-level record per candidate: agentOf -> CAND/agent,
// objectOf -> CAND/object, hasProp -> CAND/arg0. Candidate surfaces are
// kept verbatim (uppercased; whitespace and '/' mapped to '-'), never
// lemmatized.
std::vector<PredicationRecord> candidates_to_records(const ConceptId& subject_concept,
                                                     PrimitiveRelation dimension,
                                                     const std::vector<std::string>& candidates);

struct Transcript {
    std::string prompt;
    std::string response;
    std::string endpoint;
    std::string time;  // ISO-8601 UTC
};

// On-disk transcript: PROMPT:/ENDPOINT:/TIME: header lines (prompt
// newlines escaped as \n), a blank line, then the raw response.
std::string format_transcript(const Transcript& t);
Transcript parse_transcript(const std::string& text);
Transcript load_transcript(const std::filesystem::path& file);
void save_transcript_atomic(const std::filesystem::path& file, const Transcript& t);

// Content hash used for transcript cache file names.
std::string prompt_hash(const std::string& prompt);

struct ElicitConfig {
    std::string url;   // empty means no endpoint configured
    std::string auth;  // Authorization header value, optional
    std::filesystem::path cache_dir;
    bool offline = false;
    int max_in_flight = 4;
};

struct ElicitJob {
    ConceptId subject_concept;
    PrimitiveRelation dimension;
    std::string prompt;
};

// Transcript-cached prompt execution. Cache layout:
// <cache_dir>/<concept>/<dimension>/<hash>.txt. Offline mode never touches
// the network and fails loudly on a cache miss. Remote calls POST the
// prompt as the request body; up to max_in_flight run concurrently; cache
// writes are write-temp-then-rename.
class Elicitor {
public:
    explicit Elicitor(ElicitConfig config);

    std::filesystem::path cache_path(const ElicitJob& job) const;
    Transcript run(const ElicitJob& job) const;
    std::vector<Transcript> run_all(const std::vector<ElicitJob>& jobs) const;

private:
    ElicitConfig config_;

    Transcript fetch_remote(const std::string& prompt) const;
};

}  // namespace ontoforge
