#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontoforge/core.hpp"
#include "ontoforge/lexicon.hpp"
#include "ontoforge/tagger.hpp"

namespace ontoforge {

// What a rule match produces.
enum class RuleShape {
    KindAssertion,   // PROPN COP DET-indef NOUN     -> instanceOf fact
    Identity,        // PROPN COP PROPN              -> eq fact
    Measure,         // PROPN COP NUM [UNIT] ADJ     -> hasValue fact
    CopulaAdj,       // [DET-indef] subj COP ADJ     -> ADJ/arg0 record
    CopulaVerbIng,   // [DET-indef] subj COP V-ing   -> VERB/agent record
    CopulaVerbPpart, // [DET-indef] subj COP V-ppart -> VERB/object record
    AttributiveBigram,  // ADJ NOUN window           -> ADJ/arg0 concept record
};

// One token-window pattern: a contiguous sequence of tag alternatives, some
// optional. Anchored rules must consume the whole sentence.
struct PatternRule {
    std::string id;
    struct Element {
        std::vector<Tag> allowed;
        bool optional = false;
    };
    std::vector<Element> window;
    bool anchored = true;
    RuleShape shape = RuleShape::CopulaAdj;
};

// Rules in priority order; the first rule that matches a sentence consumes
// it, so exactly one rule fires per sentence.
const std::vector<PatternRule>& default_rules();

struct ExtractionResult {
    std::vector<PredicationRecord> records;  // applicability evidence
    std::vector<PrimitiveTriple> facts;      // instanceOf / eq / hasValue facts
    std::optional<std::string> rule_id;      // unset when no rule matched
};

// Applies the rules to one tagged sentence. Unmatched sentences yield an
// empty result (callers log them); matched ones carry level=individual for
// PROPN subjects and level=concept for NOUN subjects, count=1, and the
// original sentence text.
ExtractionResult extract(const TaggedSentence& sentence, const PredicateLexicon& lex);

struct CorpusExtraction {
    std::vector<PredicationRecord> records;
    std::vector<PrimitiveTriple> facts;
    std::vector<std::string> skipped;  // unmatched sentence texts, in order
};

CorpusExtraction extract_corpus(const std::vector<TaggedSentence>& sentences,
                                const PredicateLexicon& lex);

struct GeneralizeResult {
    std::vector<PredicationRecord> records;  // concept-level output
    std::vector<PredicationRecord> residue;  // individual-level, no kind link
};

// Lifts individual-level evidence to concept level through instanceOf
// links: each individual record contributes its count to (kind, property)
// for every kind the individual instantiates; concept-level input passes
// through unchanged. kind_facts must all be instanceOf.
GeneralizeResult generalize(const std::vector<PredicationRecord>& records,
                            const std::vector<PrimitiveTriple>& kind_facts);

}  // namespace ontoforge
