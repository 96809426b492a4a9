#pragma once

#include <string>
#include <vector>

#include "ontoforge/core.hpp"
#include "ontoforge/lexicon.hpp"

namespace ontoforge {

// Coarse part-of-speech tags; the closed set the extraction rules run over.
enum class Tag { PROPN, NOUN, ADJ, VerbIng, VerbPpart, COP, DetIndef, NUM, UNIT, OTHER };

std::string_view tag_name(Tag t);
Tag parse_tag(std::string_view text);

struct Token {
    std::string surface;
    Tag tag = Tag::OTHER;

    friend bool operator==(const Token&, const Token&) = default;
};

class TaggedSentence {
public:
    explicit TaggedSentence(std::vector<Token> tokens);

    const std::vector<Token>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    const Token& operator[](std::size_t i) const { return tokens_[i]; }

    // Original surface text, tokens joined by single spaces.
    std::string text() const;

    friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;

private:
    std::vector<Token> tokens_;
};

// Deterministic closed-list tagger for the shipped corpora. Multiword
// proper names from a built-in gazetteer collapse into single PROPN tokens;
// copulas, indefinite articles, measure units and number shapes come from
// fixed lists; adjectives and verb inflections come from the lexicon;
// remaining capitalized words are PROPN, function words OTHER, and anything
// else NOUN.
TaggedSentence tag_sentence(const std::string& raw, const PredicateLexicon& lex);

// Canonical unit codes used by the measure rule (years -> YRS, inches -> in).
std::string canonical_unit(std::string_view surface);

}  // namespace ontoforge
