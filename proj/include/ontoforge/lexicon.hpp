#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontoforge/core.hpp"

namespace ontoforge {

enum class LexCategory { PropertyAdj, StateAdj, ActionVerb, MeasureAdj, Identity, Kind };

std::string_view lex_category_name(LexCategory c);
LexCategory parse_lex_category(std::string_view text);

struct LexiconEntry {
    std::string lemma;  // lowercase predicate lemma
    LexCategory category = LexCategory::PropertyAdj;
    std::string trope;           // nominalized noun; required for property/state adjectives
    std::string attribute;       // required for measure adjectives (old -> age)
    PrimitiveRelation agent_relation = PrimitiveRelation::AgentOf;  // agentOf or participantIn
};

// Closed lexical knowledge driving classification and nominalization, keyed
// by predicate lemma. File format: tab-separated columns
//   lemma  category  trope  attribute  agentRelation
// with '-' for an empty field and '#' comment lines; UTF-8.
class PredicateLexicon {
public:
    PredicateLexicon() = default;

    void add(LexiconEntry entry);

    const LexiconEntry* find(std::string_view lemma) const;

    // Lookup through the uppercase predicate label of a PropertySlot.
    const LexiconEntry* find_predicate(std::string_view predicate) const;

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, LexiconEntry>& entries() const { return entries_; }

    // Maps an inflected verb surface form (running, driven, made) back to
    // its action-verb lemma using only the closed lists built from the
    // entries plus the built-in irregular table.
    std::optional<std::string> known_verb_lemma(std::string_view surface) const;

    // Like known_verb_lemma, with a mechanical fallback (strip -ing/-ed,
    // undo consonant doubling) for surfaces outside the closed lists.
    std::string verb_lemma_for(std::string_view surface) const;

    bool is_inflected_verb(std::string_view surface) const {
        return known_verb_lemma(surface).has_value();
    }

    static PredicateLexicon load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;

private:
    std::map<std::string, LexiconEntry> entries_;
    std::map<std::string, std::string> inflections_;  // surface form -> lemma

    void index_inflections(const LexiconEntry& entry);
};

// Regular inflection synthesis used for lexicon indexing and fallbacks:
// greet -> greeting/greeted, make -> making, run -> running (final
// consonant doubling for short stems).
std::string gerund_of(std::string_view verb_lemma);
std::string past_participle_of(std::string_view verb_lemma);

// Built-in irregular participle table (made -> make, driven -> drive, ...).
const std::map<std::string, std::string>& irregular_participles();

}  // namespace ontoforge
