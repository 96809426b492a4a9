#include "ontoforge/tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace ontoforge {

std::string_view tag_name(Tag t) {
    switch (t) {
        case Tag::PROPN: return "PROPN";
        case Tag::NOUN: return "NOUN";
        case Tag::ADJ: return "ADJ";
        case Tag::VerbIng: return "VERB-ing";
        case Tag::VerbPpart: return "VERB-ppart";
        case Tag::COP: return "COP";
        case Tag::DetIndef: return "DET-indef";
        case Tag::NUM: return "NUM";
        case Tag::UNIT: return "UNIT";
        case Tag::OTHER: return "OTHER";
    }
    throw ValidationError("invalid tag value");
}

Tag parse_tag(std::string_view text) {
    if (text == "PROPN") return Tag::PROPN;
    if (text == "NOUN") return Tag::NOUN;
    if (text == "ADJ") return Tag::ADJ;
    if (text == "VERB-ing") return Tag::VerbIng;
    if (text == "VERB-ppart") return Tag::VerbPpart;
    if (text == "COP") return Tag::COP;
    if (text == "DET-indef") return Tag::DetIndef;
    if (text == "NUM") return Tag::NUM;
    if (text == "UNIT") return Tag::UNIT;
    if (text == "OTHER") return Tag::OTHER;
    throw ValidationError("unknown tag: '" + std::string(text) + "'");
}

TaggedSentence::TaggedSentence(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw ValidationError("tagged sentence must have at least one token");
}

std::string TaggedSentence::text() const {
    std::string out;
    for (const auto& t : tokens_) {
        if (!out.empty()) out += ' ';
        out += t.surface;
    }
    return out;
}

namespace {

const std::set<std::string>& copulas() {
    static const std::set<std::string> words = {"is", "are", "was", "were", "am"};
    return words;
}

const std::set<std::string>& indefinite_articles() {
    static const std::set<std::string> words = {"a", "an"};
    return words;
}

const std::set<std::string>& function_words() {
    static const std::set<std::string> words = {"the", "of", "at", "to", "in", "on-top-of",
                                                "very", "and", "or", "not"};
    return words;
}

const std::vector<std::vector<std::string>>& multiword_names() {
    // longest-match gazetteer for proper names spanning several tokens
    static const std::vector<std::vector<std::string>> names = {
        {"Billy", "the", "Kid"},
        {"William", "H.", "Boney"},
        {"John", "Fitzgerald", "Kennedy"},
        {"Das", "Kapital"},
        {"The", "Prince"},
    };
    return names;
}

bool is_number_like(const std::string& word) {
    // plain integers/decimals and feet'inches" shapes
    if (word.empty()) return false;
    bool digit_seen = false;
    for (const char c : word) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_seen = true;
        } else if (c != '.' && c != '\'' && c != '"') {
            return false;
        }
    }
    return digit_seen;
}

bool is_capitalized(const std::string& word) {
    return !word.empty() && std::isupper(static_cast<unsigned char>(word.front()));
}

std::vector<std::string> split_words(const std::string& raw) {
    std::vector<std::string> words;
    std::istringstream in(raw);
    std::string word;
    while (in >> word) {
        // strip sentence-final punctuation, keeping the 5'10" quote
        while (!word.empty() && (word.back() == '.' || word.back() == ',' || word.back() == '!' ||
                                 word.back() == '?')) {
            if (word.back() == '.' && word.size() >= 2 &&
                std::isupper(static_cast<unsigned char>(word[word.size() - 2]))) {
                break;  // initials like "H."
            }
            word.pop_back();
        }
        if (!word.empty()) words.push_back(word);
    }
    return words;
}

}  // namespace

std::string canonical_unit(std::string_view surface) {
    const std::string lower = to_lower_ascii(surface);
    if (lower == "year" || lower == "years" || lower == "yr" || lower == "yrs") return "YRS";
    if (lower == "inch" || lower == "inches") return "in";
    if (lower == "foot" || lower == "feet") return "ft";
    if (lower == "meter" || lower == "meters" || lower == "metre" || lower == "metres") return "m";
    if (lower == "centimeter" || lower == "centimeters" || lower == "cm") return "cm";
    if (lower == "kilogram" || lower == "kilograms" || lower == "kg") return "kg";
    if (lower == "pound" || lower == "pounds" || lower == "lb" || lower == "lbs") return "lb";
    return std::string(surface);
}

namespace {

bool is_unit_word(const std::string& word) {
    const std::string lower = to_lower_ascii(word);
    static const std::set<std::string> units = {
        "year", "years", "yr",     "yrs",    "inch",      "inches",      "foot",
        "feet", "meter", "meters", "metre",  "metres",    "centimeter",  "centimeters",
        "cm",   "kg",    "kilogram", "kilograms", "pound", "pounds", "lb", "lbs"};
    return units.contains(lower);
}

}  // namespace

TaggedSentence tag_sentence(const std::string& raw, const PredicateLexicon& lex) {
    const std::vector<std::string> words = split_words(raw);
    if (words.empty()) throw ValidationError("cannot tag an empty sentence");

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < words.size()) {
        // gazetteer first, longest entries preferred
        const std::vector<std::string>* matched = nullptr;
        for (const auto& name : multiword_names()) {
            if (name.size() <= words.size() - i &&
                (!matched || name.size() > matched->size()) &&
                std::equal(name.begin(), name.end(), words.begin() + static_cast<long>(i))) {
                matched = &name;
            }
        }
        if (matched) {
            std::string joined;
            for (const auto& part : *matched) {
                if (!joined.empty()) joined += ' ';
                joined += part;
            }
            tokens.push_back({joined, Tag::PROPN});
            i += matched->size();
            continue;
        }

        const std::string& word = words[i];
        const std::string lower = to_lower_ascii(word);
        Tag tag = Tag::OTHER;
        if (copulas().contains(lower)) {
            tag = Tag::COP;
        } else if (indefinite_articles().contains(lower)) {
            tag = Tag::DetIndef;
        } else if (is_number_like(word)) {
            tag = Tag::NUM;
        } else if (is_unit_word(word)) {
            tag = Tag::UNIT;
        } else if (const LexiconEntry* entry = lex.find(lower);
                   entry && (entry->category == LexCategory::PropertyAdj ||
                             entry->category == LexCategory::StateAdj ||
                             entry->category == LexCategory::MeasureAdj)) {
            tag = Tag::ADJ;
        } else if (lower.ends_with("ing") && lex.is_inflected_verb(lower)) {
            tag = Tag::VerbIng;
        } else if (lex.is_inflected_verb(lower)) {
            tag = Tag::VerbPpart;
        } else if (function_words().contains(lower)) {
            tag = Tag::OTHER;
        } else if (is_capitalized(word)) {
            tag = Tag::PROPN;
        } else {
            tag = Tag::NOUN;
        }
        tokens.push_back({word, tag});
        ++i;
    }
    return TaggedSentence(std::move(tokens));
}

}  // namespace ontoforge
