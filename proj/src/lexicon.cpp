#include "ontoforge/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace ontoforge {

std::string_view lex_category_name(LexCategory c) {
    switch (c) {
        case LexCategory::PropertyAdj: return "property-adj";
        case LexCategory::StateAdj: return "state-adj";
        case LexCategory::ActionVerb: return "action-verb";
        case LexCategory::MeasureAdj: return "measure-adj";
        case LexCategory::Identity: return "identity";
        case LexCategory::Kind: return "kind";
    }
    throw ValidationError("invalid lexicon category value");
}

LexCategory parse_lex_category(std::string_view text) {
    if (text == "property-adj") return LexCategory::PropertyAdj;
    if (text == "state-adj") return LexCategory::StateAdj;
    if (text == "action-verb") return LexCategory::ActionVerb;
    if (text == "measure-adj") return LexCategory::MeasureAdj;
    if (text == "identity") return LexCategory::Identity;
    if (text == "kind") return LexCategory::Kind;
    throw ValidationError("unknown lexicon category: '" + std::string(text) + "'");
}

namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// CVC-final short stems double the last consonant (run -> runn-)
bool doubles_final_consonant(std::string_view stem) {
    if (stem.size() < 3) return false;
    const char a = stem[stem.size() - 3];
    const char b = stem[stem.size() - 2];
    const char c = stem[stem.size() - 1];
    return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y';
}

}  // namespace

std::string gerund_of(std::string_view verb_lemma) {
    std::string stem(verb_lemma);
    if (stem.size() >= 2 && stem.back() == 'e' && stem[stem.size() - 2] != 'e') {
        stem.pop_back();
    } else if (doubles_final_consonant(stem)) {
        stem.push_back(stem.back());
    }
    return stem + "ing";
}

std::string past_participle_of(std::string_view verb_lemma) {
    std::string stem(verb_lemma);
    if (!stem.empty() && stem.back() == 'e') return stem + "d";
    if (doubles_final_consonant(stem)) stem.push_back(stem.back());
    return stem + "ed";
}

const std::map<std::string, std::string>& irregular_participles() {
    static const std::map<std::string, std::string> table = {
        {"made", "make"},   {"driven", "drive"}, {"ridden", "ride"},
        {"written", "write"}, {"eaten", "eat"},  {"given", "give"},
        {"taken", "take"},  {"seen", "see"},     {"known", "know"},
    };
    return table;
}

void PredicateLexicon::add(LexiconEntry entry) {
    entry.lemma = to_lower_ascii(entry.lemma);
    if (entry.lemma.empty()) throw ValidationError("lexicon entry with empty lemma");
    if ((entry.category == LexCategory::PropertyAdj || entry.category == LexCategory::StateAdj) &&
        entry.trope.empty()) {
        throw ValidationError("lexicon entry '" + entry.lemma +
                              "': property/state adjectives need a trope");
    }
    if (entry.category == LexCategory::MeasureAdj && entry.attribute.empty()) {
        throw ValidationError("lexicon entry '" + entry.lemma +
                              "': measure adjectives need an attribute");
    }
    if (entry.agent_relation != PrimitiveRelation::AgentOf &&
        entry.agent_relation != PrimitiveRelation::ParticipantIn) {
        throw ValidationError("lexicon entry '" + entry.lemma +
                              "': agent relation must be agentOf or participantIn");
    }
    if (!entries_.emplace(entry.lemma, entry).second) {
        throw ValidationError("duplicate lexicon lemma: '" + entry.lemma + "'");
    }
    index_inflections(entry);
}

void PredicateLexicon::index_inflections(const LexiconEntry& entry) {
    if (entry.category != LexCategory::ActionVerb) return;
    inflections_[gerund_of(entry.lemma)] = entry.lemma;
    inflections_[past_participle_of(entry.lemma)] = entry.lemma;
    for (const auto& [surface, lemma] : irregular_participles()) {
        if (lemma == entry.lemma) inflections_[surface] = lemma;
    }
}

const LexiconEntry* PredicateLexicon::find(std::string_view lemma) const {
    const auto it = entries_.find(to_lower_ascii(lemma));
    return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry* PredicateLexicon::find_predicate(std::string_view predicate) const {
    return find(to_lower_ascii(predicate));
}

std::optional<std::string> PredicateLexicon::known_verb_lemma(std::string_view surface) const {
    const std::string lower = to_lower_ascii(surface);
    if (const auto it = inflections_.find(lower); it != inflections_.end()) return it->second;
    if (const auto it = irregular_participles().find(lower); it != irregular_participles().end()) {
        return it->second;
    }
    return std::nullopt;
}

std::string PredicateLexicon::verb_lemma_for(std::string_view surface) const {
    if (auto known = known_verb_lemma(surface)) return *known;
    const std::string lower = to_lower_ascii(surface);
    const auto strip = [&](std::string_view suffix) -> std::optional<std::string> {
        if (lower.size() <= suffix.size() + 1 || !lower.ends_with(suffix)) return std::nullopt;
        std::string stem = lower.substr(0, lower.size() - suffix.size());
        if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
            !is_vowel(stem.back())) {
            stem.pop_back();
        }
        return stem;
    };
    for (const std::string_view suffix : {"ing", "ed"}) {
        if (auto stem = strip(suffix)) return *stem;
    }
    return lower;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) fields.push_back(field);
    return fields;
}

}  // namespace

PredicateLexicon PredicateLexicon::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open lexicon file: " + file.string());
    PredicateLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5) {
            throw ValidationError("lexicon line " + std::to_string(line_no) +
                                  ": expected 5 tab-separated columns, got " +
                                  std::to_string(fields.size()));
        }
        const auto value = [](const std::string& f) { return f == "-" ? std::string() : f; };
        LexiconEntry entry;
        entry.lemma = fields[0];
        entry.category = parse_lex_category(fields[1]);
        entry.trope = value(fields[2]);
        entry.attribute = value(fields[3]);
        const std::string agent = value(fields[4]);
        entry.agent_relation = agent.empty() ? PrimitiveRelation::AgentOf : parse_relation(agent);
        try {
            lex.add(std::move(entry));
        } catch (const ValidationError& e) {
            throw ValidationError("lexicon line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return lex;
}

void PredicateLexicon::save(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write lexicon file: " + file.string());
    out << "# lemma\tcategory\ttrope\tattribute\tagentRelation\n";
    for (const auto& [lemma, e] : entries_) {
        const auto field = [](const std::string& f) { return f.empty() ? "-" : f.c_str(); };
        out << lemma << '\t' << lex_category_name(e.category) << '\t' << field(e.trope) << '\t'
            << field(e.attribute) << '\t'
            << (e.category == LexCategory::ActionVerb ? relation_name(e.agent_relation) : "-")
            << '\n';
    }
}

}  // namespace ontoforge
