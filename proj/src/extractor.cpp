#include "ontoforge/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ontoforge {

namespace {

constexpr std::size_t kNoToken = static_cast<std::size_t>(-1);

// Anchored backtracking match; returns per-element token indices
// (kNoToken for skipped optionals) or nullopt.
std::optional<std::vector<std::size_t>> match_anchored(const PatternRule& rule,
                                                       const TaggedSentence& s) {
    std::vector<std::size_t> binding(rule.window.size(), kNoToken);
    const auto fits = [&](std::size_t elem, std::size_t tok) {
        const auto& allowed = rule.window[elem].allowed;
        return std::find(allowed.begin(), allowed.end(), s[tok].tag) != allowed.end();
    };
    const auto rec = [&](auto&& self, std::size_t elem, std::size_t tok) -> bool {
        if (elem == rule.window.size()) return tok == s.size();
        if (rule.window[elem].optional) {
            binding[elem] = kNoToken;
            if (self(self, elem + 1, tok)) return true;
        }
        if (tok < s.size() && fits(elem, tok)) {
            binding[elem] = tok;
            if (self(self, elem + 1, tok + 1)) return true;
            binding[elem] = kNoToken;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return binding;
    return std::nullopt;
}

EntityRef subject_ref(const Token& token) {
    if (token.tag == Tag::PROPN) return IndividualId(token.surface);
    return ConceptId(to_lower_ascii(token.surface));
}

std::string predicate_label(const std::string& adjective_or_verb_lemma) {
    return to_upper_ascii(adjective_or_verb_lemma);
}

// "5'10\"" -> 70 inches; plain integers/decimals parse as-is
struct ParsedNumber {
    Rational value;
    std::string implied_unit;  // non-empty for feet'inches" shapes
};

std::optional<ParsedNumber> parse_number(const std::string& surface) {
    const auto feet_mark = surface.find('\'');
    if (feet_mark != std::string::npos) {
        std::string feet = surface.substr(0, feet_mark);
        std::string inches = surface.substr(feet_mark + 1);
        if (!inches.empty() && inches.back() == '"') inches.pop_back();
        if (feet.empty() || inches.empty()) return std::nullopt;
        try {
            const Rational f = Rational::parse(feet);
            const Rational i = Rational::parse(inches);
            if (!f.is_integral() || !i.is_integral()) return std::nullopt;
            return ParsedNumber{Rational(f.num() * 12 + i.num()), "in"};
        } catch (const ValidationError&) {
            return std::nullopt;
        }
    }
    try {
        return ParsedNumber{Rational::parse(surface), ""};
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

}  // namespace

const std::vector<PatternRule>& default_rules() {
    static const std::vector<PatternRule> rules = [] {
        std::vector<PatternRule> r;
        r.push_back({"kind-copula",
                     {{{Tag::PROPN}}, {{Tag::COP}}, {{Tag::DetIndef}}, {{Tag::NOUN}}},
                     true,
                     RuleShape::KindAssertion});
        r.push_back({"identity-copula",
                     {{{Tag::PROPN}}, {{Tag::COP}}, {{Tag::PROPN}}},
                     true,
                     RuleShape::Identity});
        r.push_back({"measure-copula",
                     {{{Tag::PROPN}}, {{Tag::COP}}, {{Tag::NUM}}, {{Tag::UNIT}, true}, {{Tag::ADJ}}},
                     true,
                     RuleShape::Measure});
        r.push_back({"adj-copula",
                     {{{Tag::DetIndef}, true}, {{Tag::PROPN, Tag::NOUN}}, {{Tag::COP}}, {{Tag::ADJ}}},
                     true,
                     RuleShape::CopulaAdj});
        r.push_back({"ving-copula",
                     {{{Tag::DetIndef}, true}, {{Tag::PROPN, Tag::NOUN}}, {{Tag::COP}}, {{Tag::VerbIng}}},
                     true,
                     RuleShape::CopulaVerbIng});
        r.push_back({"ppart-copula",
                     {{{Tag::DetIndef}, true}, {{Tag::PROPN, Tag::NOUN}}, {{Tag::COP}}, {{Tag::VerbPpart}}},
                     true,
                     RuleShape::CopulaVerbPpart});
        r.push_back({"attributive-bigram",
                     {{{Tag::ADJ}}, {{Tag::NOUN}}},
                     false,
                     RuleShape::AttributiveBigram});
        return r;
    }();
    return rules;
}

ExtractionResult extract(const TaggedSentence& sentence, const PredicateLexicon& lex) {
    ExtractionResult result;
    const std::string text = sentence.text();

    for (const PatternRule& rule : default_rules()) {
        if (rule.anchored) {
            const auto binding = match_anchored(rule, sentence);
            if (!binding) continue;
            const auto tok = [&](std::size_t elem) -> const Token& {
                return sentence[(*binding)[elem]];
            };
            const auto has = [&](std::size_t elem) { return (*binding)[elem] != kNoToken; };

            switch (rule.shape) {
                case RuleShape::KindAssertion:
                    result.facts.emplace_back(IndividualId(tok(0).surface),
                                              PrimitiveRelation::InstanceOf,
                                              ConceptId(to_lower_ascii(tok(3).surface)));
                    break;
                case RuleShape::Identity:
                    result.facts.emplace_back(IndividualId(tok(0).surface), PrimitiveRelation::Eq,
                                              IndividualId(tok(2).surface));
                    break;
                case RuleShape::Measure: {
                    const auto number = parse_number(tok(2).surface);
                    if (!number) return ExtractionResult{};  // malformed NUM: no rule fires
                    std::string unit =
                        has(3) ? canonical_unit(tok(3).surface) : number->implied_unit;
                    if (unit.empty()) return ExtractionResult{};  // bare number without a unit
                    const std::string adj = to_lower_ascii(tok(4).surface);
                    const LexiconEntry* entry = lex.find(adj);
                    const std::string attribute =
                        entry && !entry->attribute.empty() ? entry->attribute : adj;
                    result.facts.emplace_back(
                        IndividualId(tok(0).surface), PrimitiveRelation::HasValue,
                        MeasureValue(number->value, unit, attribute));
                    break;
                }
                case RuleShape::CopulaAdj:
                    result.records.emplace_back(subject_ref(tok(1)),
                                                PropertySlot(predicate_label(tok(3).surface),
                                                             Slot::Arg0),
                                                text);
                    break;
                case RuleShape::CopulaVerbIng:
                    result.records.emplace_back(
                        subject_ref(tok(1)),
                        PropertySlot(predicate_label(lex.verb_lemma_for(tok(3).surface)),
                                     Slot::Agent),
                        text);
                    break;
                case RuleShape::CopulaVerbPpart:
                    result.records.emplace_back(
                        subject_ref(tok(1)),
                        PropertySlot(predicate_label(lex.verb_lemma_for(tok(3).surface)),
                                     Slot::Object),
                        text);
                    break;
                case RuleShape::AttributiveBigram:
                    break;  // never anchored
            }
            result.rule_id = rule.id;
            return result;
        }

        // windowed rule: emit one record per contiguous ADJ NOUN pair
        bool any = false;
        for (std::size_t i = 0; i + 1 < sentence.size(); ++i) {
            if (sentence[i].tag == Tag::ADJ && sentence[i + 1].tag == Tag::NOUN) {
                result.records.emplace_back(
                    ConceptId(to_lower_ascii(sentence[i + 1].surface)),
                    PropertySlot(predicate_label(sentence[i].surface), Slot::Arg0), text);
                any = true;
            }
        }
        if (any) {
            result.rule_id = rule.id;
            return result;
        }
    }
    return result;
}

CorpusExtraction extract_corpus(const std::vector<TaggedSentence>& sentences,
                                const PredicateLexicon& lex) {
    CorpusExtraction out;
    for (const auto& sentence : sentences) {
        ExtractionResult one = extract(sentence, lex);
        if (!one.rule_id) {
            out.skipped.push_back(sentence.text());
            continue;
        }
        std::move(one.records.begin(), one.records.end(), std::back_inserter(out.records));
        std::move(one.facts.begin(), one.facts.end(), std::back_inserter(out.facts));
    }
    return out;
}

GeneralizeResult generalize(const std::vector<PredicationRecord>& records,
                            const std::vector<PrimitiveTriple>& kind_facts) {
    std::map<std::string, std::set<ConceptId>> kinds;
    for (const auto& fact : kind_facts) {
        if (fact.relation() != PrimitiveRelation::InstanceOf) {
            throw ValidationError("generalize expects instanceOf facts, got " +
                                  std::string(relation_name(fact.relation())));
        }
        kinds[entity_name(fact.subject())].insert(std::get<ConceptId>(fact.object()));
    }

    GeneralizeResult out;
    // an individual may instantiate several kinds; its evidence lifts to all
    std::map<std::pair<ConceptId, PropertySlot>, std::uint64_t> lifted;
    for (const auto& record : records) {
        if (record.level() == Level::Concept) {
            out.records.push_back(record);
            continue;
        }
        const auto it = kinds.find(entity_name(record.subject()));
        if (it == kinds.end() || it->second.empty()) {
            out.residue.push_back(record);
            continue;
        }
        for (const ConceptId& kind : it->second) {
            lifted[{kind, record.property()}] += record.count();
        }
    }
    for (const auto& [key, count] : lifted) {
        out.records.emplace_back(key.first, key.second, "", count);
    }
    return out;
}

}  // namespace ontoforge
