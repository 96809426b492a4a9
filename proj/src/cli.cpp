#include "ontoforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ontoforge/core.hpp"
#include "ontoforge/elicit.hpp"
#include "ontoforge/extractor.hpp"
#include "ontoforge/io.hpp"
#include "ontoforge/lattice.hpp"
#include "ontoforge/lexicon.hpp"
#include "ontoforge/matrix.hpp"
#include "ontoforge/nominalize.hpp"
#include "ontoforge/query.hpp"
#include "ontoforge/tagger.hpp"

namespace ontoforge::cli {

using nlohmann::json;

namespace {

template <typename F>
int guarded(std::ostream& err, F&& f) {
    try {
        return f();
    } catch (const UnknownSymbolError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnknownSymbol;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

PredicateLexicon load_lexicon_or_empty(const std::filesystem::path& file) {
    if (file.empty()) return PredicateLexicon{};
    return PredicateLexicon::load(file);
}

}  // namespace

int run_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PredicateLexicon lexicon = load_lexicon_or_empty(opt.lexicon);
        const std::vector<TaggedSentence> sentences = load_tagged_corpus(opt.corpus);
        const CorpusExtraction result = extract_corpus(sentences, lexicon);

        save_records(opt.out_records, result.records);
        const std::filesystem::path facts_path =
            opt.out_facts.empty() ? std::filesystem::path(opt.out_records.string() + ".facts.jsonl")
                                  : opt.out_facts;
        save_triples(facts_path, result.facts);

        const std::filesystem::path skip_path =
            opt.skip_log.empty() ? std::filesystem::path(opt.out_records.string() + ".skip")
                                 : opt.skip_log;
        {
            std::ofstream skip(skip_path, std::ios::binary);
            if (!skip) throw IoError("cannot write skip log: " + skip_path.string());
            for (const auto& sentence : result.skipped) skip << "SKIP\t" << sentence << '\n';
        }

        out << "sentences: " << sentences.size() << " records: " << result.records.size()
            << " facts: " << result.facts.size() << " skipped: " << result.skipped.size() << '\n';
        return kExitOk;
    });
}

int run_tag(const TagOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PredicateLexicon lexicon = load_lexicon_or_empty(opt.lexicon);
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw IoError("cannot open sentence file: " + opt.input.string());
        std::vector<TaggedSentence> sentences;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            sentences.push_back(tag_sentence(line, lexicon));
        }
        save_tagged_corpus(opt.output, sentences);
        out << "tagged " << sentences.size() << " sentences\n";
        return kExitOk;
    });
}

int run_build(const BuildOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<PredicationRecord> records = load_records(opt.records);

        std::vector<PrimitiveTriple> kind_facts;
        if (!opt.facts.empty()) {
            for (const auto& fact : load_triples(opt.facts)) {
                if (fact.relation() == PrimitiveRelation::InstanceOf) kind_facts.push_back(fact);
            }
        }
        const bool has_individual_level =
            std::any_of(records.begin(), records.end(),
                        [](const PredicationRecord& r) { return r.level() == Level::Individual; });
        if (has_individual_level || !kind_facts.empty()) {
            GeneralizeResult lifted = generalize(records, kind_facts);
            if (!lifted.residue.empty()) {
                err << "warning: " << lifted.residue.size()
                    << " individual-level records without kind links were dropped\n";
            }
            records = std::move(lifted.records);
        }

        const ApplicabilityMatrix matrix = build_matrix(records, opt.tau);
        const std::vector<FormalConcept> concepts = enumerate_concepts(matrix);
        const LabelSeeds seeds = opt.seeds.empty() ? LabelSeeds{} : load_seeds(opt.seeds);
        LatticeBuild built = build_lattice(matrix, concepts, seeds);
        for (const auto& warning : built.warnings) err << "warning: " << warning << '\n';

        save_matrix(opt.out_matrix, matrix);
        save_lattice(opt.out_lattice, built.lattice);
        out << "concepts: " << matrix.concept_count() << " properties: " << matrix.property_count()
            << " lattice-nodes: " << built.lattice.node_count() << '\n';
        return kExitOk;
    });
}

namespace {

// query argument "HUNGRY" or "DRIVE/object"; bare predicates mean arg0
PropertySlot parse_property_arg(const std::string& arg) {
    if (arg.find('/') != std::string::npos) return PropertySlot::parse(arg);
    return PropertySlot(arg, Slot::Arg0);
}

json node_json(const TypeLattice& lattice, std::size_t node) {
    json j;
    j["node"] = node;
    j["name"] = lattice.display_name(node);
    j["labels"] = lattice.labels(node);
    json extent = json::array();
    lattice.node(node).extent.for_each_set(
        [&](std::size_t ci) { extent.push_back(lattice.concepts()[ci].str()); });
    j["extent"] = std::move(extent);
    return j;
}

void print_node(std::ostream& out, const TypeLattice& lattice, std::size_t node) {
    out << lattice.display_name(node) << " (extent:";
    lattice.node(node).extent.for_each_set(
        [&](std::size_t ci) { out << ' ' << lattice.concepts()[ci].str(); });
    out << ")\n";
}

std::string join_path(const std::vector<std::string>& path) {
    std::string joined;
    for (const auto& name : path) {
        if (!joined.empty()) joined += " <= ";
        joined += name;
    }
    return joined;
}

}  // namespace

int run_query(const QueryOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const TypeLattice lattice = load_lattice(opt.lattice);
        const PredicateLexicon lexicon = load_lexicon_or_empty(opt.lexicon);
        const QueryEngine engine(lattice, lexicon);

        const auto need_args = [&](std::size_t n) {
            if (opt.args.size() != n) {
                throw ValidationError("query '" + opt.subcommand + "' expects " +
                                      std::to_string(n) + " arguments");
            }
        };

        if (opt.subcommand == "profile") {
            need_args(1);
            const MeaningProfile profile = engine.profile(ConceptId::parse(opt.args[0]));
            if (opt.json) {
                json j;
                j["concept"] = profile.subject_concept.str();
                json dims = json::object();
                for (const auto& [relation, tropes] : profile.dimensions) {
                    json list = json::array();
                    for (const auto& trope : tropes) {
                        list.push_back({{"trope", trope.noun()},
                                        {"sourcePredicate", trope.source_predicate()}});
                    }
                    dims[std::string(relation_name(relation))] = std::move(list);
                }
                j["dimensions"] = std::move(dims);
                out << j.dump(2) << '\n';
            } else {
                out << "profile of " << profile.subject_concept.str() << '\n';
                for (const auto& [relation, tropes] : profile.dimensions) {
                    out << "  " << relation_name(relation) << ":";
                    for (const auto& trope : tropes) out << ' ' << trope.noun();
                    out << '\n';
                }
            }
            return kExitOk;
        }

        if (opt.subcommand == "sensible") {
            if (opt.args.size() == 2) {
                const Sensibility s =
                    engine.is_sensible(parse_property_arg(opt.args[0]), ConceptId::parse(opt.args[1]));
                if (opt.json) {
                    out << json{{"sensible", s.sensible}, {"path", s.path}}.dump(2) << '\n';
                } else {
                    out << (s.sensible ? "true" : "false") << '\n'
                        << "path: " << join_path(s.path) << '\n';
                }
                return kExitOk;
            }
            if (opt.args.size() == 3) {
                // binary predication: agent and object slots must both unify
                const std::string& pred = opt.args[0];
                const Sensibility agent =
                    engine.is_sensible(PropertySlot(pred, Slot::Agent), ConceptId::parse(opt.args[1]));
                const Sensibility object =
                    engine.is_sensible(PropertySlot(pred, Slot::Object), ConceptId::parse(opt.args[2]));
                const bool both = agent.sensible && object.sensible;
                if (opt.json) {
                    out << json{{"sensible", both},
                                {"agentPath", agent.path},
                                {"objectPath", object.path}}
                               .dump(2)
                        << '\n';
                } else {
                    out << (both ? "true" : "false") << '\n'
                        << "agent path: " << join_path(agent.path) << '\n'
                        << "object path: " << join_path(object.path) << '\n';
                }
                return kExitOk;
            }
            throw ValidationError("query 'sensible' expects PREDICATE CONCEPT or PREDICATE C1 C2");
        }

        if (opt.subcommand == "supertype") {
            need_args(2);
            const std::size_t node = engine.common_supertype(ConceptId::parse(opt.args[0]),
                                                             ConceptId::parse(opt.args[1]));
            if (opt.json) {
                out << node_json(lattice, node).dump(2) << '\n';
            } else {
                print_node(out, lattice, node);
            }
            return kExitOk;
        }

        if (opt.subcommand == "signature") {
            need_args(1);
            const std::size_t node = engine.signature_node(parse_property_arg(opt.args[0]));
            if (opt.json) {
                out << node_json(lattice, node).dump(2) << '\n';
            } else {
                print_node(out, lattice, node);
            }
            return kExitOk;
        }

        throw ValidationError("unknown query subcommand: '" + opt.subcommand + "'");
    });
}

int run_export(const ExportOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const TypeLattice lattice = load_lattice(opt.lattice);
        if (opt.format == "dot") {
            write_text_file(opt.output, lattice_to_dot(lattice));
        } else if (opt.format == "json") {
            save_lattice(opt.output, lattice);
        } else {
            throw ValidationError("unknown export format: '" + opt.format + "' (want dot or json)");
        }
        out << "wrote " << opt.output.string() << '\n';
        return kExitOk;
    });
}

namespace {

std::vector<PromptTemplate> load_templates(const std::filesystem::path& file) {
    if (file.empty()) return default_templates();
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open template file: " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(file.string() + ": " + e.what());
    }
    std::vector<PromptTemplate> templates;
    for (const auto& entry : j) {
        templates.emplace_back(parse_relation(entry.at("dimension").get<std::string>()),
                               entry.at("pattern").get<std::string>(), entry.at("k").get<int>());
    }
    return templates;
}

}  // namespace

int run_elicit(const ElicitOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::ifstream in(opt.concepts, std::ios::binary);
        if (!in) throw IoError("cannot open concept file: " + opt.concepts.string());
        std::vector<ConceptId> concepts;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            concepts.push_back(ConceptId::parse(line));
        }
        const std::vector<PromptTemplate> templates = load_templates(opt.templates);

        ElicitConfig config;
        if (const char* url = std::getenv("ELICIT_URL")) config.url = url;
        if (const char* auth = std::getenv("ELICIT_AUTH")) config.auth = auth;
        config.cache_dir = opt.transcripts;
        config.offline = opt.offline;
        config.max_in_flight = opt.jobs;
        const Elicitor elicitor(config);

        std::vector<ElicitJob> jobs;
        for (const auto& subject_concept : concepts) {
            for (const auto& tpl : templates) {
                jobs.push_back(ElicitJob{subject_concept, tpl.dimension(), render_prompt(tpl, subject_concept)});
            }
        }
        elicitor.run_all(jobs);
        out << "transcripts ready: " << jobs.size() << " under " << opt.transcripts.string()
            << '\n';
        return kExitOk;
    });
}

int run_ingest(const IngestOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!std::filesystem::is_directory(opt.transcripts)) {
            throw IoError("transcript directory not found: " + opt.transcripts.string());
        }
        if (opt.min_vote < 1) throw ValidationError("min-vote must be >= 1");

        std::vector<PredicationRecord> records;
        std::size_t transcript_count = 0;
        std::size_t warnings = 0;

        std::vector<std::filesystem::path> concept_dirs;
        for (const auto& entry : std::filesystem::directory_iterator(opt.transcripts)) {
            if (entry.is_directory()) concept_dirs.push_back(entry.path());
        }
        std::sort(concept_dirs.begin(), concept_dirs.end());

        for (const auto& concept_dir : concept_dirs) {
            const ConceptId subject_concept = ConceptId::parse(concept_dir.filename().string());
            std::vector<std::filesystem::path> dimension_dirs;
            for (const auto& entry : std::filesystem::directory_iterator(concept_dir)) {
                if (entry.is_directory()) dimension_dirs.push_back(entry.path());
            }
            std::sort(dimension_dirs.begin(), dimension_dirs.end());

            for (const auto& dimension_dir : dimension_dirs) {
                const PrimitiveRelation dimension =
                    parse_relation(dimension_dir.filename().string());
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(dimension_dir)) {
                    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                        files.push_back(entry.path());
                    }
                }
                std::sort(files.begin(), files.end());

                // candidate -> number of transcripts that voted for it
                std::map<std::string, std::size_t> votes;
                std::vector<std::string> order;  // first appearance across sorted files
                for (const auto& file : files) {
                    ++transcript_count;
                    const Transcript t = load_transcript(file);
                    const CandidateParse parsed = parse_candidates(t.response);
                    if (parsed.warning) {
                        err << "warning: no numbered list found in " << file.string() << '\n';
                        ++warnings;
                    }
                    for (const auto& item : parsed.items) {
                        if (votes[item]++ == 0) order.push_back(item);
                    }
                }
                std::vector<std::string> kept;
                for (const auto& item : order) {
                    if (votes[item] >= opt.min_vote) kept.push_back(item);
                }
                auto batch = candidates_to_records(subject_concept, dimension, kept);
                std::move(batch.begin(), batch.end(), std::back_inserter(records));
            }
        }

        save_records(opt.out_records, records);
        out << "transcripts: " << transcript_count << " records: " << records.size()
            << " warnings: " << warnings << '\n';
        return kExitOk;
    });
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.concepts == 0 || opt.properties == 0) {
            throw ValidationError("gen needs at least one concept and one property");
        }
        // raw engine draws with modulo keep the output identical across
        // platforms, unlike std distributions
        std::mt19937_64 rng(opt.seed);
        std::vector<PredicationRecord> records;
        records.reserve(opt.records);
        const Slot slots[] = {Slot::Arg0, Slot::Agent, Slot::Object};
        for (std::size_t i = 0; i < opt.records; ++i) {
            const std::size_t ci = static_cast<std::size_t>(rng() % opt.concepts);
            const std::size_t pi = static_cast<std::size_t>(rng() % opt.properties);
            const std::uint64_t count = rng() % 3 + 1;
            char concept_name[16];
            std::snprintf(concept_name, sizeof(concept_name), "c%04zu", ci);
            char pred_name[16];
            std::snprintf(pred_name, sizeof(pred_name), "P%04zu", pi);
            records.emplace_back(ConceptId(concept_name),
                                 PropertySlot(pred_name, slots[pi % 3]), "", count);
        }
        save_records(opt.out_records, records);
        out << "generated " << records.size() << " records over " << opt.concepts << " concepts x "
            << opt.properties << " properties\n";
        return kExitOk;
    });
}

}  // namespace ontoforge::cli
