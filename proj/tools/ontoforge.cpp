#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ontoforge/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ontoforge — induce a type hierarchy from predication evidence"};
    app.require_subcommand(1);

    // global dials; --seed feeds the synthetic generator, everything else
    // in the pipeline is deterministic by construction
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for synthetic data generation")->capture_default_str();

    using namespace ontoforge::cli;

    ExtractOptions extract_opt;
    auto* extract = app.add_subcommand("extract", "turn a tagged corpus into predication records");
    extract->add_option("--corpus", extract_opt.corpus, "tagged corpus, token/TAG pairs per line")
        ->required();
    extract->add_option("--lexicon", extract_opt.lexicon, "predicate lexicon (TSV)");
    extract->add_option("--out", extract_opt.out_records, "records output (JSON lines)")->required();
    extract->add_option("--facts", extract_opt.out_facts, "facts output (default <out>.facts.jsonl)");
    extract->add_option("--skip-log", extract_opt.skip_log, "skip log (default <out>.skip)");

    TagOptions tag_opt;
    auto* tag = app.add_subcommand("tag", "tag raw sentences with the built-in tagger");
    tag->add_option("--in", tag_opt.input, "raw sentences, one per line")->required();
    tag->add_option("--lexicon", tag_opt.lexicon, "predicate lexicon (TSV)");
    tag->add_option("--out", tag_opt.output, "tagged corpus output")->required();

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "build matrix and lattice snapshots from records");
    build->add_option("--records", build_opt.records, "records file (JSON lines)")->required();
    build->add_option("--facts", build_opt.facts, "facts file with instanceOf links");
    build->add_option("--seeds", build_opt.seeds, "label seeds (TSV)");
    build->add_option("--tau", build_opt.tau, "evidence threshold")->capture_default_str();
    build->add_option("--out-matrix", build_opt.out_matrix, "matrix snapshot output")->required();
    build->add_option("--out-lattice", build_opt.out_lattice, "lattice snapshot output")->required();

    QueryOptions query_opt;
    auto* query = app.add_subcommand("query", "answer questions over a lattice snapshot");
    query->add_option("--lattice", query_opt.lattice, "lattice snapshot")->required();
    query->add_option("--lexicon", query_opt.lexicon, "predicate lexicon (TSV)");
    query->add_flag("--json", query_opt.json, "machine-readable output");
    query->add_option("subcommand", query_opt.subcommand, "profile|sensible|supertype|signature")
        ->required();
    query->add_option("args", query_opt.args, "subcommand arguments");

    ExportOptions export_opt;
    auto* exportc = app.add_subcommand("export", "render a lattice snapshot");
    exportc->add_option("--lattice", export_opt.lattice, "lattice snapshot")->required();
    exportc->add_option("--format", export_opt.format, "dot|json")->required();
    exportc->add_option("--out", export_opt.output, "output file")->required();

    ElicitOptions elicit_opt;
    auto* elicit = app.add_subcommand("elicit", "render mask prompts and cache endpoint transcripts");
    elicit->add_option("--concepts", elicit_opt.concepts, "concepts, one per line")->required();
    elicit->add_option("--templates", elicit_opt.templates, "prompt templates (JSON)");
    elicit->add_option("--transcripts", elicit_opt.transcripts, "transcript cache directory")
        ->required();
    elicit->add_flag("--offline", elicit_opt.offline, "forbid network; cached transcripts only");
    elicit->add_option("--jobs", elicit_opt.jobs, "max in-flight requests")->capture_default_str();

    IngestOptions ingest_opt;
    auto* ingest = app.add_subcommand("ingest", "parse cached transcripts into records");
    ingest->add_option("--transcripts", ingest_opt.transcripts, "transcript directory")->required();
    ingest->add_option("--out", ingest_opt.out_records, "records output (JSON lines)")->required();
    ingest->add_option("--min-vote", ingest_opt.min_vote,
                       "keep candidates appearing in at least this many transcripts")
        ->capture_default_str();

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a synthetic concept-level corpus");
    gen->add_option("--concepts", gen_opt.concepts, "concept count")->capture_default_str();
    gen->add_option("--properties", gen_opt.properties, "property count")->capture_default_str();
    gen->add_option("--records", gen_opt.records, "record count")->capture_default_str();
    gen->add_option("--out", gen_opt.out_records, "records output (JSON lines)")->required();

    CLI11_PARSE(app, argc, argv);

    if (extract->parsed()) return run_extract(extract_opt, std::cout, std::cerr);
    if (tag->parsed()) return run_tag(tag_opt, std::cout, std::cerr);
    if (build->parsed()) return run_build(build_opt, std::cout, std::cerr);
    if (query->parsed()) return run_query(query_opt, std::cout, std::cerr);
    if (exportc->parsed()) return run_export(export_opt, std::cout, std::cerr);
    if (elicit->parsed()) return run_elicit(elicit_opt, std::cout, std::cerr);
    if (ingest->parsed()) {
        return run_ingest(ingest_opt, std::cout, std::cerr);
    }
    if (gen->parsed()) {
        gen_opt.seed = seed;
        return run_gen(gen_opt, std::cout, std::cerr);
    }
    return ontoforge::cli::kExitFailure;
}
