#include "ontoforge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ontoforge {

using nlohmann::json;

namespace {

constexpr int kMatrixVersion = 1;
constexpr int kLatticeVersion = 1;

std::string subject_kind(const EntityRef& e) {
    return is_concept(e) ? "concept" : "individual";
}

EntityRef parse_entity(const std::string& name, const std::string& kind) {
    if (kind == "concept") return ConceptId::parse(name);
    if (kind == "individual") return IndividualId(name);
    throw ValidationError("unknown subject kind: '" + kind + "'");
}

json require_field(const json& j, const char* field) {
    if (!j.contains(field)) {
        throw ValidationError(std::string("missing field '") + field + "'");
    }
    return j.at(field);
}

template <typename F>
auto with_line_context(const std::filesystem::path& file, std::size_t line_no, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ValidationError(file.string() + " line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(file.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
}

std::ifstream open_input(const std::filesystem::path& file, const char* what) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + ": " + file.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& file, const char* what) {
    if (!file.parent_path().empty()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError(std::string("cannot write ") + what + ": " + file.string());
    return out;
}

}  // namespace

std::string record_to_json_line(const PredicationRecord& r) {
    json j;
    j["subject"] = entity_name(r.subject());
    j["subjectKind"] = subject_kind(r.subject());
    j["predicate"] = r.property().predicate();
    j["slot"] = std::string(slot_name(r.property().slot()));
    j["count"] = r.count();
    j["sentence"] = r.sentence();
    return j.dump();
}

PredicationRecord record_from_json_line(const std::string& line) {
    const json j = json::parse(line);
    const EntityRef subject = parse_entity(require_field(j, "subject").get<std::string>(),
                                           require_field(j, "subjectKind").get<std::string>());
    PropertySlot property(require_field(j, "predicate").get<std::string>(),
                          parse_slot(require_field(j, "slot").get<std::string>()));
    const std::uint64_t count = require_field(j, "count").get<std::uint64_t>();
    const std::string sentence = j.value("sentence", std::string());
    return PredicationRecord(subject, std::move(property), sentence, count);
}

void save_records(const std::filesystem::path& file,
                  const std::vector<PredicationRecord>& records) {
    auto out = open_output(file, "records file");
    for (const auto& r : records) out << record_to_json_line(r) << '\n';
}

std::vector<PredicationRecord> load_records(const std::filesystem::path& file) {
    auto in = open_input(file, "records file");
    std::vector<PredicationRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        records.push_back(
            with_line_context(file, line_no, [&] { return record_from_json_line(line); }));
    }
    return records;
}

std::string triple_to_json_line(const PrimitiveTriple& t) {
    json j;
    j["subject"] = entity_name(t.subject());
    j["subjectKind"] = subject_kind(t.subject());
    j["relation"] = std::string(relation_name(t.relation()));
    if (const auto* c = std::get_if<ConceptId>(&t.object())) {
        j["object"] = c->str();
        j["objectKind"] = "concept";
    } else if (const auto* i = std::get_if<IndividualId>(&t.object())) {
        j["object"] = i->name();
        j["objectKind"] = "individual";
    } else if (const auto* trope = std::get_if<TropeId>(&t.object())) {
        j["object"] = {{"noun", trope->noun()}, {"sourcePredicate", trope->source_predicate()}};
        j["objectKind"] = "trope";
    } else {
        const auto& m = std::get<MeasureValue>(t.object());
        json obj;
        obj["attribute"] = m.attribute();
        if (m.quantity()) {
            obj["quantity"] = m.quantity()->str();
            obj["unit"] = m.unit();
        }
        j["object"] = obj;
        j["objectKind"] = "measure";
    }
    return j.dump();
}

PrimitiveTriple triple_from_json_line(const std::string& line) {
    const json j = json::parse(line);
    const EntityRef subject = parse_entity(require_field(j, "subject").get<std::string>(),
                                           require_field(j, "subjectKind").get<std::string>());
    const PrimitiveRelation relation =
        parse_relation(require_field(j, "relation").get<std::string>());
    const std::string kind = require_field(j, "objectKind").get<std::string>();
    const json obj = require_field(j, "object");
    TripleObject object = [&]() -> TripleObject {
        if (kind == "concept") return ConceptId::parse(obj.get<std::string>());
        if (kind == "individual") return IndividualId(obj.get<std::string>());
        if (kind == "trope") {
            return TropeId(require_field(obj, "noun").get<std::string>(),
                           obj.value("sourcePredicate", std::string()));
        }
        if (kind == "measure") {
            std::optional<Rational> quantity;
            std::string unit;
            if (obj.contains("quantity")) {
                quantity = Rational::parse(obj.at("quantity").get<std::string>());
                unit = require_field(obj, "unit").get<std::string>();
            }
            return MeasureValue(quantity, unit, require_field(obj, "attribute").get<std::string>());
        }
        throw ValidationError("unknown object kind: '" + kind + "'");
    }();
    return PrimitiveTriple(subject, relation, std::move(object));
}

void save_triples(const std::filesystem::path& file, const std::vector<PrimitiveTriple>& triples) {
    auto out = open_output(file, "facts file");
    for (const auto& t : triples) out << triple_to_json_line(t) << '\n';
}

std::vector<PrimitiveTriple> load_triples(const std::filesystem::path& file) {
    auto in = open_input(file, "facts file");
    std::vector<PrimitiveTriple> triples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        triples.push_back(
            with_line_context(file, line_no, [&] { return triple_from_json_line(line); }));
    }
    return triples;
}

TaggedSentence parse_tagged_line(const std::string& line) {
    std::vector<Token> tokens;
    std::istringstream in(line);
    std::string item;
    while (in >> item) {
        const auto slash = item.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == item.size()) {
            throw ValidationError("malformed token (want surface/TAG): '" + item + "'");
        }
        std::string surface = item.substr(0, slash);
        for (char& c : surface) {
            if (c == '_') c = ' ';
        }
        tokens.push_back({std::move(surface), parse_tag(item.substr(slash + 1))});
    }
    return TaggedSentence(std::move(tokens));
}

std::string tagged_line(const TaggedSentence& s) {
    std::string out;
    for (const auto& token : s.tokens()) {
        if (!out.empty()) out += ' ';
        std::string surface = token.surface;
        for (char& c : surface) {
            if (c == ' ') c = '_';
        }
        out += surface + "/" + std::string(tag_name(token.tag));
    }
    return out;
}

std::vector<TaggedSentence> load_tagged_corpus(const std::filesystem::path& file) {
    auto in = open_input(file, "corpus file");
    std::vector<TaggedSentence> sentences;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            sentences.push_back(parse_tagged_line(line));
        } catch (const ValidationError& e) {
            throw ValidationError(file.string() + " line " + std::to_string(line_no) + ": " +
                                  e.what());
        }
    }
    return sentences;
}

void save_tagged_corpus(const std::filesystem::path& file,
                        const std::vector<TaggedSentence>& sentences) {
    auto out = open_output(file, "corpus file");
    for (const auto& s : sentences) out << tagged_line(s) << '\n';
}

LabelSeeds load_seeds(const std::filesystem::path& file) {
    auto in = open_input(file, "seeds file");
    LabelSeeds seeds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        {
            std::istringstream fin(line);
            std::string field;
            while (std::getline(fin, field, '\t')) fields.push_back(field);
        }
        try {
            if (fields.size() != 3) {
                throw ValidationError("expected 3 tab-separated columns, got " +
                                      std::to_string(fields.size()));
            }
            const std::string& label = fields[0];
            if (label.empty()) throw ValidationError("empty seed label");
            if (seeds.contains(label)) throw ValidationError("duplicate seed label: '" + label + "'");
            std::vector<std::string> items;
            {
                std::istringstream iin(fields[2]);
                std::string item;
                while (std::getline(iin, item, ',')) {
                    if (!item.empty()) items.push_back(item);
                }
            }
            if (fields[1] == "extent") {
                std::vector<ConceptId> cs;
                for (const auto& item : items) cs.push_back(ConceptId::parse(item));
                seeds.emplace(label, std::move(cs));
            } else if (fields[1] == "intent") {
                std::vector<PropertySlot> ps;
                for (const auto& item : items) ps.push_back(PropertySlot::parse(item));
                seeds.emplace(label, std::move(ps));
            } else {
                throw ValidationError("seed kind must be 'extent' or 'intent', got '" + fields[1] +
                                      "'");
            }
        } catch (const ValidationError& e) {
            throw ValidationError(file.string() + " line " + std::to_string(line_no) + ": " +
                                  e.what());
        }
    }
    return seeds;
}

namespace {

json snapshot_header(const char* format, int version) {
    json j;
    j["format"] = format;
    j["version"] = version;
    return j;
}

void check_snapshot(const json& j, const char* format, int version,
                    const std::filesystem::path& file) {
    if (!j.contains("format") || j.at("format") != format) {
        throw IoError(file.string() + ": not a " + std::string(format) + " snapshot");
    }
    if (!j.contains("version") || j.at("version").get<int>() != version) {
        throw IoError(file.string() + ": unsupported " + std::string(format) +
                      " version (want " + std::to_string(version) + ")");
    }
}

json load_snapshot_json(const std::filesystem::path& file, const char* what) {
    auto in = open_input(file, what);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(file.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

void save_matrix(const std::filesystem::path& file, const ApplicabilityMatrix& m) {
    json j = snapshot_header("ontoforge-matrix", kMatrixVersion);
    j["tau"] = m.tau();
    json concepts = json::array();
    for (const auto& c : m.concepts()) concepts.push_back(c.str());
    j["concepts"] = std::move(concepts);
    json properties = json::array();
    for (const auto& p : m.properties()) properties.push_back(p.str());
    j["properties"] = std::move(properties);
    json counts = json::array();
    for (const auto& [key, count] : m.counts()) {
        counts.push_back(json::array({key.first, key.second, count}));
    }
    j["counts"] = std::move(counts);
    auto out = open_output(file, "matrix snapshot");
    out << j.dump(2) << '\n';
}

ApplicabilityMatrix load_matrix(const std::filesystem::path& file) {
    const json j = load_snapshot_json(file, "matrix snapshot");
    check_snapshot(j, "ontoforge-matrix", kMatrixVersion, file);
    try {
        std::vector<ConceptId> concepts;
        for (const auto& c : require_field(j, "concepts")) {
            concepts.push_back(ConceptId::parse(c.get<std::string>()));
        }
        std::vector<PropertySlot> properties;
        for (const auto& p : require_field(j, "properties")) {
            properties.push_back(PropertySlot::parse(p.get<std::string>()));
        }
        std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
        for (const auto& cell : require_field(j, "counts")) {
            if (!cell.is_array() || cell.size() != 3) {
                throw ValidationError("count cells must be [concept, property, count]");
            }
            counts[{cell[0].get<std::size_t>(), cell[1].get<std::size_t>()}] =
                cell[2].get<std::uint64_t>();
        }
        return ApplicabilityMatrix(std::move(concepts), std::move(properties), std::move(counts),
                                   require_field(j, "tau").get<std::uint64_t>());
    } catch (const json::exception& e) {
        throw IoError(file.string() + ": " + e.what());
    }
}

namespace {

json bitset_indices(const Bitset& b) {
    json arr = json::array();
    b.for_each_set([&](std::size_t i) { arr.push_back(i); });
    return arr;
}

Bitset bitset_from_indices(const json& arr, std::size_t size) {
    Bitset b(size);
    for (const auto& i : arr) b.set(i.get<std::size_t>());
    return b;
}

}  // namespace

void save_lattice(const std::filesystem::path& file, const TypeLattice& lattice) {
    json j = snapshot_header("ontoforge-lattice", kLatticeVersion);
    json concepts = json::array();
    for (const auto& c : lattice.concepts()) concepts.push_back(c.str());
    j["concepts"] = std::move(concepts);
    json properties = json::array();
    for (const auto& p : lattice.properties()) properties.push_back(p.str());
    j["properties"] = std::move(properties);
    json nodes = json::array();
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
        json node;
        node["extent"] = bitset_indices(lattice.node(i).extent);
        node["intent"] = bitset_indices(lattice.node(i).intent);
        node["labels"] = lattice.labels(i);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& [parent, child] : lattice.edges()) {
        edges.push_back(json::array({parent, child}));
    }
    j["edges"] = std::move(edges);
    j["top"] = lattice.top();
    j["bottom"] = lattice.bottom();
    auto out = open_output(file, "lattice snapshot");
    out << j.dump(2) << '\n';
}

TypeLattice load_lattice(const std::filesystem::path& file) {
    const json j = load_snapshot_json(file, "lattice snapshot");
    check_snapshot(j, "ontoforge-lattice", kLatticeVersion, file);
    try {
        std::vector<ConceptId> concepts;
        for (const auto& c : require_field(j, "concepts")) {
            concepts.push_back(ConceptId::parse(c.get<std::string>()));
        }
        std::vector<PropertySlot> properties;
        for (const auto& p : require_field(j, "properties")) {
            properties.push_back(PropertySlot::parse(p.get<std::string>()));
        }
        std::vector<FormalConcept> nodes;
        std::vector<std::vector<std::string>> labels;
        for (const auto& node : require_field(j, "nodes")) {
            nodes.push_back(FormalConcept{
                bitset_from_indices(require_field(node, "extent"), concepts.size()),
                bitset_from_indices(require_field(node, "intent"), properties.size())});
            labels.push_back(node.value("labels", std::vector<std::string>{}));
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& edge : require_field(j, "edges")) {
            if (!edge.is_array() || edge.size() != 2) {
                throw ValidationError("edges must be [parent, child] pairs");
            }
            edges.emplace_back(edge[0].get<std::size_t>(), edge[1].get<std::size_t>());
        }
        return TypeLattice(std::move(concepts), std::move(properties), std::move(nodes),
                           std::move(labels), std::move(edges),
                           require_field(j, "top").get<std::size_t>(),
                           require_field(j, "bottom").get<std::size_t>());
    } catch (const json::exception& e) {
        throw IoError(file.string() + ": " + e.what());
    }
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string lattice_to_dot(const TypeLattice& lattice) {
    std::ostringstream out;
    out << "digraph ontology {\n";
    out << "  node [shape=box];\n";

    // display names are unique by construction; guard anyway so the graph
    // stays well-formed on hand-edited snapshots
    std::map<std::string, std::size_t> used;
    std::vector<std::string> ids(lattice.node_count());
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
        std::string id = lattice.display_name(i);
        if (auto [it, fresh] = used.emplace(id, i); !fresh) {
            id += "#" + std::to_string(i);
        }
        ids[i] = std::move(id);
    }

    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
        std::string text;
        if (lattice.labels(i).empty()) {
            text = lattice.display_name(i);
        } else {
            for (const auto& label : lattice.labels(i)) {
                if (!text.empty()) text += ", ";
                text += label;
            }
        }
        out << "  \"" << dot_escape(ids[i]) << "\" [label=\"" << dot_escape(text)
            << "\\nintent=" << lattice.node(i).intent.count() << "\"];\n";
    }
    for (const auto& [parent, child] : lattice.edges()) {
        out << "  \"" << dot_escape(ids[parent]) << "\" -> \"" << dot_escape(ids[child])
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::filesystem::path& file) {
    auto in = open_input(file, "file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& file, const std::string& content) {
    auto out = open_output(file, "file");
    out << content;
}

}  // namespace ontoforge
