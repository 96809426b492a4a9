#include "ontoforge/elicit.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

namespace ontoforge {

namespace {

bool dimension_supported(PrimitiveRelation r) {
    return r == PrimitiveRelation::AgentOf || r == PrimitiveRelation::ObjectOf ||
           r == PrimitiveRelation::HasProp;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

PromptTemplate::PromptTemplate(PrimitiveRelation dimension, std::string pattern, int k)
    : dimension_(dimension), pattern_(std::move(pattern)), k_(k) {
    if (!dimension_supported(dimension_)) {
        throw ValidationError("prompt dimension must be agentOf, objectOf or hasProp");
    }
    if (count_occurrences(pattern_, "[MASK]") != 1) {
        throw ValidationError("prompt pattern must contain exactly one [MASK]");
    }
    if (count_occurrences(pattern_, "{CONCEPT}") < 1) {
        throw ValidationError("prompt pattern must contain at least one {CONCEPT}");
    }
    if (k_ < 1) throw ValidationError("prompt k must be >= 1");
}

const std::vector<PromptTemplate>& default_templates() {
    static const std::vector<PromptTemplate> templates = {
        PromptTemplate(PrimitiveRelation::AgentOf, "The {CONCEPT} has [MASK] millions of people",
                       25),
        PromptTemplate(PrimitiveRelation::ObjectOf, "Jon has [MASK] the {CONCEPT}", 25),
        PromptTemplate(PrimitiveRelation::HasProp, "It was a very [MASK] {CONCEPT}", 25),
    };
    return templates;
}

std::string render_prompt(const PromptTemplate& tpl, const ConceptId& subject_concept) {
    std::string sentence = tpl.pattern();
    const std::string placeholder = "{CONCEPT}";
    for (std::size_t pos = sentence.find(placeholder); pos != std::string::npos;
         pos = sentence.find(placeholder, pos)) {
        sentence.replace(pos, placeholder.size(), subject_concept.lemma());
        pos += subject_concept.lemma().size();
    }
    return "Provide exactly " + std::to_string(tpl.k()) +
           " plausible replacements for [MASK] in the following sentence. "
           "Answer with a numbered list only.\n\n" +
           sentence;
}

CandidateParse parse_candidates(const std::string& response) {
    static const std::regex numbered(R"(^\s*([0-9]+)[.)]\s*(.+)$)");
    CandidateParse out;
    std::set<std::string> seen;
    std::istringstream in(response);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::smatch m;
        if (!std::regex_match(line, m, numbered)) continue;
        ++out.matched_lines;
        std::string item = to_lower_ascii(m[2].str());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
            item.pop_back();
        }
        if (item.empty()) continue;
        if (seen.insert(item).second) out.items.push_back(item);
    }
    out.warning = out.matched_lines == 0;
    return out;
}

std::vector<PredicationRecord> candidates_to_records(const ConceptId& subject_concept,
                                                     PrimitiveRelation dimension,
                                                     const std::vector<std::string>& candidates) {
    if (!dimension_supported(dimension)) {
        throw ValidationError("candidate dimension must be agentOf, objectOf or hasProp");
    }
    Slot slot = Slot::Arg0;
    if (dimension == PrimitiveRelation::AgentOf) slot = Slot::Agent;
    if (dimension == PrimitiveRelation::ObjectOf) slot = Slot::Object;

    std::vector<PredicationRecord> records;
    records.reserve(candidates.size());
    for (const std::string& candidate : candidates) {
        std::string label = to_upper_ascii(candidate);
        for (char& c : label) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '/') c = '-';
        }
        records.emplace_back(subject_concept, PropertySlot(std::move(label), slot), "");
    }
    return records;
}

namespace {

std::string escape_header(const std::string& value) {
    std::string out;
    out.reserve(value.size());
    for (const char c : value) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape_header(const std::string& value) {
    std::string out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i] != '\\' || i + 1 == value.size()) {
            out += value[i];
            continue;
        }
        ++i;
        switch (value[i]) {
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            case '\\': out += '\\'; break;
            default: out += value[i];
        }
    }
    return out;
}

std::string header_value(const std::string& line, const std::string& key) {
    if (!line.starts_with(key)) {
        throw IoError("malformed transcript: expected '" + key + "' header");
    }
    std::string value = line.substr(key.size());
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    return value;
}

}  // namespace

std::string format_transcript(const Transcript& t) {
    return "PROMPT: " + escape_header(t.prompt) + "\nENDPOINT: " + t.endpoint +
           "\nTIME: " + t.time + "\n\n" + t.response;
}

Transcript parse_transcript(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    const auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) throw IoError(std::string("truncated transcript: ") + what);
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };
    Transcript t;
    next_line("missing PROMPT header");
    t.prompt = unescape_header(header_value(line, "PROMPT:"));
    next_line("missing ENDPOINT header");
    t.endpoint = header_value(line, "ENDPOINT:");
    next_line("missing TIME header");
    t.time = header_value(line, "TIME:");
    next_line("missing blank separator");
    if (!line.empty()) throw IoError("malformed transcript: expected blank line after headers");
    std::ostringstream body;
    body << in.rdbuf();
    t.response = body.str();
    return t;
}

Transcript load_transcript(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open transcript: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_transcript(buffer.str());
}

void save_transcript_atomic(const std::filesystem::path& file, const Transcript& t) {
    if (!file.parent_path().empty()) std::filesystem::create_directories(file.parent_path());
    const std::filesystem::path tmp = file.parent_path() / (".tmp-" + file.filename().string());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot write transcript: " + tmp.string());
        out << format_transcript(t);
    }
    std::filesystem::rename(tmp, file);
}

std::string prompt_hash(const std::string& prompt) {
    // FNV-1a 64-bit, hex; stable across platforms
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : prompt) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

Elicitor::Elicitor(ElicitConfig config) : config_(std::move(config)) {
    if (config_.max_in_flight < 1) throw ValidationError("max_in_flight must be >= 1");
    if (config_.cache_dir.empty()) throw ValidationError("elicitor needs a cache directory");
}

std::filesystem::path Elicitor::cache_path(const ElicitJob& job) const {
    return config_.cache_dir / job.subject_concept.str() /
           std::string(relation_name(job.dimension)) / (prompt_hash(job.prompt) + ".txt");
}

Transcript Elicitor::run(const ElicitJob& job) const {
    const std::filesystem::path path = cache_path(job);
    if (std::filesystem::exists(path)) {
        return load_transcript(path);
    }
    if (config_.offline) {
        throw IoError("offline: no cached transcript at " + path.string());
    }
    Transcript t = fetch_remote(job.prompt);
    save_transcript_atomic(path, t);
    return t;
}

std::vector<Transcript> Elicitor::run_all(const std::vector<ElicitJob>& jobs) const {
    std::vector<Transcript> results(jobs.size());
    std::vector<std::string> errors;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(config_.max_in_flight), jobs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run(jobs[i]);
        return results;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                try {
                    results[i] = run(jobs[i]);
                } catch (const std::exception& e) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    errors.emplace_back(e.what());
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (!errors.empty()) throw IoError(errors.front());
    return results;
}

Transcript Elicitor::fetch_remote(const std::string& prompt) const {
    if (config_.url.empty()) {
        throw IoError("no endpoint configured (set ELICIT_URL) and transcript not cached");
    }
    // split http://host:port/path into client base and request path
    std::string base = config_.url;
    std::string path = "/";
    const auto scheme = base.find("://");
    const auto path_start = base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (path_start != std::string::npos) {
        path = base.substr(path_start);
        base = base.substr(0, path_start);
    }

    httplib::Client client(base);
    client.set_read_timeout(60, 0);
    httplib::Headers headers;
    if (!config_.auth.empty()) headers.emplace("Authorization", config_.auth);
    const auto res = client.Post(path, headers, prompt, "text/plain");
    if (!res) {
        throw IoError("endpoint request failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw IoError("endpoint returned status " + std::to_string(res->status));
    }

    Transcript t;
    t.prompt = prompt;
    t.response = res->body;
    t.endpoint = config_.url;
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&tt, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    t.time = buf;
    return t;
}

}  // namespace ontoforge
