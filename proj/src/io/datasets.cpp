#include "naco/io/datasets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "naco/core/errors.hpp"
#include "naco/core/text.hpp"
#include "naco/io/csv.hpp"

namespace naco::io {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, std::size_t line, const std::string& field,
                               const std::string& problem) {
    throw SchemaError(path + ":" + std::to_string(line) + ": field '" + field + "': " + problem);
}

// Calls fn(line_number, object) for every non-blank line.
template <typename Fn>
void for_each_json_line(const std::string& path, Fn fn) {
    const std::string text = read_text_file(path);
    std::size_t number = 0;
    for (const auto line : core::split_lines(text)) {
        ++number;
        if (core::trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw SchemaError(path + ":" + std::to_string(number) + ": invalid JSON: " + e.what());
        }
        if (!obj.is_object()) {
            throw SchemaError(path + ":" + std::to_string(number) + ": line is not a JSON object");
        }
        fn(number, obj);
    }
}

std::string require_string(const json& obj, const char* field, const std::string& path,
                           std::size_t line) {
    if (!obj.contains(field)) schema_error(path, line, field, "missing");
    const auto& v = obj.at(field);
    if (!v.is_string()) schema_error(path, line, field, "must be a string");
    return v.get<std::string>();
}

std::string string_or_number(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::vector<std::string> string_list(const json& obj, const char* field, const std::string& path,
                                     std::size_t line) {
    const auto& v = obj.at(field);
    if (!v.is_array()) schema_error(path, line, field, "must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) schema_error(path, line, field, "must be a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

QGExample from_native(const json& obj, const std::string& path, std::size_t line) {
    QGExample ex;
    ex.id = string_or_number(obj.at("id"));
    ex.passages = string_list(obj, "passages", path, line);
    ex.answer = require_string(obj, "answer", path, line);
    if (obj.contains("clues") && !obj.at("clues").is_null()) ex.clues = string_list(obj, "clues", path, line);
    if (obj.contains("reference_question") && !obj.at("reference_question").is_null()) {
        ex.reference_question = require_string(obj, "reference_question", path, line);
    }
    return ex;
}

QGExample from_squad(const json& obj, const std::string& path, std::size_t line) {
    QGExample ex;
    ex.id = string_or_number(obj.at("id"));
    ex.passages = {require_string(obj, "context", path, line)};
    if (obj.contains("answer")) {
        ex.answer = require_string(obj, "answer", path, line);
    } else if (obj.contains("answers")) {
        const auto& answers = obj.at("answers");
        const json& texts = answers.is_object() ? answers.value("text", json::array()) : answers;
        if (!texts.is_array() || texts.empty() || !texts.front().is_string()) {
            schema_error(path, line, "answers", "needs a non-empty 'text' list");
        }
        ex.answer = texts.front().get<std::string>();
    } else {
        schema_error(path, line, "answer", "missing");
    }
    if (obj.contains("question")) ex.reference_question = require_string(obj, "question", path, line);
    return ex;
}

QGExample from_hotpot(const json& obj, const std::string& path, std::size_t line) {
    QGExample ex;
    ex.id = string_or_number(obj.contains("_id") ? obj.at("_id") : obj.at("id"));
    ex.answer = require_string(obj, "answer", path, line);
    if (obj.contains("question")) ex.reference_question = require_string(obj, "question", path, line);

    std::vector<std::pair<std::string, std::string>> paragraphs;
    for (const auto& para : obj.at("context")) {
        if (!para.is_array() || para.size() != 2 || !para[0].is_string() || !para[1].is_array()) {
            schema_error(path, line, "context", "paragraphs must be [title, [sentences]]");
        }
        std::string body;
        for (const auto& s : para[1]) body += s.get<std::string>();
        paragraphs.emplace_back(para[0].get<std::string>(), std::string(core::trim(body)));
    }
    std::vector<std::string> titles;
    if (obj.contains("supporting_facts")) {
        for (const auto& fact : obj.at("supporting_facts")) {
            const auto title = fact.at(0).get<std::string>();
            if (std::find(titles.begin(), titles.end(), title) == titles.end()) titles.push_back(title);
        }
    } else {
        for (const auto& [title, body] : paragraphs) titles.push_back(title);
    }
    for (const auto& title : titles) {
        for (const auto& [t, body] : paragraphs) {
            if (t == title) {
                ex.passages.push_back(body);
                break;
            }
        }
    }
    return ex;
}

}  // namespace

DatasetManifest load_manifest(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw SchemaError(path + ": invalid JSON: " + e.what());
    }
    DatasetManifest m;
    if (!doc.contains("dataset_id") || !doc.at("dataset_id").is_string()) {
        throw SchemaError(path + ": field 'dataset_id': missing");
    }
    m.dataset_id = doc.at("dataset_id").get<std::string>();
    m.examples_path = doc.value("examples_path", "");
    if (doc.contains("passage_count")) {
        const int count = doc.at("passage_count").get<int>();
        if (count != 1 && count != 2) throw SchemaError(path + ": field 'passage_count': must be 1 or 2");
        m.passage_count = count;
    }
    m.notes = doc.value("notes", "");
    return m;
}

std::vector<QGExample> load_examples(const std::string& path,
                                     const std::optional<DatasetManifest>& manifest) {
    std::vector<QGExample> examples;
    std::set<std::string> seen;
    for_each_json_line(path, [&](std::size_t line, const json& obj) {
        if (!obj.contains("id") && !obj.contains("_id")) schema_error(path, line, "id", "missing");
        QGExample ex;
        try {
            if (obj.contains("passages")) {
                ex = from_native(obj, path, line);
            } else if (obj.contains("context") && obj.at("context").is_string()) {
                ex = from_squad(obj, path, line);
            } else if (obj.contains("context")) {
                ex = from_hotpot(obj, path, line);
            } else {
                schema_error(path, line, "passages", "missing");
            }
        } catch (const json::exception& e) {
            throw SchemaError(path + ":" + std::to_string(line) + ": " + e.what());
        }

        if (obj.contains("dataset_id") && obj.at("dataset_id").is_string()) {
            ex.dataset_id = obj.at("dataset_id").get<std::string>();
        } else if (manifest) {
            ex.dataset_id = manifest->dataset_id;
        } else {
            schema_error(path, line, "dataset_id", "missing (and no manifest supplies it)");
        }
        if (ex.passages.empty() || ex.passages.size() > 2) {
            throw PassageCountMismatch(path + ":" + std::to_string(line) + ": example '" + ex.id +
                                       "' has " + std::to_string(ex.passages.size()) +
                                       " passages; 1 or 2 expected");
        }
        if (manifest && manifest->passage_count &&
            static_cast<int>(ex.passages.size()) != *manifest->passage_count) {
            throw PassageCountMismatch(path + ":" + std::to_string(line) + ": example '" + ex.id +
                                       "' has " + std::to_string(ex.passages.size()) +
                                       " passages but the manifest expects " +
                                       std::to_string(*manifest->passage_count));
        }
        if (core::trim(ex.answer).empty()) schema_error(path, line, "answer", "must not be empty");
        if (!seen.insert(ex.id).second) {
            throw DuplicateId(path + ":" + std::to_string(line) + ": duplicate example id '" + ex.id + "'");
        }
        examples.push_back(std::move(ex));
    });
    return examples;
}

std::vector<CandidateQuestion> load_candidates(const std::string& path,
                                               const std::vector<QGExample>& examples) {
    std::set<std::string> known;
    for (const auto& ex : examples) known.insert(ex.id);
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<CandidateQuestion> out;
    for_each_json_line(path, [&](std::size_t line, const json& obj) {
        CandidateQuestion c;
        if (!obj.contains("example_id")) schema_error(path, line, "example_id", "missing");
        c.example_id = string_or_number(obj.at("example_id"));
        c.system = require_string(obj, "system", path, line);
        c.text = require_string(obj, "text", path, line);
        if (core::trim(c.text).empty()) schema_error(path, line, "text", "must not be empty");
        if (!known.contains(c.example_id)) {
            throw UnknownExampleId(path + ":" + std::to_string(line) + ": unknown example id '" +
                                   c.example_id + "'");
        }
        if (!seen.emplace(c.example_id, c.system).second) {
            throw DuplicateId(path + ":" + std::to_string(line) + ": second candidate for (" +
                              c.example_id + ", " + c.system + ")");
        }
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<analysis::HumanRating> load_ratings(const std::string& path) {
    std::vector<analysis::HumanRating> out;
    for_each_json_line(path, [&](std::size_t line, const json& obj) {
        analysis::HumanRating r;
        if (!obj.contains("example_id")) schema_error(path, line, "example_id", "missing");
        r.example_id = string_or_number(obj.at("example_id"));
        r.system = require_string(obj, "system", path, line);
        if (!obj.contains("rater_id")) schema_error(path, line, "rater_id", "missing");
        r.rater_id = string_or_number(obj.at("rater_id"));
        auto score = [&](const char* field) {
            if (!obj.contains(field)) schema_error(path, line, field, "missing");
            const auto& v = obj.at(field);
            if (!v.is_number_integer()) schema_error(path, line, field, "must be an integer");
            const int value = v.get<int>();
            if (value < 0 || value > 2) schema_error(path, line, field, "must be 0, 1 or 2");
            return value;
        };
        r.naturalness = score("naturalness");
        r.answerability = score("answerability");
        r.complexity = score("complexity");
        out.push_back(std::move(r));
    });
    return out;
}

std::map<std::string, std::vector<std::string>> load_references(const std::string& path) {
    std::map<std::string, std::vector<std::string>> out;
    for_each_json_line(path, [&](std::size_t line, const json& obj) {
        if (!obj.contains("example_id")) schema_error(path, line, "example_id", "missing");
        if (!obj.contains("references")) schema_error(path, line, "references", "missing");
        auto& refs = out[string_or_number(obj.at("example_id"))];
        for (auto& r : string_list(obj, "references", path, line)) refs.push_back(std::move(r));
    });
    return out;
}

}  // namespace naco::io
