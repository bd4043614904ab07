#include "naco/io/profile_io.hpp"

#include <json.hpp>

#include "naco/core/errors.hpp"
#include "naco/io/csv.hpp"

namespace naco::io {

using json = nlohmann::json;

void write_profile(const scoring::CalibrationProfile& profile, const std::string& path) {
    json histogram = json::object();
    for (const auto& [steps, freq] : profile.histogram) histogram[std::to_string(steps)] = freq;
    const json doc = {{"dataset_id", profile.dataset_id},
                      {"expected_complexity", profile.expected_complexity},
                      {"sample_size", profile.sample_size},
                      {"histogram", histogram},
                      {"prompt_template_version", profile.prompt_template_version},
                      {"model_name", profile.model_name}};
    write_text_file(path, doc.dump(2) + "\n");
}

scoring::CalibrationProfile read_profile(const std::string& path) {
    scoring::CalibrationProfile p;
    try {
        const json doc = json::parse(read_text_file(path));
        p.dataset_id = doc.at("dataset_id").get<std::string>();
        p.expected_complexity = doc.at("expected_complexity").get<int>();
        p.sample_size = doc.value("sample_size", 0);
        const json histogram = doc.value("histogram", json::object());
        for (const auto& [key, value] : histogram.items()) {
            p.histogram[std::stoi(key)] = value.get<int>();
        }
        p.prompt_template_version = doc.value("prompt_template_version", "");
        p.model_name = doc.value("model_name", "");
    } catch (const json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    } catch (const std::invalid_argument&) {
        throw SchemaError(path + ": histogram keys must be integers");
    }
    if (p.expected_complexity < 1) throw SchemaError(path + ": expected_complexity must be >= 1");
    return p;
}

}  // namespace naco::io
