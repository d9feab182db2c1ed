#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "majordex/error.hpp"
#include "majordex/poset.hpp"
#include "majordex/rlabel.hpp"

// JSON poset files:
//
//   {"elements": ["0", "a", "1"],
//    "covers": [["0", "a"], ["a", "1"]],
//    "labels": {"0|a": "(-1,1)", "a|1": "0"}}
//
// "labels" is optional; when present every cover needs a label.
namespace majordex::cli {

// A file that is not valid JSON or violates the schema. `key` names the
// offending member, e.g. "covers[2]".
class SchemaError : public Error {
public:
    SchemaError(const std::string& key, const std::string& message)
        : Error("E_SCHEMA", key + ": " + message), key_(key) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// File could not be opened or read.
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("E_IO", message) {}
};

struct PosetDocument {
    poset::GradedPoset poset;
    std::optional<std::map<poset::Cover, rlabel::Label>> labels;
};

// Throws SchemaError for shape problems and PosetError when the covers do
// not describe a bounded graded poset.
PosetDocument poset_from_json(const nlohmann::json& doc);
PosetDocument read_poset_file(const std::filesystem::path& path);

nlohmann::json poset_to_json(const poset::GradedPoset& p,
                             const std::map<poset::Cover, rlabel::Label>* labels = nullptr);
void write_poset_file(const std::filesystem::path& path, const poset::GradedPoset& p,
                      const std::map<poset::Cover, rlabel::Label>* labels = nullptr);

} // namespace majordex::cli
