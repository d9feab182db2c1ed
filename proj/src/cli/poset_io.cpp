#include "majordex/cli/poset_io.hpp"

#include <fstream>
#include <sstream>

namespace majordex::cli {

using nlohmann::json;
using poset::Cover;
using poset::GradedPoset;

namespace {

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(key, "missing required key");
    return *it;
}

} // namespace

PosetDocument poset_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("<root>", "expected a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "elements" && it.key() != "covers" && it.key() != "labels")
            throw SchemaError(it.key(), "unknown key");

    const json& elements = require(doc, "elements");
    if (!elements.is_array()) throw SchemaError("elements", "expected an array of strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!elements[i].is_string())
            throw SchemaError("elements[" + std::to_string(i) + "]", "expected a string");
        names.push_back(elements[i].get<std::string>());
    }

    const json& covers = require(doc, "covers");
    if (!covers.is_array()) throw SchemaError("covers", "expected an array of [lower, upper] pairs");
    std::vector<std::pair<std::string, std::string>> named;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const json& c = covers[i];
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw SchemaError("covers[" + std::to_string(i) + "]", "expected [lower, upper] with string entries");
        named.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }

    PosetDocument out{GradedPoset::from_named_covers(std::move(names), named), std::nullopt};

    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("labels", "expected an object mapping \"lower|upper\" to labels");
        std::map<Cover, rlabel::Label> labels;
        for (auto entry = it->begin(); entry != it->end(); ++entry) {
            const std::string key = "labels[\"" + entry.key() + "\"]";
            const auto bar = entry.key().find('|');
            if (bar == std::string::npos || entry.key().find('|', bar + 1) != std::string::npos)
                throw SchemaError(key, "expected exactly one '|' between the two elements");
            auto lower = out.poset.find(entry.key().substr(0, bar));
            auto upper = out.poset.find(entry.key().substr(bar + 1));
            if (!lower || !upper) throw SchemaError(key, "unknown element");
            const auto ups = out.poset.upper_covers(*lower);
            if (std::find(ups.begin(), ups.end(), *upper) == ups.end()) throw SchemaError(key, "not a cover");
            if (!entry->is_string()) throw SchemaError(key, "expected a label string");
            try {
                labels[{*lower, *upper}] = rlabel::Label::parse(entry->get<std::string>());
            } catch (const DomainError& e) {
                throw SchemaError(key, e.what());
            }
        }
        for (const Cover& c : out.poset.covers())
            if (!labels.count(c))
                throw SchemaError("labels", "no label for cover \"" + out.poset.name(c.first) + "|" +
                                                out.poset.name(c.second) + "\"");
        out.labels = std::move(labels);
    }
    return out;
}

PosetDocument read_poset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw SchemaError("<root>", std::string("invalid JSON in ") + path.string() + ": " + e.what());
    }
    return poset_from_json(doc);
}

json poset_to_json(const GradedPoset& p, const std::map<Cover, rlabel::Label>* labels) {
    json doc;
    doc["elements"] = json::array();
    for (poset::ElementId x = 0; x < p.size(); ++x) doc["elements"].push_back(p.name(x));
    doc["covers"] = json::array();
    for (const Cover& c : p.covers()) doc["covers"].push_back({p.name(c.first), p.name(c.second)});
    if (labels) {
        doc["labels"] = json::object();
        for (const auto& [c, l] : *labels) doc["labels"][p.name(c.first) + "|" + p.name(c.second)] = to_string(l);
    }
    return doc;
}

void write_poset_file(const std::filesystem::path& path, const GradedPoset& p,
                      const std::map<Cover, rlabel::Label>* labels) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << poset_to_json(p, labels).dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path.string());
}

} // namespace majordex::cli
