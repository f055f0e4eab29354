#include "cascade_noise/chain_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cascade_noise/errors.hpp"

namespace cascade_noise {

namespace {

using nlohmann::json;

void reject_unknown_members(const json& object, std::initializer_list<const char*> allowed,
                            const std::string& where) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) known = true;
        if (!known)
            throw ParseError(where + " has unknown member \"" + it.key() + "\"");
    }
}

double number_member(const json& object, const char* key, const std::string& where) {
    const json& value = object.at(key);
    if (!value.is_number())
        throw ParseError(where + " member \"" + std::string(key) + "\" must be a number");
    return value.get<double>();
}

}  // namespace

ChainDocument parse_chain_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("chain document must be a JSON object");
    reject_unknown_members(doc, {"source", "stages"}, "document");
    if (!doc.contains("source")) throw ParseError("document is missing \"source\"");
    if (!doc.contains("stages")) throw ParseError("document is missing \"stages\"");

    const json& source = doc["source"];
    if (!source.is_object()) throw ParseError("\"source\" must be an object");
    reject_unknown_members(source, {"signal", "noise"}, "source");
    if (!source.contains("signal")) throw ParseError("source is missing \"signal\"");
    if (!source.contains("noise")) throw ParseError("source is missing \"noise\"");

    ChainDocument document;
    document.source.signal_power = number_member(source, "signal", "source");
    document.source.noise_power = number_member(source, "noise", "source");

    const json& stages = doc["stages"];
    if (!stages.is_array()) throw ParseError("\"stages\" must be an array");
    document.stages.reserve(stages.size());
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const std::string where = "stage " + std::to_string(i + 1);
        const json& element = stages[i];
        if (!element.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_members(
            element, {"gain", "gain_db", "added_noise", "friis_figure_db", "corrected_figure_db"},
            where);

        RawStageSpec raw;
        if (element.contains("gain")) raw.gain_linear = number_member(element, "gain", where);
        if (element.contains("gain_db")) raw.gain_db = number_member(element, "gain_db", where);
        if (element.contains("added_noise"))
            raw.added_noise = number_member(element, "added_noise", where);
        if (element.contains("friis_figure_db"))
            raw.friis_figure_db = number_member(element, "friis_figure_db", where);
        if (element.contains("corrected_figure_db"))
            raw.corrected_figure_db = number_member(element, "corrected_figure_db", where);

        const int gain_fields = (raw.gain_linear ? 1 : 0) + (raw.gain_db ? 1 : 0);
        if (gain_fields != 1)
            throw ParseError(where + " must specify exactly one of \"gain\", \"gain_db\"");
        const int noise_fields = (raw.added_noise ? 1 : 0) + (raw.friis_figure_db ? 1 : 0) +
                                 (raw.corrected_figure_db ? 1 : 0);
        if (noise_fields != 1)
            throw ParseError(where +
                             " must specify exactly one of \"added_noise\", \"friis_figure_db\", "
                             "\"corrected_figure_db\"");
        document.stages.push_back(raw);
    }
    return document;
}

ChainDocument load_chain_document(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open chain document \"" + path + "\"");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (!file.good() && !file.eof())
        throw ParseError("cannot read chain document \"" + path + "\"");
    try {
        return parse_chain_document(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

CascadeChain chain_from_document(const ChainDocument& document) {
    return resolve_chain(document.source, document.stages);
}

std::string emit_chain_document(const CascadeChain& chain) {
    json doc;
    doc["source"]["signal"] = chain.source.signal_power;
    doc["source"]["noise"] = chain.source.noise_power;
    doc["stages"] = json::array();
    for (const StageSpec& s : chain.stages)
        doc["stages"].push_back(json{{"gain", s.gain}, {"added_noise", s.added_noise}});
    return doc.dump(2) + "\n";
}

}  // namespace cascade_noise
