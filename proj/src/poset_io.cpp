#include "zetacomp/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "zetacomp/errors.hpp"

namespace zetacomp {

using nlohmann::json;
using nlohmann::ordered_json;

PosetSpec parse_poset_spec(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("poset document: ") + e.what());
    }

    if (!doc.is_object())
        throw ParseError("poset document: top level must be an object");

    PosetSpec spec;
    try {
        if (!doc.contains("names") || !doc["names"].is_array())
            throw ParseError("poset document: missing \"names\" array");
        for (const auto& name : doc["names"]) {
            if (!name.is_string())
                throw ParseError("poset document: names must be strings");
            spec.names.push_back(name.get<std::string>());
        }

        const std::string mode = doc.value("mode", std::string("covers"));
        if (mode == "covers")
            spec.mode = RelationMode::covers;
        else if (mode == "relations")
            spec.mode = RelationMode::relations;
        else
            throw ParseError("poset document: mode must be \"covers\" or \"relations\", got \"" + mode + "\"");

        if (doc.contains("pairs")) {
            if (!doc["pairs"].is_array())
                throw ParseError("poset document: \"pairs\" must be an array");
            for (const auto& pair : doc["pairs"]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                    throw ParseError("poset document: each pair must be [\"lesser\", \"greater\"]");
                spec.pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("poset document: ") + e.what());
    }
    return spec;
}

PosetSpec load_poset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open poset file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_poset_spec(buffer.str());
}

std::string poset_to_json(const Poset& p)
{
    ordered_json doc;
    doc["names"] = p.names();
    doc["mode"] = "relations";
    auto pairs = ordered_json::array();
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.less(i, j))
                pairs.push_back(ordered_json::array({p.name(i), p.name(j)}));
    doc["pairs"] = std::move(pairs);
    return doc.dump();
}

ordered_json report_to_json(const VerificationReport& report)
{
    ordered_json doc;
    doc["poset"] = ordered_json{{"n", report.n}, {"name", report.poset_name}};
    doc["chi"] = report.chi.get_str();
    doc["chi_reduced"] = report.chi_reduced.get_str();
    doc["det_complement"] = report.det_complement.get_str();
    auto identities = ordered_json::array();
    for (const auto& rec : report.identities)
        identities.push_back(ordered_json{
            {"name", rec.name}, {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"pass", rec.pass}});
    doc["identities"] = std::move(identities);
    doc["summary"] = ordered_json{{"passed", report.passed()}, {"failed", report.failed()}};
    return doc;
}

} // namespace zetacomp
