#include "dtk/errors.hpp"
#include "dtk/nl_dt.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace dtk {

namespace {

using json = nlohmann::json;

// Line numbers of the objects that are direct elements of a top-level array,
// in document order. In the NL schema those are exactly the "nl" entries.
std::vector<int> entry_lines(std::string_view text)
{
    std::vector<int> lines;
    int line = 1;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (char ch : text) {
        if (ch == '\n')
            ++line;
        if (in_string) {
            if (escaped)
                escaped = false;
            else if (ch == '\\')
                escaped = true;
            else if (ch == '"')
                in_string = false;
            continue;
        }
        switch (ch) {
        case '"':
            in_string = true;
            break;
        case '{':
        case '[':
            if (ch == '{' && depth == 2)
                lines.push_back(line);
            ++depth;
            break;
        case '}':
        case ']':
            --depth;
            break;
        default:
            break;
        }
    }
    return lines;
}

long integer_field(const json& obj, const char* key, const std::string& where)
{
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ValidationError(where + ": \"" + key + "\" must be an integer");
    return v.get<long>();
}

} // namespace

FibrationSpec nl_load(std::string_view document, std::string_view source)
{
    const std::string src(source);
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw ParseError(src + ": " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError(src + ":1: NL document must be an object");

    static const std::set<std::string> known{"ell", "k", "euler", "nodal", "nl", "comment"};
    for (const auto& [key, value] : doc.items())
        if (!known.contains(key))
            throw ValidationError(src + ": unknown key \"" + key + "\"");
    for (const char* key : {"ell", "k", "nl"})
        if (!doc.contains(key))
            throw ValidationError(src + ": missing required key \"" + key + "\"");

    FibrationSpec spec;
    spec.ell = integer_field(doc, "ell", src);
    if (spec.ell < 1)
        throw ValidationError(src + ": \"ell\" must be positive");
    spec.k = integer_field(doc, "k", src);
    if (doc.contains("euler")) {
        const long e = integer_field(doc, "euler", src);
        if (e < 1 || e > 1'000'000)
            throw ValidationError(src + ": \"euler\" must be a positive integer");
        spec.euler = static_cast<int>(e);
    }
    if (doc.contains("nodal")) {
        if (!doc["nodal"].is_boolean())
            throw ValidationError(src + ": \"nodal\" must be a boolean");
        spec.nodal = doc["nodal"].get<bool>();
    }
    if (doc.contains("comment") && !doc["comment"].is_string())
        throw ValidationError(src + ": \"comment\" must be a string");

    const json& entries = doc["nl"];
    if (!entries.is_array())
        throw ValidationError(src + ": \"nl\" must be an array");

    const auto lines = entry_lines(document);
    spec.nl = NLTable(spec.ell);
    std::set<NLTable::Key> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where =
            src + ":" + (i < lines.size() ? std::to_string(lines[i]) : std::string("?")) + ": nl[" +
            std::to_string(i) + "]";
        const json& e = entries[i];
        if (!e.is_object())
            throw ValidationError(where + ": entry must be an object");
        for (const auto& [key, value] : e.items())
            if (key != "h" && key != "d" && key != "value")
                throw ValidationError(where + ": unknown key \"" + key + "\"");
        for (const char* key : {"h", "d", "value"})
            if (!e.contains(key))
                throw ValidationError(where + ": missing \"" + key + "\"");

        const long h = integer_field(e, "h", where);
        const long d = integer_field(e, "d", where);
        Rational value;
        const json& v = e["value"];
        if (v.is_string()) {
            try {
                value = parse_rational(v.get<std::string>());
            } catch (const ParseError& err) {
                throw ParseError(where + ": " + err.what());
            }
        } else if (v.is_number_integer()) {
            value = Rational(Integer(v.dump()));
        } else {
            throw ParseError(where + ": \"value\" must be an exact rational string like \"p/q\"");
        }

        if (!seen.insert({h, d}).second)
            throw ValidationError(where + ": duplicate NL entry (h=" + std::to_string(h) + ", d=" +
                                  std::to_string(d) + ")");
        try {
            spec.nl.insert(h, d, value);
        } catch (const ValidationError& err) {
            throw ValidationError(where + ": " + err.what());
        }
    }
    return spec;
}

FibrationSpec nl_load_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return nl_load(buf.str(), path.string());
}

std::string nl_dump(const FibrationSpec& spec)
{
    nlohmann::ordered_json doc;
    doc["ell"] = spec.ell;
    doc["k"] = spec.k;
    doc["euler"] = spec.euler;
    doc["nodal"] = spec.nodal;
    doc["nl"] = nlohmann::ordered_json::array();
    for (const auto& [key, v] : spec.nl.entries()) {
        nlohmann::ordered_json e;
        e["h"] = key.first;
        e["d"] = key.second;
        e["value"] = v.get_str();
        doc["nl"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

} // namespace dtk
