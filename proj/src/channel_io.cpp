#include "cogcap/channel_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cogcap/errors.hpp"

namespace cogcap {

namespace {

std::size_t read_card(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw FormatError(std::string("channel file: missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw FormatError(std::string("channel file: '") + key + "' must be a positive integer");
    return v.get<std::size_t>();
}

}  // namespace

Channel parse_channel(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("channel file: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("channel file: top level must be an object");

    ChannelSizes sizes{read_card(doc, "x1_card"), read_card(doc, "x2_card"), read_card(doc, "y1_card"),
                       read_card(doc, "y2_card")};
    if (!doc.contains("transition") || !doc.at("transition").is_array())
        throw FormatError("channel file: missing array 'transition'");
    const auto& flat = doc.at("transition");
    const std::size_t expected = sizes.x1 * sizes.x2 * sizes.y1 * sizes.y2;
    if (flat.size() != expected) {
        throw FormatError("channel file: shape mismatch, expected " + std::to_string(expected) +
                          " transition entries, got " + std::to_string(flat.size()));
    }

    std::vector<double> rows(expected);
    std::size_t k = 0;
    for (std::size_t y1 = 0; y1 < sizes.y1; ++y1)
        for (std::size_t y2 = 0; y2 < sizes.y2; ++y2)
            for (std::size_t x1 = 0; x1 < sizes.x1; ++x1)
                for (std::size_t x2 = 0; x2 < sizes.x2; ++x2, ++k) {
                    const auto& v = flat[k];
                    if (!v.is_number()) throw FormatError("channel file: non-numeric transition entry");
                    rows[((x1 * sizes.x2 + x2) * sizes.y1 + y1) * sizes.y2 + y2] = v.get<double>();
                }
    try {
        return Channel(sizes, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("channel file: ") + e.what());
    }
}

std::string format_channel(const Channel& channel) {
    const auto& s = channel.sizes();
    nlohmann::ordered_json doc;
    doc["x1_card"] = s.x1;
    doc["x2_card"] = s.x2;
    doc["y1_card"] = s.y1;
    doc["y2_card"] = s.y2;
    auto flat = nlohmann::ordered_json::array();
    for (std::size_t y1 = 0; y1 < s.y1; ++y1)
        for (std::size_t y2 = 0; y2 < s.y2; ++y2)
            for (std::size_t x1 = 0; x1 < s.x1; ++x1)
                for (std::size_t x2 = 0; x2 < s.x2; ++x2) flat.push_back(channel(x1, x2, y1, y2));
    doc["transition"] = std::move(flat);
    return doc.dump(2) + "\n";
}

Channel load_channel(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open channel file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_channel(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_channel(const Channel& channel, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write channel file '" + path.string() + "'");
    out << format_channel(channel);
    if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

}  // namespace cogcap
