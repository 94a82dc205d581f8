#include "polymix/json_io.hpp"

#include <fstream>
#include <sstream>

namespace polymix {

nlohmann::json graph_to_json(const FlagGraph& g) {
    nlohmann::json j;
    j["rank"] = g.rank();
    j["flags"] = g.flags();
    j["adjacency"] = g.adjacency();
    return j;
}

FlagGraph graph_from_json(const nlohmann::json& j) {
    const int rank = j.at("rank").get<int>();
    const int flags = j.at("flags").get<int>();
    auto adjacency = j.at("adjacency").get<std::vector<std::vector<int32_t>>>();
    if (static_cast<int>(adjacency.size()) != rank)
        throw ValidationError("BadFormat", "adjacency size does not match rank", {});
    for (const auto& row : adjacency)
        if (static_cast<int>(row.size()) != flags)
            throw ValidationError("BadFormat", "adjacency row size does not match flags", {});
    return validate_maniplex(adjacency);
}

nlohmann::json poset_to_json(const FacePoset& p) {
    nlohmann::json j;
    j["rank"] = p.rank();
    auto faces = nlohmann::json::array();
    for (const Face& f : p.faces()) faces.push_back({{"rank", f.rank}, {"id", f.id}});
    j["faces"] = std::move(faces);
    auto covers = nlohmann::json::array();
    for (const auto& [lo, hi] : p.covers())
        covers.push_back({p.faces()[lo].id, p.faces()[hi].id});
    j["covers"] = std::move(covers);
    return j;
}

FacePoset poset_from_json(const nlohmann::json& j) {
    const int rank = j.at("rank").get<int>();
    std::vector<Face> faces;
    for (const auto& f : j.at("faces"))
        faces.push_back({f.at("rank").get<int>(), f.at("id").get<std::string>()});
    std::unordered_map<std::string, int32_t> index;
    for (int32_t i = 0; i < static_cast<int32_t>(faces.size()); ++i) index[faces[i].id] = i;
    std::vector<std::pair<int32_t, int32_t>> covers;
    for (const auto& c : j.at("covers")) {
        const auto lo = index.find(c.at(0).get<std::string>());
        const auto hi = index.find(c.at(1).get<std::string>());
        if (lo == index.end() || hi == index.end())
            throw ValidationError("BadFormat", "cover references unknown face id", {});
        covers.push_back({lo->second, hi->second});
    }
    return FacePoset(rank, std::move(faces), std::move(covers));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read " + path, {{"path", path}});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IoError", "cannot write " + path, {{"path", path}});
    out << content;
}

std::string fnv1a64_hex(const std::string& content) {
    uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace polymix
