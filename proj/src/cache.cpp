#include "weylrec/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weylrec/json_io.hpp"

namespace weylrec {

namespace fs = std::filesystem;

namespace {

constexpr int kFormatVersion = 1;

std::string payload_string(const QWhittakerTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (auto& [xi, entry] : t.entries) {
        nlohmann::json e;
        e["xi"] = to_json(xi);
        e["poly"] = to_json(entry);
        e["norm"] = to_json(t.norms.at(xi));
        entries.push_back(std::move(e));
    }
    nlohmann::json j{{"format", "weylrec-qwtable"},
                     {"version", kFormatVersion},
                     {"rank", t.rank},
                     {"max_size", t.max_size},
                     {"q_zero", t.q_zero},
                     {"entries", std::move(entries)}};
    return j.dump();
}

std::string file_prefix(int rank, bool q_zero) {
    std::ostringstream os;
    os << "weylrec-qwtable-v" << kFormatVersion << "-r" << rank << (q_zero ? "-q0" : "-qq") << "-s";
    return os.str();
}

}  // namespace

std::string cache_dir_from_env() {
    const char* dir = std::getenv("WEYLREC_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::optional<QWhittakerTable> load_cached_table(const std::string& dir, int rank, int min_size,
                                                 bool q_zero) {
    if (dir.empty() || !fs::is_directory(dir)) return std::nullopt;
    std::string prefix = file_prefix(rank, q_zero);
    int best_size = -1;
    fs::path best_path;
    for (auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.rfind(prefix, 0) != 0) continue;
        size_t pos = prefix.size();
        size_t dash = name.find('-', pos);
        if (dash == std::string::npos) continue;
        int size = 0;
        try {
            size = std::stoi(name.substr(pos, dash - pos));
        } catch (...) {
            continue;
        }
        if (size < min_size) continue;
        if (best_size < 0 || size < best_size) {
            best_size = size;
            best_path = entry.path();
        }
    }
    if (best_size < 0) return std::nullopt;
    std::ifstream in(best_path);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    std::string data = buf.str();
    // the filename carries the payload hash: ...-s{size}-{hex}.json
    std::string name = best_path.filename().string();
    size_t hpos = name.rfind('-');
    size_t dot = name.rfind(".json");
    if (hpos == std::string::npos || dot == std::string::npos || hpos + 1 >= dot) return std::nullopt;
    std::string want = name.substr(hpos + 1, dot - hpos - 1);
    std::ostringstream have;
    have << std::hex << fnv1a64(data);
    if (have.str() != want) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(data);
        if (j.at("format") != "weylrec-qwtable" || j.at("version") != kFormatVersion) return std::nullopt;
        QWhittakerTable t;
        t.rank = j.at("rank").get<int>();
        t.max_size = j.at("max_size").get<int>();
        t.q_zero = j.at("q_zero").get<bool>();
        if (t.rank != rank || t.q_zero != q_zero || t.max_size < min_size) return std::nullopt;
        for (auto& e : j.at("entries")) {
            Partition xi = partition_from_json(e.at("xi"));
            t.entries.emplace(xi, symfunc_ratfunc_from_json(e.at("poly")));
            t.norms.emplace(xi, ratfunc_from_json(e.at("norm")));
        }
        return t;
    } catch (...) {
        return std::nullopt;
    }
}

void save_cached_table(const std::string& dir, const QWhittakerTable& table) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::string data = payload_string(table);
    std::ostringstream name;
    name << file_prefix(table.rank, table.q_zero) << table.max_size << "-" << std::hex
         << fnv1a64(data) << ".json";
    fs::path path = fs::path(dir) / name.str();
    if (fs::exists(path)) return;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << data;
    }
    fs::rename(tmp, path, ec);
}

}  // namespace weylrec
