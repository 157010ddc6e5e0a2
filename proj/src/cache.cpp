#include "rgc/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace rgc {

namespace {

constexpr const char* kFormatVersion = "rgc-basis-1";

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::optional<std::string> cache_dir() {
    const char* dir = std::getenv("RGC_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::string(dir);
}

std::string cache_key(const Selector& sel) {
    return hex64(fnv1a64(std::string(kFormatVersion) + "|" + sel.str()));
}

SectorBasis cached_basis(const Selector& sel) {
    auto dir = cache_dir();
    if (!dir) return enumerate_basis(sel);

    namespace fs = std::filesystem;
    fs::path file = fs::path(*dir) / (cache_key(sel) + ".json");

    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.at("version").get<std::string>() == kFormatVersion &&
                j.at("selector").get<std::string>() == sel.str()) {
                SectorBasis basis;
                basis.selector = sel;
                for (const auto& item : j.at("classes")) {
                    RibbonGraph g(item.at("sigma").get<std::vector<int>>(),
                                  item.at("iota").get<std::vector<int>>());
                    OrientedClass c(g, sel.d);
                    if (c.is_zero() || !c.graph().same_tables(g))
                        throw error(errc::invalid_graph, "stale cache entry");
                    basis.classes.push_back(std::move(c));
                }
                return basis;
            }
        } catch (...) {
            // fall through to recompute
        }
    }

    SectorBasis basis = enumerate_basis(sel);
    std::error_code ec;
    fs::create_directories(*dir, ec);
    nlohmann::ordered_json j;
    j["version"] = kFormatVersion;
    j["selector"] = sel.str();
    j["classes"] = nlohmann::json::array();
    for (const auto& c : basis.classes) {
        nlohmann::ordered_json item;
        item["sigma"] = c.graph().sigma();
        item["iota"] = c.graph().iota();
        j["classes"].push_back(item);
    }
    std::ofstream out(file);
    out << j.dump();
    return basis;
}

} // namespace rgc
