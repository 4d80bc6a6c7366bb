#include "ppa/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace ppa {

namespace {

nlohmann::json elem_json(const Elem& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [id, c] : x) out.push_back({id, rat_str(c)});
    return out;
}

Elem elem_parse(const nlohmann::json& j) {
    Elem x;
    for (const auto& t : j) x.emplace_back(t.at(0).get<int>(), rat_parse(t.at(1).get<std::string>()));
    return x;
}

} // namespace

nlohmann::json CacheIO::to_json(const Algebra& A) {
    nlohmann::json j;
    j["version"] = kCacheVersion;
    j["quiver"] = A.quiver().name();
    nlohmann::json monos = nlohmann::json::array();
    for (const Mono& m : A.monos_) {
        nlohmann::json arrows = nlohmann::json::array();
        for (uint8_t a : m.arrows) arrows.push_back(int(a));
        monos.push_back({m.src, m.dst, m.deg, arrows});
    }
    j["monos"] = std::move(monos);
    nlohmann::json mul = nlohmann::json::array();
    for (const auto& row : A.mul_arrow_) {
        nlohmann::json r = nlohmann::json::array();
        for (const Elem& x : row) r.push_back(elem_json(x));
        mul.push_back(std::move(r));
    }
    j["mul_arrow"] = std::move(mul);
    nlohmann::json tr = nlohmann::json::array();
    for (const Rat& t : A.trace_) tr.push_back(rat_str(t));
    j["trace"] = std::move(tr);
    j["top"] = A.top_of_vertex_;
    nlohmann::json duals = nlohmann::json::array();
    for (const Elem& x : A.dual_) duals.push_back(elem_json(x));
    j["dual"] = std::move(duals);
    return j;
}

Algebra CacheIO::from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != kCacheVersion)
        throw std::runtime_error("cache version mismatch");
    DynkinQuiver q = parse_quiver_name(j.at("quiver").get<std::string>());
    Algebra A;
    A.q_ = q;
    A.rd_ = root_data(q);
    A.hilbert_ = hilbert_closed(A.rd_);
    for (const auto& m : j.at("monos")) {
        Mono mono;
        mono.src = m.at(0).get<int>();
        mono.dst = m.at(1).get<int>();
        mono.deg = m.at(2).get<int>();
        for (const auto& a : m.at(3)) mono.arrows.push_back(uint8_t(a.get<int>()));
        A.monos_.push_back(std::move(mono));
    }
    for (const auto& row : j.at("mul_arrow")) {
        std::vector<Elem> r;
        for (const auto& x : row) r.push_back(elem_parse(x));
        A.mul_arrow_.push_back(std::move(r));
    }
    for (const auto& t : j.at("trace")) A.trace_.push_back(rat_parse(t.get<std::string>()));
    A.top_of_vertex_ = j.at("top").get<std::vector<int>>();
    for (const auto& x : j.at("dual")) A.dual_.push_back(elem_parse(x));
    A.finish_indexes();
    A.check_hilbert();
    return A;
}

std::string cache_path(const std::string& dir, const DynkinQuiver& q) {
    return dir + "/" + q.name() + "-v" + std::to_string(kCacheVersion) + ".json";
}

bool save_algebra_cache(const Algebra& A, const std::string& dir) {
    try {
        std::filesystem::create_directories(dir);
        std::string path = cache_path(dir, A.quiver());
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return false;
            out << CacheIO::to_json(A);
        }
        std::filesystem::rename(tmp, path);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<Algebra> load_algebra_cache(const DynkinQuiver& q, const std::string& dir) {
    try {
        std::ifstream in(cache_path(dir, q));
        if (!in) return std::nullopt;
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("quiver").get<std::string>() != q.name())
            throw std::runtime_error("cache quiver mismatch");
        return CacheIO::from_json(j);
    } catch (const std::exception&) {
        return std::nullopt; // any corruption falls back to a fresh build
    }
}

Algebra load_algebra(const DynkinQuiver& q, const std::string& dir, bool no_cache) {
    if (!no_cache && !dir.empty()) {
        auto cached = load_algebra_cache(q, dir);
        if (cached) return std::move(*cached);
    }
    Algebra A(q);
    if (!no_cache && !dir.empty()) save_algebra_cache(A, dir);
    return A;
}

} // namespace ppa
