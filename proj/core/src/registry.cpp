#include "diffcyc/registry.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "diffcyc/error.hpp"

namespace diffcyc {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RegistryError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw RegistryError("cannot write " + tmp.string());
        out << bytes;
        if (!out) throw RegistryError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path manifest_path(const std::filesystem::path& dir) { return dir / "manifest.json"; }

nlohmann::ordered_json homology_json(const HomologyGroups& h) {
    nlohmann::ordered_json j;
    j["betti"] = h.betti;
    j["torsion"] = h.torsion;
    return j;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 computation failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return hex.str();
}

std::filesystem::path default_registry_path() {
    if (const char* env = std::getenv("DIFFCYC_REGISTRY"); env && *env) return env;
    return "registry";
}

std::filesystem::path registry_file(const std::filesystem::path& dir, int n) {
    char name[32];
    std::snprintf(name, sizeof name, "n%02d.jsonl", n);
    return dir / name;
}

std::vector<ManifestRow> manifest(const std::filesystem::path& dir) {
    std::vector<ManifestRow> rows;
    if (!std::filesystem::exists(manifest_path(dir))) return rows;
    try {
        const auto j = nlohmann::json::parse(read_file(manifest_path(dir)));
        for (const auto& e : j.at("entries")) {
            rows.push_back({e.at("n").get<int>(), e.at("complexes").get<std::size_t>(),
                            e.at("multiplier_classes").get<std::size_t>(), e.at("iso_classes").get<std::size_t>(),
                            e.at("file").get<std::string>(), e.at("sha256").get<std::string>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw RegistryError("malformed manifest in " + dir.string() + ": " + e.what());
    }
    return rows;
}

void store(const std::filesystem::path& dir, const EnumerationResult& result) {
    std::filesystem::create_directories(dir);
    std::string body;
    for (std::size_t i = 0; i < result.complexes.size(); ++i) {
        const CyclicComplex& c = result.complexes[i];
        const FacetComplex expanded = expand(c);
        nlohmann::ordered_json line;
        line["index"] = i;
        line["cycles"] = format(c);
        line["fvector"] = f_vector(expanded).counts;
        line["homology"] = homology_json(homology(expanded));
        body += line.dump() + '\n';
    }
    const auto file = registry_file(dir, result.n);
    write_atomically(file, body);

    auto rows = manifest(dir);
    std::erase_if(rows, [&](const ManifestRow& r) { return r.n == result.n; });
    rows.push_back({result.n, result.complexes.size(), result.multiplier_classes.size(), result.iso_classes.size(),
                    file.filename().string(), sha256_hex(body)});
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });

    nlohmann::ordered_json m;
    m["version"] = 1;
    m["entries"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json e;
        e["n"] = r.n;
        e["complexes"] = r.complexes;
        e["multiplier_classes"] = r.multiplier_classes;
        e["iso_classes"] = r.iso_classes;
        e["file"] = r.file;
        e["sha256"] = r.sha256;
        m["entries"].push_back(e);
    }
    write_atomically(manifest_path(dir), m.dump(2) + '\n');
}

bool has_registry(const std::filesystem::path& dir, int n) { return std::filesystem::exists(registry_file(dir, n)); }

std::vector<RegistryEntry> load(const std::filesystem::path& dir, int n) {
    const auto file = registry_file(dir, n);
    if (!std::filesystem::exists(file)) throw RegistryError("no registry data for n = " + std::to_string(n) + " in " + dir.string());
    const std::string body = read_file(file);
    for (const ManifestRow& r : manifest(dir)) {
        if (r.n == n && r.sha256 != sha256_hex(body)) throw RegistryError(file.string() + " does not match its manifest checksum");
    }

    std::vector<RegistryEntry> entries;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            RegistryEntry e{j.at("index").get<int>(), parse_complex(j.at("cycles").get<std::string>()), {}, {}};
            e.fvector.counts = j.at("fvector").get<std::vector<long long>>();
            e.homology.betti = j.at("homology").at("betti").get<std::vector<int>>();
            e.homology.torsion = j.at("homology").at("torsion").get<std::vector<std::vector<long long>>>();
            if (e.index != static_cast<int>(entries.size())) throw RegistryError("index out of sequence");
            if (e.complex.vertex_count() != n) throw RegistryError("complex on the wrong number of vertices");
            entries.push_back(std::move(e));
        } catch (const nlohmann::json::exception& e) {
            throw RegistryError(file.string() + " line " + std::to_string(entries.size() + 1) + ": " + e.what());
        } catch (const ParseError& e) {
            throw RegistryError(file.string() + " line " + std::to_string(entries.size() + 1) + ": " + e.what());
        }
    }
    return entries;
}

CyclicComplex registry(const std::filesystem::path& dir, int n, int index) {
    auto entries = load(dir, n);
    if (index < 0 || index >= static_cast<int>(entries.size())) {
        throw RegistryError("index " + std::to_string(index) + " out of range; n = " + std::to_string(n) + " has " +
                            std::to_string(entries.size()) + " complexes");
    }
    return std::move(entries[index].complex);
}

}  // namespace diffcyc
