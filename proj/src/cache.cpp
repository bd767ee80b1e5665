#include "diracsphere/cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diracsphere {

namespace {

nlohmann::json polynomial_to_json(const MVPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        term["exps"] = e;
        term["mv"] = std::vector<double>(c.coeffs().begin(), c.coeffs().end());
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

MVPolynomial polynomial_from_json(const nlohmann::json& doc, int ambient) {
    MVPolynomial p(ambient);
    for (const auto& term : doc.at("terms")) {
        const auto exps = term.at("exps").get<std::vector<int>>();
        const auto mv = term.at("mv").get<std::vector<double>>();
        if (static_cast<int>(exps.size()) != ambient ||
            mv.size() != (std::size_t{1} << ambient))
            throw CacheError("cache: term with wrong ambient dimension");
        Multivector c(ambient);
        for (std::size_t blade = 0; blade < mv.size(); ++blade)
            c[static_cast<std::uint32_t>(blade)] = mv[blade];
        p.add_term(exps, c);
    }
    return p;
}

std::string checksum_payload(const nlohmann::json& doc) {
    nlohmann::json payload = doc;
    payload.erase("checksum");
    return payload.dump();
}

std::string checksum_hex(const nlohmann::json& doc) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(checksum_payload(doc));
    return out.str();
}

} // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

nlohmann::json basis_to_json(const BasisSet& basis) {
    nlohmann::json doc;
    doc["format"] = 1;
    doc["n"] = basis.n;
    doc["m"] = basis.m;
    doc["space"] = to_string(basis.space);
    doc["orthonormal"] = basis.orthonormal;
    doc["quad_degree"] = basis.quad_degree;
    nlohmann::json elements = nlohmann::json::array();
    const auto& stored =
        basis.space == SpaceTag::Q ? basis.preimages : basis.elements;
    for (const auto& p : stored) elements.push_back(polynomial_to_json(p));
    doc["elements"] = std::move(elements);
    doc["checksum"] = checksum_hex(doc);
    return doc;
}

BasisSet basis_from_json(const nlohmann::json& doc) {
    if (!doc.contains("format") || doc.at("format").get<int>() != 1)
        throw CacheError("cache: unsupported format");
    const std::string stored_checksum = doc.at("checksum").get<std::string>();
    if (stored_checksum != checksum_hex(doc))
        throw CacheError("cache: checksum mismatch");

    BasisSet basis;
    basis.n = doc.at("n").get<int>();
    basis.m = doc.at("m").get<int>();
    basis.space = space_tag_from_string(doc.at("space").get<std::string>());
    basis.orthonormal = doc.at("orthonormal").get<bool>();
    basis.quad_degree = doc.at("quad_degree").get<int>();
    const int ambient = basis.n + 1;
    for (const auto& element : doc.at("elements")) {
        MVPolynomial p = polynomial_from_json(element, ambient);
        if (basis.space == SpaceTag::Q) {
            basis.preimages.push_back(p);
            basis.elements.push_back(p.vector_multiplied());
        } else {
            basis.elements.push_back(std::move(p));
        }
    }
    return basis;
}

std::string cache_file_name(int n, int m, SpaceTag space) {
    std::ostringstream name;
    name << "basis_n" << n << "_m" << m << "_" << to_string(space) << ".json";
    return name.str();
}

void save_basis(const std::filesystem::path& dir, const BasisSet& basis) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / cache_file_name(basis.n, basis.m, basis.space);
    std::ofstream out(path);
    if (!out) throw CacheError("cache: cannot write " + path.string());
    out << basis_to_json(basis).dump(1) << "\n";
    if (!out) throw CacheError("cache: write failed for " + path.string());
}

std::optional<BasisSet> load_basis(const std::filesystem::path& dir, int n, int m,
                                   SpaceTag space) {
    const auto path = dir / cache_file_name(n, m, space);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        throw CacheError("cache: integrity error in " + path.string());
    }
    BasisSet basis;
    try {
        basis = basis_from_json(doc);
    } catch (const CacheError&) {
        throw CacheError("cache: integrity error in " + path.string());
    } catch (const nlohmann::json::exception&) {
        throw CacheError("cache: integrity error in " + path.string());
    }
    if (basis.n != n || basis.m != m || basis.space != space)
        throw CacheError("cache: metadata mismatch in " + path.string());
    return basis;
}

} // namespace diracsphere
