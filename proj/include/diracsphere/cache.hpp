#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "diracsphere/basis.hpp"

namespace diracsphere {

/// Raised for unreadable, unwritable, or corrupted cache files.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cache document for one (n, m, space) basis. Format 1:
/// {"format":1, "n":.., "m":.., "space":"H|P|Q", "orthonormal":..,
///  "quad_degree":.., "elements":[{"terms":[{"exps":[..], "mv":[2^N reals]}]}],
///  "checksum":"<16 hex digits>"}
/// Q sets serialize their P pre-images; the x-multiplied carriers are
/// rebuilt on load. The checksum is FNV-1a 64 over the canonical dump of
/// everything except the checksum itself.
nlohmann::json basis_to_json(const BasisSet& basis);
BasisSet basis_from_json(const nlohmann::json& doc);

std::string cache_file_name(int n, int m, SpaceTag space);

/// Writes the document; throws CacheError on I/O failure.
void save_basis(const std::filesystem::path& dir, const BasisSet& basis);

/// Missing file -> nullopt. Unparseable content, checksum mismatch, or
/// metadata disagreeing with the requested key -> CacheError naming the file.
std::optional<BasisSet> load_basis(const std::filesystem::path& dir, int n, int m,
                                   SpaceTag space);

std::uint64_t fnv1a64(const std::string& data);

} // namespace diracsphere
