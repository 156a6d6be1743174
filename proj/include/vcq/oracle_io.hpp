#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "vcq/general_oracle.hpp"
#include "vcq/kconn_oracle.hpp"

namespace vcq {

using Oracle = std::variant<KConnOracle, GeneralOracle>;

inline constexpr std::uint32_t kOracleFormatVersion = 1;

enum class OracleMode : std::uint8_t { kKConn = 1, kGeneral = 2 };

// Versioned little-endian binary encoding; byte layout in docs/oracle_format.md.
// Equal oracles encode to identical bytes.
std::string serialize(const KConnOracle& oracle);
std::string serialize(const GeneralOracle& oracle);
std::string serialize(const Oracle& oracle);

// Throws FormatError on bad magic, unknown version, truncation, trailing bytes,
// or inconsistent tables.
Oracle deserialize(std::string_view bytes);

void save_oracle(const Oracle& oracle, const std::string& path);
Oracle load_oracle(const std::string& path);

}  // namespace vcq
