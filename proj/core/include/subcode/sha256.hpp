// Minimal SHA-256, enough to fingerprint certificates and group files.
#pragma once
#include <cstdint>
#include <string>
#include <string_view>

namespace subcode {

std::string sha256_hex(std::string_view data);

}  // namespace subcode
