#include "besselkit/precision.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace besselkit {

std::optional<Accumulation> parse_accumulation(std::string_view text) {
    if (text == "double") return Accumulation::standard;
    if (text == "extended") return Accumulation::extended;
    return std::nullopt;
}

Accumulation accumulation_from_environment() {
    const char* raw = std::getenv("BESSELKIT_PRECISION");
    if (raw == nullptr || *raw == '\0') return Accumulation::standard;
    if (auto mode = parse_accumulation(raw)) return *mode;
    throw std::invalid_argument("BESSELKIT_PRECISION must be 'double' or 'extended', got '" +
                                std::string(raw) + "'");
}

}  // namespace besselkit
