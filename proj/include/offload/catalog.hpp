#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "offload/model.hpp"

namespace offload::presets {

// Published instructions-per-second ratings for a spread of device classes,
// from a low-end embedded MCU up to a server-class part.
Processor msp430();   // 16e6 IPS
Processor a9();       // 3.6e9 IPS
Processor celeron();  // 6.43e9 IPS
Processor core_i3();  // 36.8e9 IPS
Processor xeon();     // 136.2e9 IPS

std::vector<Processor> all();

// Case-insensitive lookup by preset name (msp430, a9, celeron, i3, xeon).
std::optional<Processor> find(std::string_view name);

}  // namespace offload::presets
