#include "offload/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace offload::presets {

Processor msp430() { return {"msp430", 16e6}; }
Processor a9() { return {"a9", 3.6e9}; }
Processor celeron() { return {"celeron", 6.43e9}; }
Processor core_i3() { return {"i3", 36.8e9}; }
Processor xeon() { return {"xeon", 136.2e9}; }

std::vector<Processor> all() {
    return {msp430(), a9(), celeron(), core_i3(), xeon()};
}

std::optional<Processor> find(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const Processor& proc : all()) {
        if (proc.name == lowered) {
            return proc;
        }
    }
    return std::nullopt;
}

}  // namespace offload::presets
