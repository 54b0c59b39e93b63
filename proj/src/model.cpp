#include "offload/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace offload {

namespace {

bool finite(double x) { return std::isfinite(x); }

void check_positive(Violations& out, const std::string& field, double value) {
    if (!finite(value)) {
        out.push_back({field, field + " must be finite"});
    } else if (!(value > 0.0)) {
        out.push_back({field, field + " must be > 0"});
    }
}

void check_non_negative(Violations& out, const std::string& field, double value) {
    if (!finite(value)) {
        out.push_back({field, field + " must be finite"});
    } else if (value < 0.0) {
        out.push_back({field, field + " must be >= 0"});
    }
}

void append_prefixed(Violations& out, const std::string& prefix, Violations nested) {
    for (Violation& v : nested) {
        out.push_back({prefix + "." + v.field, prefix + "." + v.message});
    }
}

}  // namespace

Violations validate(const Processor& proc) {
    Violations out;
    check_positive(out, "exec_rate", proc.exec_rate);
    return out;
}

Violations validate(const NetworkHop& hop) {
    Violations out;
    check_positive(out, "trans_rate", hop.trans_rate);
    check_non_negative(out, "queue_delay", hop.queue_delay);
    check_non_negative(out, "proc_delay", hop.proc_delay);
    check_non_negative(out, "length", hop.length);
    return out;
}

Violations validate(const NetworkPath& path) {
    Violations out;
    if (path.hops.empty()) {
        out.push_back({"hops", "hops must contain at least one hop"});
        return out;
    }
    for (std::size_t i = 0; i < path.hops.size(); ++i) {
        append_prefixed(out, "hops[" + std::to_string(i) + "]", validate(path.hops[i]));
    }
    return out;
}

Violations validate(const ComputeJob& job) {
    Violations out;
    check_positive(out, "instructions", job.instructions);
    check_non_negative(out, "input_bits", job.input_bits);
    check_non_negative(out, "output_bits", job.output_bits);
    return out;
}

Violations validate(const PacketTrain& train) {
    Violations out;
    check_positive(out, "full_packet_bits", train.full_packet_bits);
    if (train.full_packet_count < 0) {
        out.push_back({"full_packet_count", "full_packet_count must be >= 0"});
    }
    check_positive(out, "last_packet_bits", train.last_packet_bits);
    if (finite(train.last_packet_bits) && finite(train.full_packet_bits) &&
        train.last_packet_bits > train.full_packet_bits) {
        out.push_back({"last_packet_bits",
                       "last_packet_bits must be <= full_packet_bits"});
    }
    return out;
}

Violations validate(const CloudResource& resource) {
    Violations out;
    append_prefixed(out, "processor", validate(resource.processor));
    append_prefixed(out, "path", validate(resource.path));
    if (resource.tier_index < 1) {
        out.push_back({"tier_index", "tier_index must be >= 1"});
    }
    return out;
}

Violations validate(const OffloadDecision& decision) {
    Violations out;
    check_non_negative(out, "local_time", decision.local_time);
    check_non_negative(out, "remote_time", decision.remote_time);
    if (!finite(decision.margin)) {
        out.push_back({"margin", "margin must be finite"});
    } else {
        if (decision.margin != decision.local_time - decision.remote_time) {
            out.push_back({"margin", "margin must equal local_time - remote_time"});
        }
        if (decision.favorable != (decision.margin > 0.0)) {
            out.push_back({"favorable", "favorable must hold exactly when margin > 0"});
        }
    }
    return out;
}

std::string describe(const Violations& violations) {
    std::string text;
    for (const Violation& v : violations) {
        if (!text.empty()) {
            text += "; ";
        }
        text += v.message;
    }
    return text;
}

double bottleneck_rate(const NetworkPath& path) {
    require_valid(path);
    double rate = std::numeric_limits<double>::infinity();
    for (const NetworkHop& hop : path.hops) {
        rate = std::min(rate, hop.trans_rate);
    }
    return rate;
}

double total_queue_delay(const NetworkPath& path) {
    require_valid(path);
    double total = 0.0;
    for (const NetworkHop& hop : path.hops) {
        total += hop.queue_delay;
    }
    return total;
}

}  // namespace offload
