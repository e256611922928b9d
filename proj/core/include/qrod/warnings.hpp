#pragma once

#include <string>
#include <vector>

namespace qrod {

/// Collects non-fatal diagnostics (e.g. sigma above the narrow-packet
/// threshold, or a propagator time in the marginal-validity band).
/// Operations accept an optional pointer; pass nullptr to ignore.
class WarningLog {
public:
    void add(std::string message) { messages_.push_back(std::move(message)); }

    const std::vector<std::string>& messages() const { return messages_; }
    bool empty() const { return messages_.empty(); }
    std::size_t size() const { return messages_.size(); }

private:
    std::vector<std::string> messages_;
};

inline void warn(WarningLog* log, std::string message) {
    if (log != nullptr) log->add(std::move(message));
}

} // namespace qrod
