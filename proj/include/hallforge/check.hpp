#pragma once

#include <string>
#include <vector>

namespace hallforge {

enum class CheckStatus { pass, fail, skipped, undecided };

inline std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    case CheckStatus::undecided:
        return "undecided";
    }
    return "undecided";
}

/// Result of one identity check. `support` lists up to ten offending terms on failure.
struct CheckOutcome {
    CheckStatus status = CheckStatus::undecided;
    std::string details;
    std::vector<std::string> support;

    bool passed() const { return status == CheckStatus::pass; }

    static CheckOutcome pass(std::string details = {}) { return {CheckStatus::pass, std::move(details), {}}; }
    static CheckOutcome fail(std::string details, std::vector<std::string> support = {})
    {
        return {CheckStatus::fail, std::move(details), std::move(support)};
    }
    static CheckOutcome skipped(std::string why) { return {CheckStatus::skipped, std::move(why), {}}; }
    static CheckOutcome from(bool ok, std::string details, std::vector<std::string> support = {})
    {
        return ok ? pass(std::move(details)) : fail(std::move(details), std::move(support));
    }
};

/// Combines sub-results: any failure fails, otherwise any skip skips.
inline CheckOutcome combine(const std::vector<std::pair<std::string, CheckOutcome>>& parts)
{
    CheckOutcome out = CheckOutcome::pass();
    std::string details;
    for (const auto& [name, r] : parts) {
        if (!details.empty())
            details += "; ";
        details += name + ": " + to_string(r.status);
        if (!r.details.empty())
            details += " (" + r.details + ")";
        if (r.status == CheckStatus::fail) {
            out.status = CheckStatus::fail;
            for (const auto& s : r.support)
                if (out.support.size() < 10)
                    out.support.push_back(name + ": " + s);
        } else if (r.status != CheckStatus::pass && out.status == CheckStatus::pass) {
            out.status = r.status;
        }
    }
    out.details = details;
    return out;
}

} // namespace hallforge
