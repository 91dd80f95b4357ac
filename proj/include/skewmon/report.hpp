#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewmon/mat.hpp"

namespace skewmon {

enum class CheckStatus { pass, fail, not_verified, structural_error };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_verified: return "not-verified";
    default: return "structural-error";
    }
}

struct Witness {
    Mat lhs, rhs;
};

// One verified equation. `axiom` is the stable anchor id of the law being
// checked (e.g. "SMC1", "opmon4", "H0"); `id` additionally names the tuple.
struct CheckRecord {
    std::string id;
    std::string axiom;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::optional<Witness> witness;
};

class Report {
public:
    void add(CheckRecord rec) { records_.push_back(std::move(rec)); }

    void add_eq(const std::string& id, const std::string& axiom, const Mat& lhs, const Mat& rhs,
                const std::string& detail = "")
    {
        CheckRecord rec{id, axiom, CheckStatus::pass, detail, std::nullopt};
        if (lhs != rhs) {
            rec.status = CheckStatus::fail;
            rec.witness = Witness{lhs, rhs};
        }
        records_.push_back(std::move(rec));
    }

    void add_pass(const std::string& id, const std::string& axiom, const std::string& detail = "")
    {
        records_.push_back({id, axiom, CheckStatus::pass, detail, std::nullopt});
    }

    void add_fail(const std::string& id, const std::string& axiom, const std::string& detail = "")
    {
        records_.push_back({id, axiom, CheckStatus::fail, detail, std::nullopt});
    }

    Report& merge(Report other)
    {
        for (auto& r : other.records_)
            records_.push_back(std::move(r));
        return *this;
    }

    bool ok() const
    {
        for (const auto& r : records_)
            if (r.status != CheckStatus::pass)
                return false;
        return true;
    }

    std::size_t fail_count() const
    {
        std::size_t n = 0;
        for (const auto& r : records_)
            if (r.status != CheckStatus::pass)
                ++n;
        return n;
    }

    const std::vector<CheckRecord>& records() const { return records_; }

    std::vector<std::string> failing_axioms() const
    {
        std::vector<std::string> out;
        for (const auto& r : records_)
            if (r.status != CheckStatus::pass)
                out.push_back(r.axiom);
        return out;
    }

    bool has_failing_axiom(const std::string& axiom) const
    {
        for (const auto& r : records_)
            if (r.status != CheckStatus::pass && r.axiom == axiom)
                return true;
        return false;
    }

private:
    std::vector<CheckRecord> records_;
};

} // namespace skewmon
