#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace qyang {

using ojson = nlohmann::ordered_json;

/// One failing instance of a verification suite: the index tuple that
/// failed plus the nonzero difference (or other diagnostic payload).
struct Failure {
    std::vector<long long> tuple;
    ojson delta;
    std::string note;
};

/// Result of a verification suite. Failures are content, not errors: a
/// report with failures is still a well-formed result.
struct Report {
    std::string suite;
    ojson params = ojson::object();
    long long checked = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    ojson to_json() const {
        ojson j;
        j["suite"] = suite;
        j["params"] = params;
        j["checked"] = checked;
        ojson arr = ojson::array();
        for (const Failure& f : failures) {
            ojson e;
            e["tuple"] = f.tuple;
            if (!f.note.empty()) e["note"] = f.note;
            e["delta"] = f.delta;
            arr.push_back(std::move(e));
        }
        j["failures"] = std::move(arr);
        return j;
    }

    std::string to_text() const {
        std::string s = "suite " + suite + ": checked " + std::to_string(checked) +
                        ", failures " + std::to_string(failures.size());
        for (size_t p = 0; p < failures.size() && p < 10; ++p) {
            s += "\n  tuple [";
            for (size_t q = 0; q < failures[p].tuple.size(); ++q) {
                if (q) s += ",";
                s += std::to_string(failures[p].tuple[q]);
            }
            s += "]";
            if (!failures[p].note.empty()) s += " " + failures[p].note;
        }
        if (failures.size() > 10) s += "\n  ...";
        return s;
    }
};

}  // namespace qyang
