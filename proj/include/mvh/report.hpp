#pragma once

#include <string>
#include <vector>

namespace mvh {

struct VCase {
    std::string id;
    bool pass = false;
    std::string witness;  // failure rendering; may carry a note on pass

    bool operator==(const VCase&) const = default;
};

// Result of one verification suite.  Deterministic: cases appear in the
// order they were added, renderings carry no timestamps.
struct VerificationReport {
    std::string suite;
    std::vector<VCase> cases;

    void add(std::string id, bool pass, std::string witness = "");
    void merge(const VerificationReport& other);  // appends other's cases

    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }

    std::string text() const;       // human-readable, one line per case
    std::string to_json() const;    // {suite, cases:[{id,status,witness?}], summary}
    static VerificationReport from_json(const std::string& s);

    bool operator==(const VerificationReport&) const = default;
};

}  // namespace mvh
