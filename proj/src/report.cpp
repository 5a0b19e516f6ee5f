#include "mvh/report.hpp"

#include <json.hpp>

namespace mvh {

void VerificationReport::add(std::string id, bool pass, std::string witness) {
    cases.push_back({std::move(id), pass, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

int VerificationReport::passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
}

int VerificationReport::failed() const {
    return static_cast<int>(cases.size()) - passed();
}

std::string VerificationReport::text() const {
    std::string out = "suite " + suite + "\n";
    for (const auto& c : cases) {
        out += c.pass ? "  pass  " : "  FAIL  ";
        out += c.id;
        if (!c.witness.empty()) out += "\n        " + c.witness;
        out += "\n";
    }
    out += "  " + std::to_string(passed()) + "/" + std::to_string(cases.size()) +
           " passed\n";
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty()) jc["witness"] = c.witness;
        j["cases"].push_back(jc);
    }
    j["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
    return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& jc : j.at("cases")) {
        VCase c;
        c.id = jc.at("id").get<std::string>();
        c.pass = jc.at("status").get<std::string>() == "pass";
        if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
        r.cases.push_back(std::move(c));
    }
    return r;
}

}  // namespace mvh
