#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gnum/json_io.hpp"

namespace gnum {

struct PropertyCheck {
    std::string name;
    long checked = 0;
    long failed = 0;
    Json counterexample;  // first failure

    void record(bool ok, const std::function<Json()>& detail);
    bool pass() const { return failed == 0 && checked > 0; }
};

struct SuiteReport {
    std::string name;
    std::string statement;
    std::vector<PropertyCheck> properties;
    Json tables = Json::object();

    PropertyCheck& property(const std::string& name);
    bool pass() const;
    Json to_json() const;
};

struct SuiteInfo {
    std::string name;
    std::string statement;
};

const std::vector<SuiteInfo>& suite_list();
// Throws Error("unknown-suite").
SuiteReport theorem_suite(const std::string& name);

}  // namespace gnum
