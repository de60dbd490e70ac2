#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hochhom/scalar.hpp"

namespace hochhom {

/** Raised for malformed or out-of-range configurations (exit code 2). */
class ConfigError : public Error
{
  public:
    using Error::Error;
};

struct RunConfig
{
    int n = 1;
    int r = 0;
    ScalarModel model;
    std::optional<int> w_min;
    std::optional<int> w_max;
    std::optional<int> trunc;
    std::optional<int> bound;
    std::optional<std::string> suite;
    std::optional<std::string> format;

    bool operator==(const RunConfig&) const = default;
};

constexpr int max_desk_dim = 6;
inline constexpr const char* report_schema = "hochhom.report/1";

RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& config);
RunConfig load_config(const std::string& path);
/** Named presets: weyl:N, semiclassical:N:ORDER, semiclassical-rational:N:V, free:N:R, mixed-minimal:ORDER, mixed-minimal-rational:V. */
RunConfig preset_config(const std::string& name);
RunConfig config_from_spec(const AlgebraSpec& spec);
AlgebraSpec spec_from_config(const RunConfig& config);

/** Runs one command line (without the program name); returns the exit code. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace hochhom
