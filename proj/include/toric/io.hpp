#pragma once

// Instance files, result documents and the command surface shared by the CLI
// and its tests.
//
// Instance grammar (one `key = value` per line, `#` starts a comment):
//
//   format_version = 1
//   dimension      = 2
//   rays           = [(1,0),(1,3)]
//   w              = (-1,-2)          # or: divisor = [3, 2]
//   p              = 2
//   e              = 1
//   a_generators   = [(2,1),(1,3)]    # optional, default unit ideal
//   t              = 1/2              # optional, default 0
//   N              = 3                # optional, default 3 n0
//   margin         = 1                # optional
//   pool_cap       = 20               # optional
//
// Exactly one of `w` and `divisor` must be present.

#include "toric/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

constexpr int kFormatVersion = 1;

struct InstanceConfig {
    int format_version = kFormatVersion;
    std::size_t dimension = 0;
    std::vector<LatticePoint> rays;
    std::optional<LatticePoint> w;
    std::optional<std::vector<Rational>> divisor;
    std::int64_t p = 0;
    std::int64_t e = 1;
    std::vector<LatticePoint> a_generators; // empty: unit ideal
    Rational t = 0;
    std::optional<std::int64_t> N;
    std::int64_t margin = 1;
    std::size_t pool_cap = kDefaultPoolCap;

    friend bool operator==(const InstanceConfig &, const InstanceConfig &) = default;
};

// Everything derived from a config.
struct Instance {
    InstanceConfig config;
    SemigroupPtr ambient;
    TripleData triple;
    std::int64_t N;

    std::int64_t margin() const { return config.margin; }
};

// Syntax errors are ParseError with "line k, field f: ..." messages; the
// mathematical validation of build_instance runs as well.
InstanceConfig parse_instance(std::string_view text);
std::string serialize_instance(const InstanceConfig &cfg);
Instance build_instance(const InstanceConfig &cfg);

// "0", "R" (or "1") and point lists such as "[(1,1),(1,2)]".
MonomialIdeal parse_ideal(SemigroupPtr amb, std::string_view text);

// x^i y^j z^k for d <= 3; "1" for the origin; empty for d > 3.
std::string monomial_string(const LatticePoint &u);

nlohmann::json point_json(const LatticePoint &u);
nlohmann::json ideal_json(const MonomialIdeal &i);
nlohmann::json instance_json(const InstanceConfig &cfg);

struct CommandOptions {
    std::optional<std::string> ideal;
    std::optional<std::int64_t> N;
    std::optional<std::int64_t> margin;
    std::string format = "doc";
    bool timing = false;
};

struct CommandResult {
    int exit_code = 0; // 0 ok, 1 not fixed / mismatch
    std::string output;
};

// cmd is one of enumerate, verify, non-lc, test-ideal, stable-image,
// cross-validate, plot. Throws Error on invalid requests.
CommandResult run_command(std::string_view cmd, const Instance &inst, const CommandOptions &opt);

// One panel per record; d = 2 only.
std::string plot_svg(const ShiftedNewton &sn, const std::vector<FixedIdealRecord> &records);

} // namespace toric
