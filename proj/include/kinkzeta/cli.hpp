#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kinkzeta/models.hpp"
#include "kinkzeta/resolvent.hpp"

namespace kinkzeta::cli {

enum ExitCode { ok = 0, bad_input = 2, disagreement = 3, numerical_failure = 4 };

enum class Format { csv, json };

struct RunConfig {
    std::string subcommand;

    // model
    std::string family = "gl";
    double m = 1, g = 1, w = 1;
    std::optional<double> k, W;
    bool kink = false, antikink = false;
    std::optional<int> constant;
    double x0 = 0;
    bool first_integral = false;

    // resolvent case given directly
    std::optional<std::string> case_tag;
    double b = 1;

    int d = 1;
    double hbar = 1;
    std::optional<double> nu;

    std::vector<double> x_grid, s_grid, t_grid;
    double m_min = 0.2, m_max = 3.0, m_step = 0.1;
    double x_min = 0, x_max = 0;
    int x_n = 201;
    bool x_range_given = false;

    // oracle
    bool lattice = false;  // heattrace: add the lattice column
    std::string what = "edges";
    int lattice_n = 2000;
    int count = 0;

    Format format = Format::csv;
    std::string output;  // empty: stdout
    bool qucor2_convention = false;
    bool per_length = false;
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::map<std::string, std::string> meta;
};

// shortest decimal that round-trips
std::string format_number(double v);
void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

// full front end: parses argv, runs, writes, returns the process exit code
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// true when two values differ by more than tol
bool methods_disagree(const std::vector<std::complex<double>>& values, double tol = 1e-5);

// pieces exposed for tests
models::ClassicalSolution solution_from(const RunConfig& cfg);
resolvent::CaseBinding case_from(const RunConfig& cfg);

struct CommandResult {
    Table table;
    int code = ok;
};
CommandResult cmd_solution(const RunConfig& cfg);
CommandResult cmd_energy(const RunConfig& cfg);
CommandResult cmd_resolvent(const RunConfig& cfg);
CommandResult cmd_heattrace(const RunConfig& cfg);
CommandResult cmd_zeta(const RunConfig& cfg);
CommandResult cmd_correction(const RunConfig& cfg);
CommandResult cmd_figure_z(const RunConfig& cfg);
CommandResult cmd_oracle(const RunConfig& cfg);

}  // namespace kinkzeta::cli
