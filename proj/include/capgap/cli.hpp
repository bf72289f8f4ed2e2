#ifndef CAPGAP_CLI_HPP
#define CAPGAP_CLI_HPP

#include <string>
#include <string_view>
#include <vector>

#include "capgap/criteria.hpp"
#include "capgap/screening.hpp"

namespace capgap {

/// Exit codes: 0 success, 1 a verified statement failed, 2 usage or input error.
struct CommandOutcome
{
  int exit_code = 0;
  std::string output; // for standard output
  std::string error;  // for standard error
};

/// Runs one command; `args` excludes the program name.
CommandOutcome run(std::vector<std::string> const &args);

enum class OutputMode { text, json };

/// Columns G, HS, name, H, name; JSON records {g_id, g_hs, g_name, h_id, h_name}.
std::string render_table(std::vector<ScanRow> const &rows, OutputMode mode);
std::vector<ScanRow> parse_table_json(std::string_view text);

std::string render_screening(std::vector<ScreeningRecord> const &records, OutputMode mode);

} // namespace capgap

#endif // CAPGAP_CLI_HPP
