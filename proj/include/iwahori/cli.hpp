#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iwahori::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kDomainError = 3,
  kIoError = 4,
};

struct CliConfig {
  std::string command;             // verify, eval or table
  std::vector<std::string> types;  // empty: every admissible type up to max_rank
  int max_rank = 3;
  std::string character;  // empty: all characters of the type
  std::string lambda;     // "1,0"; empty means zero
  std::vector<std::string> formulas;
  std::string word;  // iwahori-image only, 1-based, e.g. "1,2,1"
  int box = 2;
  std::size_t box_cap = 200;
  std::vector<std::string> suites;  // empty: all
  std::string output = "text";      // json, csv or text
  int jobs = 0;
  std::string mutate = "none";
  bool keep_going = false;
  int height = 3;
  std::string out_dir;  // empty: $IWAHORI_OUTPUT_DIR, then "."
};

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.  Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Writes to a temporary sibling and renames it into place.  Throws
/// std::filesystem::filesystem_error or std::ios_base::failure.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace iwahori::cli
