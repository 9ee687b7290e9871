#ifndef SQCC_CLI_HPP
#define SQCC_CLI_HPP

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqcc/serialize.hpp"

namespace sqcc {

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;  // verification failure, UNSAT, or failed --check
inline constexpr int kBadInput = 2;
inline constexpr int kIo = 3;
inline constexpr int kBudget = 4;
}  // namespace exit_code

/// Envelope printed by verify, certify and solve-list. elapsed never reaches
/// stdout; it is logged to the error stream so payloads stay byte-stable.
struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::string outcome;  // "pass", "fail" or "error"
  Json payload = Json::object();
  std::chrono::milliseconds elapsed{0};
};

Json to_json(const RunReport& report);

/// Subcommands: construct, verify, certify, solve-list, mols, vetrik.
/// Log verbosity comes from SQCC_LOG (quiet, info, debug; default info).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqcc

#endif  // SQCC_CLI_HPP
