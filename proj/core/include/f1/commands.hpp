#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "f1/dsl.hpp"

namespace f1 {

// Exit codes shared by the command layer and the CLI.
enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kSemanticError = 3,
  kVerificationFailure = 4,
  kResourceCap = 5,
};

int cmd_zeta(const SchemeFile& f, const std::string& scheme, std::ostream& out, bool json);
int cmd_count(const SchemeFile& f, const std::string& scheme, const std::vector<long long>& qs,
              std::ostream& out, bool json);
int cmd_spec(const SchemeFile& f, const std::string& monoid, std::ostream& out, bool json);
int cmd_k(const SchemeFile& f, const std::string& monoid, std::ostream& out, bool json,
          int k0_cap);
int cmd_verify(const SchemeFile& f, const std::string& scheme, long long qmax, std::ostream& out,
               bool json);

// Maps an exception in command execution to an exit code and prints the
// message on the stream.
int run_command(std::ostream& err, const std::function<int()>& body);

}  // namespace f1
