#ifndef SUPCLOSE_COMMANDS_HH
#define SUPCLOSE_COMMANDS_HH

#include "supclose/session.hh"

#include <json.hpp>

#include <string>
#include <vector>

// Command dispatch: every CLI subcommand maps to a kernel operation on
// objects named in a session.  run_command returns only the result
// payload; make_report wraps it in the reporting envelope
// {args, command, engine, result, timing_ms}.  Serialization is
// deterministic apart from timing_ms: objects are emitted with sorted
// keys and every generator list is canonically ordered.

namespace supclose {

nlohmann::json run_command(const Session& session, const std::string& command,
                           const std::vector<std::string>& args);

nlohmann::json make_report(const std::string& command,
                           const std::vector<std::string>& args,
                           nlohmann::json result, double timing_ms);

// Names accepted by run_command, ascending.
const std::vector<std::string>& command_names();

} // namespace supclose

#endif
