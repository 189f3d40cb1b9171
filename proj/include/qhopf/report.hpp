#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhopf/extensions.hpp"

namespace qhopf {

enum class Command { Check, Integrals, Frobenius, Radford, Separability, Extension, Report };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);
const std::vector<std::string>& command_names();

/// Checks and computed objects of one command run. `doc` is the machine report,
/// `text` the human-readable rendering; both depend only on the input.
struct CommandReport {
  nlohmann::json doc;
  std::string text;
  bool ok = true;
};

/// Runs one command. Extension needs `pair`; Report includes it when given.
/// Exceptions raised by a section are recorded as a failed "<section>.error" law.
CommandReport run_command(Command c, const QuasiHopfPresentation& p, const std::optional<SubalgebraPair>& pair = {});

nlohmann::json to_json(const Element& v);
nlohmann::json to_json(const Functional& f);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Tensor& t);
nlohmann::json to_json(const VerificationReport& rep);

/// "1/2 g + x" using the basis labels.
std::string pretty(const Element& v, const std::vector<std::string>& labels);

}  // namespace qhopf
