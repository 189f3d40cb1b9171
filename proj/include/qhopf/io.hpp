#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/extensions.hpp"
#include "qhopf/presentation.hpp"

namespace qhopf {

/// Malformed input, located by source name and 1-based line (0 when unknown).
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string message_;
};

struct SubalgebraBlock {
  std::vector<Element> basis;  // in the ambient coordinates
  QuasiHopfPresentation presentation;
};

/// One presentation file. `embedding` is set for files describing K on its
/// own (passed with --sub); `subalgebra` for files carrying a pair inline.
struct PresentationFile {
  QuasiHopfPresentation presentation;
  std::optional<std::vector<Element>> embedding;
  std::optional<SubalgebraBlock> subalgebra;
};

/// Parses the JSON format. With `field` set, scalars are read in that field
/// instead of the file's tag; a prime-field file cannot be moved to another field.
PresentationFile parse_presentation_file(const std::string& text, const std::string& source = "<input>",
                                         const std::optional<FieldSpec>& field = std::nullopt);

/// Canonical text: fixed key order, sparse entries in row-major order, one entry per line.
std::string serialize_presentation_file(const PresentationFile& file);
std::string serialize_presentation(const QuasiHopfPresentation& p);

PresentationFile load_presentation_file(const std::string& path, const std::optional<FieldSpec>& field = std::nullopt);
void save_presentation_file(const std::string& path, const PresentationFile& file);

/// The inline pair of `file`, or H from `file` and K from `sub` (which must carry an embedding).
SubalgebraPair pair_from_files(const PresentationFile& file, const std::optional<PresentationFile>& sub);

PresentationFile file_for_pair(const SubalgebraPair& pair);

}  // namespace qhopf
