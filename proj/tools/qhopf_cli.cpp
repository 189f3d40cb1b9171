#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qhopf/io.hpp"
#include "qhopf/report.hpp"

namespace {

constexpr int kInputError = 2;

int input_error(const qhopf::InputError& e) {
  std::cerr << e.source();
  if (e.line() > 0) std::cerr << ":" << e.line();
  std::cerr << ": error: " << e.message() << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify quasi-Hopf algebra presentations and report integrals, Frobenius structure, Radford formulas, "
               "separability and Frobenius extensions."};
  app.name("qhopf");
  std::string command;
  std::string file;
  std::string sub;
  std::string field;
  std::string json_out;
  bool quiet = false;
  app.add_option("command", command, "check | integrals | frobenius | radford | separability | extension | report")
      ->required()
      ->check(CLI::IsMember(qhopf::command_names()));
  app.add_option("file", file, "presentation file")->required();
  app.add_option("--sub", sub, "presentation of a subalgebra carrying an embedding block");
  app.add_option("--field", field, "read scalars in Q or Fp:<p>");
  app.add_option("--json", json_out, "write the machine report to this path");
  app.add_flag("-q,--quiet", quiet, "print only the final status line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto cmd = *qhopf::parse_command(command);
  std::optional<qhopf::FieldSpec> override_field;
  if (!field.empty()) {
    try {
      override_field = qhopf::FieldSpec::parse(field);
    } catch (const std::exception& e) {
      std::cerr << "--field: error: " << e.what() << "\n";
      return kInputError;
    }
  }

  qhopf::PresentationFile main_file;
  std::optional<qhopf::SubalgebraPair> pair;
  try {
    main_file = qhopf::load_presentation_file(file, override_field);
    std::optional<qhopf::PresentationFile> sub_file;
    if (!sub.empty()) sub_file = qhopf::load_presentation_file(sub, override_field);
    if (sub_file || main_file.subalgebra) {
      try {
        pair = qhopf::pair_from_files(main_file, sub_file);
      } catch (const qhopf::InputError& e) {
        throw qhopf::InputError(sub_file ? sub : file, e.line(), e.message());
      }
    } else if (cmd == qhopf::Command::Extension) {
      throw qhopf::InputError(file, 0, "extension needs a subalgebra: pass --sub or use a file with a subalgebra block");
    }
  } catch (const qhopf::InputError& e) {
    return input_error(e);
  }

  const auto result = qhopf::run_command(cmd, main_file.presentation, pair);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!quiet) std::cout << result.text;
  std::cout << (result.ok ? "ok" : "FAILED") << " (" << command << " " << file << ", " << secs << " s)\n";
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << json_out << ": error: cannot write\n";
      return kInputError;
    }
    out << result.doc.dump(2) << "\n";
  }
  return result.ok ? 0 : 1;
}
