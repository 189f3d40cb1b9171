#include <filesystem>
#include <iostream>

#include "qhopf/examples.hpp"
#include "qhopf/io.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: qhopf_export <output-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  for (const auto& [name, file] : qhopf::shipped_files()) {
    qhopf::save_presentation_file((dir / (name + ".json")).string(), file);
    std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
  }
  return 0;
}
