// Regenerates the shipped fixture files, or checks that a directory holds
// exactly what the builders produce.
//
//   spine_fixtures write <dir>
//   spine_fixtures check <dir>

#include <filesystem>
#include <iostream>
#include <string>

#include "spine/gallery.hpp"
#include "spine/io.hpp"

int main(int argc, char** argv) {
  if (argc != 3 || (std::string(argv[1]) != "write" && std::string(argv[1]) != "check")) {
    std::cerr << "usage: spine_fixtures write|check <dir>\n";
    return 2;
  }
  const std::string mode = argv[1];
  const std::filesystem::path dir = argv[2];
  int stale = 0;
  try {
    if (mode == "write") std::filesystem::create_directories(dir);
    for (const auto& [name, content] : spine::fixture_files()) {
      const auto path = (dir / name).string();
      if (mode == "write") {
        spine::write_file_atomic(path, content);
        std::cout << "wrote " << path << "\n";
        continue;
      }
      if (!std::filesystem::exists(path)) {
        std::cout << "missing " << path << "\n";
        ++stale;
      } else if (spine::read_file(path) != content) {
        std::cout << "differs " << path << "\n";
        ++stale;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (mode == "check") std::cout << (stale == 0 ? "fixtures up to date\n" : "fixtures stale; rerun with write\n");
  return stale == 0 ? 0 : 1;
}
