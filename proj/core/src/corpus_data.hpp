#pragma once

// Expected-table files compiled into the library (generated at configure time).

#include <span>
#include <string>

namespace kdual::detail {

struct EmbeddedFile {
  std::string name;
  std::string content;
};

std::span<const EmbeddedFile> embedded_expected_files();

}  // namespace kdual::detail
