#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "ttk/pattern.hpp"

namespace ttk {

// Model file: one rendered pattern per line, '#' starts a comment line,
// blank lines are ignored.
std::vector<Pattern> read_model(std::istream& in);
std::vector<Pattern> read_model_file(const std::filesystem::path& path);

void write_model(std::ostream& out, std::span<const Pattern> patterns);
void write_model_file(const std::filesystem::path& path, std::span<const Pattern> patterns);

}  // namespace ttk
