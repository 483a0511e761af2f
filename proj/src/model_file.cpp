#include "ttk/model_file.hpp"

#include <fstream>
#include <string>

#include "ttk/errors.hpp"

namespace ttk {

std::vector<Pattern> read_model(std::istream& in) {
  std::vector<Pattern> patterns;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      patterns.push_back(parse_pattern(line));
    } catch (const SyntaxError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return patterns;
}

std::vector<Pattern> read_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());
  return read_model(in);
}

void write_model(std::ostream& out, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns) out << render_pattern(p) << '\n';
}

void write_model_file(const std::filesystem::path& path, std::span<const Pattern> patterns) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write model file " + path.string());
  write_model(out, patterns);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ttk
