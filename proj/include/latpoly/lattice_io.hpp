#ifndef LATPOLY_LATTICE_IO_HPP
#define LATPOLY_LATTICE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "latpoly/error.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

/// Calls fn(line_number, tokens) for each non-blank, non-comment line.
template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens.front().text[0] != '#') fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Parses the lattice text format:
///
///     lattice <name>
///     elements: <name> <name> ...
///     covers:
///     <low> < <high>
///
/// Lines starting with '#' are comments. Bottom and top are inferred.
inline LatticePtr parse_lattice(std::string_view text, const std::string& source = "<input>",
                                const BuildOptions& options = {}) {
  enum class Section { header, elements, covers } section = Section::header;
  std::string name;
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  std::vector<Cover> covers;
  bool have_elements = false;

  detail::for_each_content_line(text, [&](std::size_t line, const std::vector<detail::Token>& tokens) {
    const auto& head = tokens.front();
    if (section == Section::header) {
      if (head.text != "lattice" || tokens.size() != 2)
        throw FormatError(source, line, head.column, "expected 'lattice <name>'");
      name = tokens[1].text;
      section = Section::elements;
      return;
    }
    if (section == Section::elements) {
      if (head.text != "elements:") throw FormatError(source, line, head.column, "expected 'elements:'");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!declared.insert(tokens[i].text).second)
          throw FormatError(source, line, tokens[i].column, "duplicate element '" + tokens[i].text + "'");
        if (tokens[i].text.find('\'') != std::string::npos)
          throw FormatError(source, line, tokens[i].column, "element names cannot contain quotes");
        names.push_back(tokens[i].text);
      }
      if (names.empty()) throw FormatError(source, line, head.column, "no elements declared");
      have_elements = true;
      section = Section::covers;
      return;
    }
    if (covers.empty() && head.text == "covers:" && tokens.size() == 1) return;
    if (tokens.size() != 3 || tokens[1].text != "<")
      throw FormatError(source, line, head.column, "expected '<low> < <high>'");
    for (auto idx : {std::size_t{0}, std::size_t{2}})
      if (!declared.contains(tokens[idx].text))
        throw FormatError(source, line, tokens[idx].column, "unknown element '" + tokens[idx].text + "'");
    covers.push_back({tokens[0].text, tokens[2].text});
  });

  if (name.empty()) throw FormatError(source, 1, 1, "missing 'lattice <name>' header");
  if (!have_elements) throw FormatError(source, 1, 1, "missing 'elements:' line");
  return build_from_covers(name, names, covers, options);
}

inline LatticePtr load_lattice(const std::string& path, const BuildOptions& options = {}) {
  return parse_lattice(detail::read_file(path), path, options);
}

/// Writes the lattice in the text format, listing only Hasse covers.
inline std::string format_lattice(const FiniteLattice& L) {
  std::string out = "lattice " + L.name() + "\nelements:";
  for (auto e : L.elements()) out += " " + L.name_of(e);
  out += "\ncovers:\n";
  for (const auto& c : L.covers()) out += c.low + " < " + c.high + "\n";
  return out;
}

}  // namespace latpoly

#endif  // LATPOLY_LATTICE_IO_HPP
