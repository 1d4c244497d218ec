#ifndef LATPOLY_TABLE_IO_HPP
#define LATPOLY_TABLE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/lattice_io.hpp"

namespace latpoly {

/// Parses the function-table format: a `table <n>` header, then one line
/// `<x1> ... <xn> -> <value>` per point of L^n, in any order. Every point
/// must appear exactly once.
inline FunctionTable parse_table(std::string_view text, const LatticePtr& L, const std::string& source = "<input>") {
  std::optional<std::size_t> arity;
  std::size_t header_line = 1;
  std::vector<std::optional<Element>> values;
  std::optional<PointSpace> space;

  auto resolve = [&](const detail::Token& tok, std::size_t line) {
    auto e = L->find(tok.text);
    if (!e) throw FormatError(source, line, tok.column, "unknown element '" + tok.text + "' in lattice " + L->name());
    return *e;
  };

  detail::for_each_content_line(text, [&](std::size_t line, const std::vector<detail::Token>& tokens) {
    if (!arity) {
      if (tokens.size() != 2 || tokens[0].text != "table")
        throw FormatError(source, line, tokens[0].column, "expected 'table <n>'");
      std::size_t n = 0;
      for (char ch : tokens[1].text) {
        if (ch < '0' || ch > '9' || n > 64) throw FormatError(source, line, tokens[1].column, "bad arity");
        n = n * 10 + static_cast<std::size_t>(ch - '0');
      }
      space.emplace(L->size(), n);
      require_budget("table file", space->size());
      values.assign(space->size(), std::nullopt);
      arity = n;
      header_line = line;
      return;
    }
    const std::size_t n = *arity;
    if (tokens.size() != n + 2 || tokens[n].text != "->")
      throw FormatError(source, line, tokens[0].column,
                        "expected " + std::to_string(n) + " coordinates, '->' and a value");
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = resolve(tokens[i], line);
    const auto value = resolve(tokens[n + 1], line);
    auto& slot = values[space->index(x)];
    if (slot) throw FormatError(source, line, tokens[0].column, "duplicate point " + format_point(*L, x));
    slot = value;
  });

  if (!arity) throw FormatError(source, 1, 1, "missing 'table <n>' header");
  std::vector<Element> dense;
  dense.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i])
      throw FormatError(source, header_line, 1, "missing point " + format_point(*L, space->point(i)));
    dense.push_back(*values[i]);
  }
  return FunctionTable(L, *arity, std::move(dense));
}

inline FunctionTable load_table(const std::string& path, const LatticePtr& L) {
  return parse_table(detail::read_file(path), L, path);
}

inline std::string format_table(const FunctionTable& f) {
  const auto& L = f.lattice();
  std::string out = "table " + std::to_string(f.arity()) + "\n";
  std::size_t i = 0;
  f.space().for_each([&](const Point& x) {
    for (auto e : x) out += L.name_of(e) + " ";
    out += "-> " + L.name_of(f.at(i++)) + "\n";
  });
  return out;
}

}  // namespace latpoly

#endif  // LATPOLY_TABLE_IO_HPP
