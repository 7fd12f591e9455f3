#pragma once

#include <cstddef>
#include <string>

#include "spinfeit/chartable.hpp"

namespace spinfeit {

// Syntax or validation failure, positioned at a 1-based line and column.
// what() reads "line:col: message".
class CtabError : public Error {
  public:
    CtabError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return msg_; }

  private:
    std::size_t line_, column_;
    std::string msg_;
};

// Document layout, one record per line:
//   ctab 1
//   group <name>
//   order <int>
//   exponent <int>
//   class <idx> size=<int> order=<int> pow<p>=<idx>... [label="..."]
//   char <idx> [label="..."] <value> <value> ...
// Blank lines and lines starting with '#' are skipped. Values use the
// E(n)^k literal syntax. The table is validated unless validate is false.
CharacterTable parse_ctab(const std::string& text, bool validate = true);

// Canonical form: the layout above, no comments, values as canonical
// literals, power maps by ascending prime, LF line endings.
std::string write_ctab(const CharacterTable& t);

CharacterTable read_ctab_file(const std::string& path, bool validate = true);
void write_ctab_file(const std::string& path, const CharacterTable& t);

}  // namespace spinfeit
