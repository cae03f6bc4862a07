#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ptsech/tagged.hpp"

namespace ptsech::cli {

enum class Format { Json, Csv };

enum class Kind { Real, Integer, Boolean, Text, Complex, TaggedComplex };

struct Column {
  std::string name;
  Kind kind;
};

using Value = std::variant<double, long long, bool, std::string, cplx, Tagged>;

/// Records sharing one fixed column order. Complex columns become
/// `{"re": .., "im": ..}` in JSON and `<name>_re,<name>_im` in CSV; a
/// pole-tagged value is `null` in JSON and `inf` in CSV.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;
};

/// Throws std::invalid_argument when a row does not match the columns.
void emit(const Table& table, Format format, std::ostream& out);

/// %.17g, the shortest format that always round-trips a double.
std::string format_real(double v);

}  // namespace ptsech::cli
