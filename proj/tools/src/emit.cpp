#include "ptsech_cli/emit.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ptsech::cli {

namespace {

bool matches(Kind kind, const Value& v) {
  switch (kind) {
    case Kind::Real: return std::holds_alternative<double>(v);
    case Kind::Integer: return std::holds_alternative<long long>(v);
    case Kind::Boolean: return std::holds_alternative<bool>(v);
    case Kind::Text: return std::holds_alternative<std::string>(v);
    case Kind::Complex: return std::holds_alternative<cplx>(v);
    case Kind::TaggedComplex: return std::holds_alternative<Tagged>(v);
  }
  return false;
}

void validate(const Table& t) {
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw std::invalid_argument("row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!matches(t.columns[i].kind, row[i]))
        throw std::invalid_argument("value kind differs from column '" + t.columns[i].name + "'");
  }
}

std::string json_string(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    switch (c) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          r += buf;
        } else {
          r += c;
        }
    }
  }
  return r + "\"";
}

std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

std::string json_complex(cplx z) {
  return "{\"re\": " + json_real(z.real()) + ", \"im\": " + json_real(z.imag()) + "}";
}

std::string json_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return json_real(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return json_string(*s);
  if (const auto* z = std::get_if<cplx>(&v)) return json_complex(*z);
  const Tagged& t = std::get<Tagged>(v);
  return t.finite() ? json_complex(t.value) : "null";
}

std::string csv_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_real(v);
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string csv_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return csv_real(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return csv_text(*s);
  if (const auto* z = std::get_if<cplx>(&v)) return csv_real(z->real()) + "," + csv_real(z->imag());
  const Tagged& t = std::get<Tagged>(v);
  if (!t.finite()) return "inf,inf";
  return csv_real(t.value.real()) + "," + csv_real(t.value.imag());
}

void emit_json(const Table& t, std::ostream& out) {
  if (t.rows.empty()) {
    out << "[]\n";
    return;
  }
  out << "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << "  {";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i > 0) out << ", ";
      out << json_string(t.columns[i].name) << ": " << json_value(t.rows[r][i]);
    }
    out << (r + 1 < t.rows.size() ? "},\n" : "}\n");
  }
  out << "]\n";
}

void emit_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out << ',';
    const Column& c = t.columns[i];
    if (c.kind == Kind::Complex || c.kind == Kind::TaggedComplex)
      out << c.name << "_re," << c.name << "_im";
    else
      out << c.name;
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_value(row[i]);
    }
    out << '\n';
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Table& table, Format format, std::ostream& out) {
  validate(table);
  if (format == Format::Json)
    emit_json(table, out);
  else
    emit_csv(table, out);
}

}  // namespace ptsech::cli
