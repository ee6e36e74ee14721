#include "covfock/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace covfock {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // normalizes -0 as well
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string JsonWriter::indent() const {
  return std::string(2 * stack_.size(), ' ');
}

void JsonWriter::before_item() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& frame = stack_.back();
  if (frame.is_object) {
    throw std::logic_error("JsonWriter: object members need a key");
  }
  if (!frame.first) raw(",");
  frame.first = false;
  raw("\n");
  raw(indent());
}

JsonWriter& JsonWriter::begin_object() {
  before_item();
  raw("{");
  stack_.push_back({true, true});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  if (stack_.empty() || !stack_.back().is_object) {
    throw std::logic_error("JsonWriter: mismatched end_object");
  }
  bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) {
    raw("\n");
    raw(indent());
  }
  raw("}");
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_item();
  raw("[");
  stack_.push_back({false, true});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  if (stack_.empty() || stack_.back().is_object) {
    throw std::logic_error("JsonWriter: mismatched end_array");
  }
  bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) {
    raw("\n");
    raw(indent());
  }
  raw("]");
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  if (stack_.empty() || !stack_.back().is_object || after_key_) {
    throw std::logic_error("JsonWriter: key outside object");
  }
  Frame& frame = stack_.back();
  if (!frame.first) raw(",");
  frame.first = false;
  raw("\n");
  raw(indent());
  raw("\"");
  raw(json_escape(k));
  raw("\": ");
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_item();
  raw(format_double(v));
  return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
  before_item();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(std::size_t v) {
  before_item();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_item();
  raw(v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_item();
  raw("\"");
  raw(json_escape(v));
  raw("\"");
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_item();
  raw("null");
  return *this;
}

std::string JsonWriter::take() {
  if (!stack_.empty() || after_key_) {
    throw std::logic_error("JsonWriter: document not finished");
  }
  out_ += "\n";
  return std::move(out_);
}

std::string csv_field(std::string_view s) {
  bool needs_quote = s.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quote) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace covfock
