#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace covfock {

/// Fixed float formatting for reports: 17 significant digits, lowercase
/// scientific notation, zero (either sign) rendered as "0".  Non-finite
/// values render as null.
std::string format_double(double x);

std::string json_escape(std::string_view s);

/// Minimal deterministic JSON emitter: insertion-ordered keys, two-space
/// indent, floats through format_double.  All report output goes through
/// this writer so bytes are reproducible.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(std::size_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

  /// Finishes the document (newline-terminated) and returns the text.
  std::string take();

 private:
  struct Frame {
    bool is_object = false;
    bool first = true;
  };

  void before_item();
  void raw(std::string_view text) { out_.append(text); }
  std::string indent() const;

  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_field(std::string_view s);

}  // namespace covfock
