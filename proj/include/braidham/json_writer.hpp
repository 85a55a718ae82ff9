#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidham {

/// Streaming pretty-printer for the report schemas. Doubles are written with
/// 17 significant digits so every value round-trips exactly.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separator();
    quoted(k);
    out_ += ": ";
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    if (!std::isfinite(v)) throw std::domain_error("JSON report values must be finite");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return raw(buf);
  }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(unsigned long long v) { return raw(std::to_string(v)); }
  JsonWriter& value(unsigned long v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(std::string_view v) {
    separator();
    quoted(v);
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null() { return raw("null"); }

  template <class T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  std::string str() const { return out_ + "\n"; }

 private:
  struct Level {
    bool empty = true;
  };

  JsonWriter& open(char c) {
    separator();
    out_.push_back(c);
    levels_.push_back({});
    return *this;
  }

  JsonWriter& close(char c) {
    const bool empty = levels_.back().empty;
    levels_.pop_back();
    if (!empty) newline();
    out_.push_back(c);
    return *this;
  }

  JsonWriter& raw(std::string_view text) {
    separator();
    out_ += text;
    return *this;
  }

  void separator() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (levels_.empty()) return;
    if (!levels_.back().empty) out_.push_back(',');
    levels_.back().empty = false;
    newline();
  }

  void newline() {
    out_.push_back('\n');
    out_.append(2 * levels_.size(), ' ');
  }

  void quoted(std::string_view s) {
    out_.push_back('"');
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
            out_ += buf;
          } else {
            out_.push_back(ch);
          }
      }
    }
    out_.push_back('"');
  }

  std::string out_;
  std::vector<Level> levels_;
  bool pending_key_ = false;
};

}  // namespace braidham
