// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lfb::cli {

using Value = std::variant<double, std::int64_t, bool, std::string>;

/// One output row: ordered (field, value) pairs.
class Record {
 public:
  Record& set(std::string_view key, double v) { return put(key, v); }
  Record& set(std::string_view key, int v) { return put(key, std::int64_t{v}); }
  Record& set(std::string_view key, std::int64_t v) { return put(key, v); }
  Record& set(std::string_view key, std::uint64_t v) {
    return put(key, static_cast<std::int64_t>(v));
  }
  Record& set(std::string_view key, bool v) { return put(key, v); }
  Record& set(std::string_view key, std::string v) { return put(key, std::move(v)); }
  Record& set(std::string_view key, const char* v) { return put(key, std::string(v)); }

  const Value* find(std::string_view key) const;
  double number(std::string_view key) const;
  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

 private:
  Record& put(std::string_view key, Value v);
  std::vector<std::pair<std::string, Value>> fields_;
};

/// Decimal with 12 significant digits.
std::string format_number(double v);
std::string to_text(const Value& v);

/// Header is the union of field names in first-seen order; missing cells
/// are left empty.
void write_csv(std::ostream& out, const std::vector<Record>& records);
/// One JSON object per line.
void write_jsonl(std::ostream& out, const std::vector<Record>& records);

}  // namespace lfb::cli
