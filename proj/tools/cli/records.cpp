// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include "records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace lfb::cli {

Record& Record::put(std::string_view key, Value v) {
  auto it = std::find_if(fields_.begin(), fields_.end(),
                         [&](const auto& f) { return f.first == key; });
  if (it != fields_.end()) {
    it->second = std::move(v);
  } else {
    fields_.emplace_back(std::string(key), std::move(v));
  }
  return *this;
}

const Value* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

double Record::number(std::string_view key) const {
  const Value* v = find(key);
  if (v == nullptr) throw std::out_of_range("record has no field " + std::string(key));
  if (const auto* d = std::get_if<double>(v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  throw std::invalid_argument("field " + std::string(key) + " is not numeric");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  std::vector<std::string> header;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.fields()) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << csv_escape(header[i]);
  }
  out << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      if (const Value* v = r.find(header[i])) out << csv_escape(to_text(*v));
    }
    out << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
              // Same 12-digit rendering as CSV; non-finite values become null.
              if (std::isfinite(x)) {
                obj[k] = std::stod(format_number(x));
              } else {
                obj[k] = nullptr;
              }
            } else {
              obj[k] = x;
            }
          },
          v);
    }
    out << obj.dump() << '\n';
  }
}

}  // namespace lfb::cli
