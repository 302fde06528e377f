#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <seqopt/bigint.hpp>

namespace seqopt {

/// Ordered key/value report. Renders either as plain `key=value` lines or as a
/// single JSON object with the same keys in insertion order. Exact quantities
/// (big integers, rationals) are emitted as strings so nothing is rounded.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, bool value);
  void add(const std::string& key, double value);
  void add(const std::string& key, std::int64_t value);
  void add(const std::string& key, std::uint64_t value);
  void add(const std::string& key, int value) { add(key, static_cast<std::int64_t>(value)); }
  void add(const std::string& key, unsigned value) { add(key, static_cast<std::uint64_t>(value)); }
  void add(const std::string& key, const BigInt& value);
  void add(const std::string& key, const Rational& value);

  std::string to_text() const;
  std::string to_json() const;

  struct Entry {
    enum class Kind { Text, Boolean, Number };
    std::string key;
    std::string value;
    Kind kind;
  };
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Decimal approximation of an exact rational, for the human-readable side of
/// reports. Never used in comparisons.
double approx(const Rational& x);

}  // namespace seqopt
