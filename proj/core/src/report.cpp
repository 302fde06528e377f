#include <seqopt/report.hpp>

#include <sstream>

#include <json.hpp>

namespace seqopt {

void Report::add(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, Entry::Kind::Text});
}

void Report::add(const std::string& key, const char* value) { add(key, std::string(value)); }

void Report::add(const std::string& key, bool value) {
  entries_.push_back({key, value ? "true" : "false", Entry::Kind::Boolean});
}

void Report::add(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  entries_.push_back({key, os.str(), Entry::Kind::Number});
}

void Report::add(const std::string& key, std::int64_t value) {
  entries_.push_back({key, std::to_string(value), Entry::Kind::Number});
}

void Report::add(const std::string& key, std::uint64_t value) {
  entries_.push_back({key, std::to_string(value), Entry::Kind::Number});
}

void Report::add(const std::string& key, const BigInt& value) {
  entries_.push_back({key, value.str(), Entry::Kind::Text});
}

void Report::add(const std::string& key, const Rational& value) {
  std::ostringstream os;
  os << value;
  entries_.push_back({key, os.str(), Entry::Kind::Text});
}

std::string Report::to_text() const {
  std::string out;
  for (const Entry& e : entries_) {
    out += e.key;
    out += '=';
    out += e.value;
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const Entry& e : entries_) {
    switch (e.kind) {
      case Entry::Kind::Boolean:
        j[e.key] = (e.value == "true");
        break;
      case Entry::Kind::Number:
        j[e.key] = nlohmann::ordered_json::parse(e.value);
        break;
      case Entry::Kind::Text:
        j[e.key] = e.value;
        break;
    }
  }
  return j.dump(2);
}

double approx(const Rational& x) { return x.convert_to<double>(); }

}  // namespace seqopt
