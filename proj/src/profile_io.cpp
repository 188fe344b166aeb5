#include "chase/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chase {

namespace {

using nlohmann::json;

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Rational read_rate(const json& value, const std::string& field) {
  Rational r;
  try {
    if (value.is_number_integer()) {
      r = parse_decimal(value.dump());
    } else if (value.is_number_float()) {
      r = parse_decimal(shortest(value.get<double>()));
    } else if (value.is_string()) {
      const auto s = value.get<std::string>();
      const auto slash = s.find('/');
      if (slash == std::string::npos) {
        r = parse_decimal(s);
      } else {
        const Rational den = parse_decimal(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        r = parse_decimal(s.substr(0, slash)) / den;
      }
    } else {
      throw ProfileError(field + ": expected a number, got " + std::string(value.type_name()));
    }
  } catch (const std::invalid_argument& e) {
    throw ProfileError(field + ": " + e.what());
  }
  if (r < 0) throw ProfileError(field + ": rates must be nonnegative, got " + to_string(r));
  return r;
}

const json* lookup(const json& doc, const std::string& group, const std::string& key) {
  if (auto it = doc.find(group); it != doc.end() && it->is_object()) {
    if (auto jt = it->find(key); jt != it->end()) return &*jt;
  }
  if (auto it = doc.find(group + "." + key); it != doc.end()) return &*it;
  return nullptr;
}

RateSequence read_sequence(const json& doc, const std::string& group) {
  std::vector<Rational> head;
  if (const json* h = lookup(doc, group, "head")) {
    if (!h->is_array()) throw ProfileError(group + ".head: expected a list");
    for (std::size_t i = 0; i < h->size(); ++i) {
      head.push_back(read_rate((*h)[i], group + ".head[" + std::to_string(i) + "]"));
    }
  }
  const json* t = lookup(doc, group, "tail");
  if (t == nullptr) throw ProfileError(group + ".tail: missing");
  return RateSequence(std::move(head), read_rate(*t, group + ".tail"));
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json rate_json(const Rational& r) {
  const double d = to_double(r);
  const std::string s = shortest(d);
  if (parse_decimal(s) == r) return json::parse(s);
  return to_string(r);
}

json sequence_json(const RateSequence& seq) {
  json head = json::array();
  for (const auto& r : seq.head()) head.push_back(rate_json(r));
  return {{"head", head}, {"tail", rate_json(seq.tail())}};
}

}  // namespace

RateProfile parse_profile(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": malformed profile: " << e.what();
    throw ProfileError(msg.str());
  }
  if (!doc.is_object()) throw ProfileError(std::string(source) + ": profile must be a JSON object");
  try {
    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
      if (!it->is_string()) throw ProfileError("name: expected a string");
      name = it->get<std::string>();
    }
    return RateProfile(read_sequence(doc, "lambda"), read_sequence(doc, "rho"), std::move(name));
  } catch (const ProfileError& e) {
    throw ProfileError(std::string(source) + ": " + e.what());
  }
}

RateProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError(path.string() + ": cannot open profile");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), path.string());
}

std::string profile_to_json(const RateProfile& profile, int indent) {
  json doc;
  if (!profile.name().empty()) doc["name"] = profile.name();
  doc["lambda"] = sequence_json(profile.lambda());
  doc["rho"] = sequence_json(profile.rho());
  return doc.dump(indent);
}

}  // namespace chase
