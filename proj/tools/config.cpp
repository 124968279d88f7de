#include "config.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace klag::cli {

namespace {

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw DomainError("cannot parse " + what + " '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

DeformParams RunConfig::params() const { return DeformParams::make(N, a, parse_list(k)); }

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s)) out.push_back(to_double(item, "number"));
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (s.empty()) throw DomainError("empty complex number");
  if (s.back() != 'i') return to_double(s, "complex number");
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') cut = i;
  const std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im = cut == std::string::npos ? s : s.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : to_double(re, "complex number"), to_double(im, "complex number")};
}

SampleTable read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  SampleTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != t.header.size())
      throw DomainError("line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) +
                        " columns, header has " + std::to_string(t.header.size()));
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(to_double(c, "value on line " + std::to_string(lineno)));
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw DomainError("input file '" + path + "' is empty");
  if (t.rows.empty()) throw DomainError("input file '" + path + "' has no samples");
  return t;
}

std::string num(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

OutputSink::OutputSink(const std::string& path) {
  if (path.empty()) return;
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw DomainError("cannot open output file '" + path + "'");
  file_ = std::move(f);
}

std::ostream& OutputSink::stream() { return file_ ? *file_ : std::cout; }

}  // namespace klag::cli
