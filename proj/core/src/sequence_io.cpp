#include "dioph/sequence_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

constexpr const char* kHeader = "index,X_i,x0,x1,x2,delta_lo,delta_hi";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

void write_sequence_csv(std::ostream& out, std::span<const MinimalPoint> seq) {
  out << kHeader << '\n';
  for (const auto& p : seq) {
    out << p.index << ',' << p.X.get_str() << ',' << p.vec.x0.get_str() << ',' << p.vec.x1.get_str() << ','
        << p.vec.x2.get_str() << ',' << to_string(p.delta.lo) << ',' << to_string(p.delta.hi) << '\n';
  }
}

void write_sequence_json(std::ostream& out, std::span<const MinimalPoint> seq) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : seq) {
    nlohmann::ordered_json row;
    row["index"] = p.index;
    row["X_i"] = p.X.get_str();
    row["x0"] = p.vec.x0.get_str();
    row["x1"] = p.vec.x1.get_str();
    row["x2"] = p.vec.x2.get_str();
    row["delta_lo"] = to_string(p.delta.lo);
    row["delta_hi"] = to_string(p.delta.hi);
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

std::string sequence_csv(std::span<const MinimalPoint> seq) {
  std::ostringstream out;
  write_sequence_csv(out, seq);
  return out.str();
}

std::string sequence_json(std::span<const MinimalPoint> seq) {
  std::ostringstream out;
  write_sequence_json(out, seq);
  return out.str();
}

std::vector<MinimalPoint> read_sequence_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty sequence file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw ParseError("unexpected sequence header: '" + line + "'");
  std::vector<MinimalPoint> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 7) throw ParseError("row " + std::to_string(row) + ": expected 7 fields");
    try {
      MinimalPoint p;
      p.index = to_u64(parse_integer(f[0]));
      p.X = parse_integer(f[1]);
      p.vec = IntVec3{parse_integer(f[2]), parse_integer(f[3]), parse_integer(f[4])};
      p.delta = Enclosure{parse_rational(f[5]), parse_rational(f[6]), 0};
      if (p.delta.lo > p.delta.hi) throw ParseError("delta_lo > delta_hi");
      out.push_back(std::move(p));
    } catch (const Error& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace dioph
