#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dioph/minimal_points.hpp"

namespace dioph {

// Columns: index,X_i,x0,x1,x2,delta_lo,delta_hi. Rationals are written as
// "num/den", one row per point, '\n' line endings.
void write_sequence_csv(std::ostream& out, std::span<const MinimalPoint> seq);
// A JSON array of objects with the same field names as the CSV columns.
void write_sequence_json(std::ostream& out, std::span<const MinimalPoint> seq);

std::string sequence_csv(std::span<const MinimalPoint> seq);
std::string sequence_json(std::span<const MinimalPoint> seq);

// Inverse of write_sequence_csv. Enclosure depths are not serialised and read back as 0.
std::vector<MinimalPoint> read_sequence_csv(std::istream& in);

}  // namespace dioph
