#pragma once

#include <string>
#include <vector>

namespace aerolink {

// Shortest decimal form that round-trips to the same double (std::to_chars).
std::string format_double(double value);

// Quote a field only when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

// Join fields with commas; rows end with '\n'.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace aerolink
