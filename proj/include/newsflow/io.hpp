#ifndef NEWSFLOW_IO_HPP
#define NEWSFLOW_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace newsflow {

// SHA-256 hex digest (lowercase) of a byte string / file.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// Writes content to a temporary file in the target directory and renames it
// into place, so readers never observe a partially written artifact.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Shortest round-trip decimal form of a double ("0.25", "1e-09", "nan").
std::string format_double(double value);

// Fixed-point form with the given number of decimals ("0.333333").
std::string format_fixed(double value, int decimals);

// ISO-8601 UTC timestamp. Honors SOURCE_DATE_EPOCH so reruns can be
// byte-identical.
std::string iso8601_utc_now();

}  // namespace newsflow

#endif  // NEWSFLOW_IO_HPP
