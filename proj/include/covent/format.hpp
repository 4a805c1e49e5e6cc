// Serialization shared by the CSV and JSON outputs.
//
// Matrix JSON:  {"rows":N,"cols":M,"re":[...],"im":[...]}   row-major
// Bloch JSON:   {"dim":D,"m_re":[...],"m_im":[...]}          row-major, entry
//               k holds m_ij with i = k / D + 1, j = k % D + 1 (1-based labels)

#pragma once

#include "covent/matrix.hpp"
#include "covent/sud.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace covent {

/// printf("%.12g"), with -0 printed as 0.
std::string fmt12(double x);
/// x rounded to 12 significant digits.
double round12(double x);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws std::invalid_argument on missing fields or length mismatch.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json bloch_to_json(const BlochVector& m);
BlochVector bloch_from_json(const nlohmann::json& j);

/// Writes to a sibling temp file, then renames over path. Throws
/// std::runtime_error if the file cannot be written.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace covent
