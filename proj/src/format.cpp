#include "covent/format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace covent {

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt12(x));
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(round12(m(i, j).real()));
      im.push_back(round12(m(i, j).imag()));
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") ||
      !j.contains("im")) {
    throw std::invalid_argument("matrix JSON: expected rows, cols, re, im");
  }
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix JSON: non-positive shape");
  const auto n = static_cast<std::size_t>(rows * cols);
  if (!re.is_array() || !im.is_array() || re.size() != n || im.size() != n) {
    throw std::invalid_argument("matrix JSON: entries length must equal rows*cols");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto idx = static_cast<std::size_t>(i * cols + k);
      m(i, k) = Complex(re[idx].get<double>(), im[idx].get<double>());
    }
  }
  return m;
}

nlohmann::json bloch_to_json(const BlochVector& m) {
  const auto mat = matrix_to_json(m.m);
  return {{"dim", m.dim}, {"m_re", mat.at("re")}, {"m_im", mat.at("im")}};
}

BlochVector bloch_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("m_re") || !j.contains("m_im")) {
    throw std::invalid_argument("Bloch JSON: expected dim, m_re, m_im");
  }
  const int d = j.at("dim").get<int>();
  BlochVector out = BlochVector::zero(d);
  out.m = matrix_from_json({{"rows", d}, {"cols", d}, {"re", j.at("m_re")}, {"im", j.at("m_im")}});
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw std::runtime_error("cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace covent
