#include "stpsw/switched_system.hpp"

#include <sstream>

#include "stpsw/errors.hpp"

namespace stpsw {

SwitchedLinearSystem::SwitchedLinearSystem(std::vector<Mode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw DimensionError("switched system needs at least one mode");
  const Mode& first = modes_.front();
  n_ = first.a.rows();
  m_ = first.b.cols();
  p_ = first.c.rows();
  if (n_ == 0) throw DimensionError("state dimension must be positive");
  NumericMode nm = first.a.mode();
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    const Mode& md = modes_[i];
    auto fail = [&](const char* what) {
      std::ostringstream os;
      os << "mode " << i + 1 << ": " << what;
      throw DimensionError(os.str());
    };
    if (md.a.rows() != n_ || md.a.cols() != n_) fail("A must be n x n");
    if (md.b.rows() != n_ || md.b.cols() != m_) fail("B must be n x m");
    if (md.c.rows() != p_ || md.c.cols() != n_) fail("C must be p x n");
    if (md.a.mode() != nm || md.b.mode() != nm || md.c.mode() != nm) fail("mixed numeric modes");
  }
}

const Mode& SwitchedLinearSystem::mode(std::size_t sigma) const {
  if (sigma < 1 || sigma > modes_.size()) throw IndexError("switching signal out of range");
  return modes_[sigma - 1];
}

Matrix SwitchedLinearSystem::stacked_a() const {
  std::vector<Matrix> parts;
  for (const auto& md : modes_) parts.push_back(md.a);
  return hconcat(parts);
}
Matrix SwitchedLinearSystem::stacked_b() const {
  std::vector<Matrix> parts;
  for (const auto& md : modes_) parts.push_back(md.b);
  return hconcat(parts);
}
Matrix SwitchedLinearSystem::stacked_c() const {
  std::vector<Matrix> parts;
  for (const auto& md : modes_) parts.push_back(md.c);
  return hconcat(parts);
}

Matrix SwitchedLinearSystem::step(std::size_t sigma, const Matrix& x, const Matrix& u) const {
  const Mode& md = mode(sigma);
  return md.a * x + md.b * u;
}

}  // namespace stpsw
