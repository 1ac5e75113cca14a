#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stpsw/logical_network.hpp"
#include "stpsw/switched_system.hpp"

namespace stpsw {

/// Syntax error in a system description, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A switched linear system (optional) plus the logical network that drives it.
///
///   [options]  numeric = rational|float, tolerance = <double>, t_max = <int>
///   [modes]    n, m, p, q, then A<i>, B<i>, C<i> as "r11 r12; r21 r22" rows
///   [logic]    k, state_nodes, input_nodes (or N, M); L = <indices> or f<i> = <table>; R = <indices>
struct SystemDescription {
  NumericMode numeric = NumericMode::Rational;
  std::optional<double> tolerance;
  std::optional<std::size_t> t_max;
  std::optional<SwitchedLinearSystem> sls;
  LogicalNetwork net{1, 1, LogicalMatrix::identity(1), LogicalMatrix::identity(1)};
  /// Per-node truth tables when the network was given node-wise.
  std::optional<std::vector<std::vector<std::size_t>>> truth_tables;

  friend bool operator==(const SystemDescription&, const SystemDescription&) = default;
};

SystemDescription parse_description(const std::string& text, const std::string& source = "<input>");
SystemDescription load_description(const std::string& path);

/// Canonical text form; parse_description(format_description(d)) == d.
std::string format_description(const SystemDescription& d);
void save_description(const SystemDescription& d, const std::string& path);

}  // namespace stpsw
