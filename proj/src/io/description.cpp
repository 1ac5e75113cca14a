#include "stpsw/description.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stpsw/errors.hpp"

namespace stpsw {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t value_column = 0;  // 1-based column of value[0]
};

struct Token {
  std::string text;
  std::size_t column;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Parser {
 public:
  Parser(const std::string& text, std::string source) : source_(std::move(source)) { scan(text); }

  SystemDescription build() {
    SystemDescription d;
    read_options(d);
    read_modes(d);
    read_logic(d);
    return d;
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) const {
    throw ParseError(source_, line, column, msg);
  }

  void scan(const std::string& text) {
    static const std::set<std::string> known = {"options", "modes", "logic"};
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::string section;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw.substr(0, raw.find('#'));
      if (trim(line).empty()) continue;
      std::size_t lead = line.find_first_not_of(" \t");
      if (line[lead] == '[') {
        auto close = line.find(']', lead);
        if (close == std::string::npos) fail(lineno, lead + 1, "unterminated section header");
        if (!trim(line.substr(close + 1)).empty()) fail(lineno, close + 2, "unexpected text after section header");
        section = trim(line.substr(lead + 1, close - lead - 1));
        if (!known.count(section)) fail(lineno, lead + 2, "unknown section '" + section + "'");
        if (seen_sections_.count(section)) fail(lineno, lead + 1, "duplicate section [" + section + "]");
        seen_sections_.insert(section);
        continue;
      }
      if (section.empty()) fail(lineno, lead + 1, "entry outside of any section");
      auto eq = line.find('=');
      if (eq == std::string::npos) fail(lineno, lead + 1, "expected 'key = value'");
      Entry e;
      e.key = trim(line.substr(0, eq));
      if (e.key.empty()) fail(lineno, lead + 1, "missing key");
      std::size_t vstart = line.find_first_not_of(" \t", eq + 1);
      if (vstart == std::string::npos) fail(lineno, eq + 2, "missing value for '" + e.key + "'");
      e.value = trim(line.substr(vstart));
      e.value_column = vstart + 1;
      e.line = lineno;
      auto& sec = entries_[section];
      if (sec.count(e.key)) fail(lineno, lead + 1, "duplicate key '" + e.key + "'");
      sec.emplace(e.key, std::move(e));
    }
  }

  const Entry* find(const std::string& section, const std::string& key) const {
    auto s = entries_.find(section);
    if (s == entries_.end()) return nullptr;
    auto e = s->second.find(key);
    return e == s->second.end() ? nullptr : &e->second;
  }

  void reject_unknown(const std::string& section, const std::set<std::string>& allowed) const {
    auto s = entries_.find(section);
    if (s == entries_.end()) return;
    for (const auto& [key, e] : s->second)
      if (!allowed.count(key)) fail(e.line, 1, "unknown key '" + key + "' in [" + section + "]");
  }

  static std::vector<Token> tokens(const std::string& text, std::size_t base_column, const char* seps) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::strchr(seps, text[i])) ++i;
      std::size_t start = i;
      while (i < text.size() && !std::strchr(seps, text[i])) ++i;
      if (i > start) out.push_back({text.substr(start, i - start), base_column + start});
    }
    return out;
  }

  std::size_t parse_count(const Entry& e, const std::string& text, std::size_t column) const {
    std::size_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
      fail(e.line, column, "expected a non-negative integer, got '" + text + "'");
    return v;
  }

  std::size_t integer(const Entry& e) const {
    auto toks = tokens(e.value, e.value_column, " \t");
    if (toks.size() != 1) fail(e.line, e.value_column, "expected a single integer for '" + e.key + "'");
    return parse_count(e, toks[0].text, toks[0].column);
  }

  std::size_t positive(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) throw DimensionError("[" + section + "] is missing '" + key + "'");
    std::size_t v = integer(*e);
    if (v == 0) fail(e->line, e->value_column, "'" + key + "' must be positive");
    return v;
  }

  std::vector<std::size_t> index_list(const Entry& e, std::size_t lo, std::size_t hi, const std::string& range_name) const {
    std::vector<std::size_t> out;
    for (const auto& t : tokens(e.value, e.value_column, " \t,")) {
      std::size_t v = parse_count(e, t.text, t.column);
      if (v < lo || v > hi) {
        std::ostringstream os;
        os << e.key << ": entry " << v << " at line " << e.line << ", column " << t.column << " is outside [" << lo
           << ", " << hi << "] (" << range_name << ")";
        throw IndexError(os.str());
      }
      out.push_back(v);
    }
    return out;
  }

  Matrix matrix(const Entry& e, NumericMode mode) const {
    std::vector<std::vector<Scalar>> rows;
    std::size_t row_start = 0;
    while (true) {
      std::size_t semi = e.value.find(';', row_start);
      std::string row = e.value.substr(row_start, semi == std::string::npos ? std::string::npos : semi - row_start);
      std::vector<Scalar> entries;
      for (const auto& t : tokens(row, e.value_column + row_start, " \t,")) {
        try {
          entries.push_back(Scalar::parse(t.text, mode));
        } catch (const std::invalid_argument& ex) {
          fail(e.line, t.column, ex.what());
        }
      }
      if (entries.empty()) fail(e.line, e.value_column + row_start, "empty row in '" + e.key + "'");
      if (!rows.empty() && entries.size() != rows.front().size())
        fail(e.line, e.value_column + row_start, "ragged rows in '" + e.key + "'");
      rows.push_back(std::move(entries));
      if (semi == std::string::npos) break;
      row_start = semi + 1;
    }
    return Matrix::from_rows(rows);
  }

  void read_options(SystemDescription& d) {
    reject_unknown("options", {"numeric", "tolerance", "t_max"});
    if (const Entry* e = find("options", "numeric")) {
      if (e->value == "rational") d.numeric = NumericMode::Rational;
      else if (e->value == "float") d.numeric = NumericMode::Float;
      else fail(e->line, e->value_column, "numeric must be 'rational' or 'float'");
    }
    if (const Entry* e = find("options", "tolerance")) {
      double v = 0.0;
      auto res = std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
      if (res.ec != std::errc() || res.ptr != e->value.data() + e->value.size() || !(v > 0.0))
        fail(e->line, e->value_column, "tolerance must be a positive number");
      d.tolerance = v;
    }
    if (const Entry* e = find("options", "t_max")) {
      std::size_t v = integer(*e);
      if (v == 0) fail(e->line, e->value_column, "t_max must be positive");
      d.t_max = v;
    }
  }

  void read_modes(SystemDescription& d) {
    if (!seen_sections_.count("modes")) return;
    const std::size_t n = positive("modes", "n");
    const std::size_t m = positive("modes", "m");
    const std::size_t p = positive("modes", "p");
    const std::size_t q = positive("modes", "q");
    std::set<std::string> allowed = {"n", "m", "p", "q"};
    std::vector<Mode> modes;
    for (std::size_t i = 1; i <= q; ++i) {
      Mode md;
      const std::pair<char, Matrix*> parts[] = {{'A', &md.a}, {'B', &md.b}, {'C', &md.c}};
      for (auto [letter, target] : parts) {
        std::string key = std::string(1, letter) + std::to_string(i);
        allowed.insert(key);
        const Entry* e = find("modes", key);
        if (!e) throw DimensionError("[modes] is missing '" + key + "'");
        *target = matrix(*e, d.numeric);
        std::size_t er = letter == 'C' ? p : n;
        std::size_t ec = letter == 'A' ? n : letter == 'B' ? m : n;
        if (target->rows() != er || target->cols() != ec) {
          std::ostringstream os;
          os << key << " is " << target->rows() << "x" << target->cols() << ", expected " << er << "x" << ec;
          throw DimensionError(os.str());
        }
      }
      modes.push_back(std::move(md));
    }
    reject_unknown("modes", allowed);
    d.sls = SwitchedLinearSystem(std::move(modes));
  }

  void read_logic(SystemDescription& d) {
    if (!seen_sections_.count("logic")) throw DimensionError("missing [logic] section");
    const bool has_layout = find("logic", "k") || find("logic", "state_nodes") || find("logic", "input_nodes");
    std::optional<NodeLayout> layout;
    std::size_t big_n = 0, big_m = 0;
    if (has_layout) {
      NodeLayout lay;
      lay.k = positive("logic", "k");
      lay.state_nodes = positive("logic", "state_nodes");
      const Entry* in = find("logic", "input_nodes");
      lay.input_nodes = in ? integer(*in) : 0;
      big_n = checked_power(lay.k, lay.state_nodes);
      big_m = checked_power(lay.k, lay.input_nodes);
      layout = lay;
      if (const Entry* e = find("logic", "N"); e && integer(*e) != big_n)
        throw DimensionError("N disagrees with k^state_nodes = " + std::to_string(big_n));
      if (const Entry* e = find("logic", "M"); e && integer(*e) != big_m)
        throw DimensionError("M disagrees with k^input_nodes = " + std::to_string(big_m));
    } else {
      big_n = positive("logic", "N");
      big_m = positive("logic", "M");
    }
    const std::size_t mn = big_n * big_m;

    std::size_t q = 1;
    if (d.sls) q = d.sls->q();
    if (const Entry* e = find("logic", "q")) {
      std::size_t v = integer(*e);
      if (d.sls && v != q) throw DimensionError("[logic] q = " + std::to_string(v) + " but [modes] has q = " + std::to_string(q));
      if (v == 0) fail(e->line, e->value_column, "q must be positive");
      q = v;
    }

    std::set<std::string> allowed = {"k", "state_nodes", "input_nodes", "N", "M", "q", "L", "R"};
    std::optional<LogicalMatrix> signal;
    if (const Entry* e = find("logic", "R")) {
      auto idx = index_list(*e, 1, q, "signal range q = " + std::to_string(q));
      if (idx.size() != mn)
        throw DimensionError("R has " + std::to_string(idx.size()) + " columns, expected M*N = " + std::to_string(mn));
      signal = LogicalMatrix(q, std::move(idx));
    } else if (q != 1) {
      throw DimensionError("R is required when q = " + std::to_string(q));
    } else {
      signal = LogicalMatrix(1, std::vector<std::size_t>(mn, 1));
    }

    const Entry* l_entry = find("logic", "L");
    if (l_entry) {
      auto idx = index_list(*l_entry, 1, big_n, "N = " + std::to_string(big_n));
      if (idx.size() != mn)
        throw DimensionError("L has " + std::to_string(idx.size()) + " columns, expected M*N = " + std::to_string(mn));
      if (layout)
        for (std::size_t i = 1; i <= layout->state_nodes; ++i)
          if (find("logic", "f" + std::to_string(i))) throw DimensionError("give either L or f<i> truth tables, not both");
      reject_unknown("logic", allowed);
      d.net = LogicalNetwork(big_n, big_m, LogicalMatrix(big_n, std::move(idx)), *signal, layout);
      return;
    }
    if (!layout) throw DimensionError("[logic] needs L, or k/state_nodes/input_nodes with f<i> truth tables");
    std::vector<std::vector<std::size_t>> tables;
    for (std::size_t i = 1; i <= layout->state_nodes; ++i) {
      std::string key = "f" + std::to_string(i);
      allowed.insert(key);
      const Entry* e = find("logic", key);
      if (!e) throw DimensionError("[logic] is missing '" + key + "'");
      auto t = index_list(*e, 1, layout->k, "k = " + std::to_string(layout->k));
      if (t.size() != mn)
        throw DimensionError(key + " has " + std::to_string(t.size()) + " entries, expected M*N = " + std::to_string(mn));
      tables.push_back(std::move(t));
    }
    reject_unknown("logic", allowed);
    d.net = build_from_functions(layout->k, layout->state_nodes, layout->input_nodes, tables, *signal);
    d.truth_tables = std::move(tables);
  }

  std::string source_;
  std::set<std::string> seen_sections_;
  std::map<std::string, std::map<std::string, Entry>> entries_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SystemDescription parse_description(const std::string& text, const std::string& source) {
  Parser p(text, source);
  SystemDescription d = p.build();
  if (d.sls && d.sls->numeric_mode() != d.numeric) throw ModeMismatch("mode matrices do not match the numeric option");
  return d;
}

SystemDescription load_description(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_description(buf.str(), path);
}

std::string format_description(const SystemDescription& d) {
  std::ostringstream os;
  os << "[options]\n";
  os << "numeric = " << (d.numeric == NumericMode::Rational ? "rational" : "float") << "\n";
  if (d.tolerance) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, *d.tolerance);
    os << "tolerance = " << std::string(buf, res.ptr) << "\n";
  }
  if (d.t_max) os << "t_max = " << *d.t_max << "\n";
  if (d.sls) {
    const auto& s = *d.sls;
    os << "\n[modes]\nn = " << s.n() << "\nm = " << s.m() << "\np = " << s.p() << "\nq = " << s.q() << "\n";
    for (std::size_t i = 1; i <= s.q(); ++i) {
      const Mode& md = s.mode(i);
      os << "A" << i << " = " << md.a.str() << "\n";
      os << "B" << i << " = " << md.b.str() << "\n";
      os << "C" << i << " = " << md.c.str() << "\n";
    }
  }
  os << "\n[logic]\n";
  const auto& net = d.net;
  if (net.layout()) {
    os << "k = " << net.layout()->k << "\nstate_nodes = " << net.layout()->state_nodes
       << "\ninput_nodes = " << net.layout()->input_nodes << "\n";
  } else {
    os << "N = " << net.states() << "\nM = " << net.inputs() << "\n";
  }
  if (!d.sls) os << "q = " << net.signals() << "\n";
  if (d.truth_tables) {
    for (std::size_t i = 0; i < d.truth_tables->size(); ++i) os << "f" << i + 1 << " = " << join((*d.truth_tables)[i]) << "\n";
  } else {
    os << "L = " << join(net.transition().col_index()) << "\n";
  }
  os << "R = " << join(net.signal().col_index()) << "\n";
  return os.str();
}

void save_description(const SystemDescription& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_description(d);
}

}  // namespace stpsw
