#pragma once

// OpenQASM 2.0 emission and a reader for the same subset (h, s, t, cx on a
// single register).

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ctprep/circuit.hpp"

namespace ctprep {

inline std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H: os << "h q[" << g.qubits[0] << "];\n"; break;
      case GateKind::S: os << "s q[" << g.qubits[0] << "];\n"; break;
      case GateKind::T: os << "t q[" << g.qubits[0] << "];\n"; break;
      case GateKind::CNOT: os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n"; break;
    }
  }
  return os.str();
}

class QasmError : public std::runtime_error {
 public:
  QasmError(int line, const std::string& what)
      : std::runtime_error("qasm line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses "<reg>[<idx>]" and returns idx.
inline int parse_operand(std::string tok, const std::string& reg, int line) {
  tok = strip(tok);
  const auto open = tok.find('[');
  const auto close = tok.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw QasmError(line, "malformed operand '" + tok + "'");
  if (strip(tok.substr(0, open)) != reg)
    throw QasmError(line, "unknown register in '" + tok + "'");
  try {
    std::size_t used = 0;
    const std::string digits = strip(tok.substr(open + 1, close - open - 1));
    const int idx = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
    return idx;
  } catch (const std::exception&) {
    throw QasmError(line, "bad index in '" + tok + "'");
  }
}

}  // namespace detail

/// Reads the h/s/t/cx subset emitted by to_qasm. Comments, blank lines,
/// `include`, `creg` and `barrier` are accepted and ignored.
inline Circuit parse_qasm(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // drop // comments
  std::string clean;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) clean += '\n';
      continue;
    }
    clean += text[i];
  }

  int line = 1;
  int n = -1;
  std::string reg;
  Circuit c;
  bool header = false;
  std::size_t pos = 0;
  while (pos < clean.size()) {
    const auto semi = clean.find(';', pos);
    std::string raw = clean.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    const std::string stmt = detail::strip(raw);
    // line of the statement's first non-blank character
    int here = line;
    for (std::size_t i = pos; i < pos + raw.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(clean[i]))) break;
      if (clean[i] == '\n') ++here;
    }
    line += static_cast<int>(std::count(raw.begin(), raw.end(), '\n'));
    if (semi == std::string::npos) {
      if (!stmt.empty()) throw QasmError(here, "missing ';' after '" + stmt + "'");
      break;
    }
    pos = semi + 1;
    if (stmt.empty()) continue;

    const auto sp = stmt.find_first_of(" \t\r\n");
    const std::string head = stmt.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : detail::strip(stmt.substr(sp));

    if (head == "OPENQASM") {
      if (rest != "2.0") throw QasmError(here, "unsupported version '" + rest + "'");
      header = true;
    } else if (head == "include" || head == "creg" || head == "barrier") {
      continue;
    } else if (head == "qreg") {
      if (n != -1) throw QasmError(here, "only one quantum register is supported");
      const auto open = rest.find('[');
      if (open == std::string::npos) throw QasmError(here, "malformed qreg");
      reg = detail::strip(rest.substr(0, open));
      n = detail::parse_operand(rest, reg, here);
      if (n < 1) throw QasmError(here, "register size must be positive");
      c = Circuit(n);
    } else if (head == "h" || head == "s" || head == "t" || head == "cx") {
      if (n == -1) throw QasmError(here, "gate before qreg declaration");
      Gate g;
      if (head == "cx") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw QasmError(here, "cx needs two operands");
        g = Gate::cnot(detail::parse_operand(rest.substr(0, comma), reg, here),
                       detail::parse_operand(rest.substr(comma + 1), reg, here));
      } else {
        const int q = detail::parse_operand(rest, reg, here);
        g = head == "h" ? Gate::h(q) : head == "s" ? Gate::s(q) : Gate::t(q);
      }
      try {
        validate_gate(g, n);
      } catch (const std::invalid_argument& e) {
        throw QasmError(here, e.what());
      }
      c.push_back(g);
    } else {
      throw QasmError(here, "unsupported statement '" + head + "'");
    }
  }
  if (!header) throw QasmError(1, "missing 'OPENQASM 2.0;' header");
  if (n == -1) throw QasmError(line, "no qreg declared");
  return c;
}

inline Circuit parse_qasm(const std::string& text) {
  std::istringstream is(text);
  return parse_qasm(is);
}

inline Circuit load_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_qasm(in);
  } catch (const QasmError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace ctprep
