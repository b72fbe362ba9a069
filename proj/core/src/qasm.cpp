// Copyright 2026 The mcxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcxsynth/qasm.hpp"

#include <cctype>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

namespace mcx {

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    os << gate_name(g.kind());
    for (int i = 0; i < g.arity(); ++i) {
      os << (i ? "," : " ") << "q[" << g.operand(i) << "]";
    }
    os << ";\n";
  }
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Circuit from_qasm(std::string_view text) {
  // Drop comments, then split on ';'.
  std::string clean;
  clean.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      clean += '\n';
      continue;
    }
    clean += text[i];
  }

  static const std::regex qreg_re(R"(^qreg\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$)");
  static const std::regex gate_re(R"(^([a-z]+)\s+(.+)$)");
  static const std::regex arg_re(R"(^([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$)");

  std::optional<Circuit> circuit;
  std::string reg;
  std::stringstream ss(clean);
  std::string stmt;
  while (std::getline(ss, stmt, ';')) {
    std::string s = strip(stmt);
    if (s.empty()) continue;
    if (s.rfind("OPENQASM", 0) == 0 || s.rfind("include", 0) == 0) continue;
    std::smatch m;
    if (std::regex_match(s, m, qreg_re)) {
      if (circuit) throw Error(Errc::ParseError, "more than one qreg");
      reg = m[1];
      circuit = Circuit::with_qubits(std::stoi(m[2]));
      continue;
    }
    if (!std::regex_match(s, m, gate_re)) throw Error(Errc::ParseError, s);
    if (!circuit) throw Error(Errc::ParseError, "gate before qreg: " + s);
    std::string name = m[1];
    std::vector<int> ops;
    std::stringstream args(m[2].str());
    std::string a;
    while (std::getline(args, a, ',')) {
      std::smatch am;
      std::string t = strip(a);
      if (!std::regex_match(t, am, arg_re) || am[1] != reg) {
        throw Error(Errc::ParseError, "bad operand '" + t + "'");
      }
      ops.push_back(std::stoi(am[2]));
    }
    auto need = [&](std::size_t n) {
      if (ops.size() != n) throw Error(Errc::ParseError, "operand count: " + s);
    };
    if (name == "x") {
      need(1);
      circuit->add(Gate::x(ops[0]));
    } else if (name == "cx") {
      need(2);
      circuit->add(Gate::cx(ops[0], ops[1]));
    } else if (name == "ccx") {
      need(3);
      circuit->add(Gate::ccx(ops[0], ops[1], ops[2]));
    } else if (name == "swap") {
      need(2);
      circuit->add(Gate::swap(ops[0], ops[1]));
    } else {
      throw Error(Errc::ParseError, "unsupported gate '" + name + "'");
    }
  }
  if (!circuit) throw Error(Errc::ParseError, "no qreg");
  return *circuit;
}

}  // namespace mcx
