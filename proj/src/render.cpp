// Copyright 2026 The clusterndd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterndd/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace clusterndd {
namespace {

constexpr const char* kMinus = "−";
constexpr const char* kKetClose = "⟩";

std::string ket(const std::string& bits) { return "|" + bits + kKetClose; }

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// "1/2", "1/√2", "" for 1, or a decimal when 1/m^2 is not an integer.
std::string magnitude_text(double m) {
  const double k = 1.0 / (m * m);
  const double k_round = std::round(k);
  if (std::abs(k - k_round) > 1e-9) return number(m);
  const double s = std::round(std::sqrt(k_round));
  if (std::abs(s * s - k_round) < 1e-9) {
    return s == 1.0 ? "" : "1/" + std::to_string(static_cast<long long>(s));
  }
  return "1/√" + std::to_string(static_cast<long long>(k_round));
}

}  // namespace

std::string ket_form(const StateVector& state) {
  struct Term {
    std::string bits;
    Amplitude a;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (std::abs(state[i]) > 1e-12) terms.push_back({index_to_bits(i, state.n_qubits()), state[i]});
  }
  if (terms.empty()) return "0";

  const double m = std::abs(terms.front().a);
  bool uniform_real = true;
  for (const auto& t : terms) {
    uniform_real = uniform_real && std::abs(t.a.imag()) <= 1e-12 && std::abs(std::abs(t.a) - m) <= 1e-12;
  }

  std::string out;
  if (uniform_real) {
    const bool flip = terms.front().a.real() < 0;
    if (flip) out += kMinus;
    const std::string coeff = magnitude_text(m);
    const bool wrap = !coeff.empty() && terms.size() > 1;
    out += coeff;
    if (wrap) out += "(";
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const bool negative = (terms[k].a.real() < 0) != flip;
      if (k > 0) out += negative ? kMinus : "+";
      out += ket(terms[k].bits);
    }
    if (wrap) out += ")";
    return out;
  }

  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0) out += " + ";
    const Amplitude a = terms[k].a;
    out += "(" + number(a.real()) + (a.imag() < 0 ? "-" : "+") + number(std::abs(a.imag())) + "i)" +
           ket(terms[k].bits);
  }
  return out;
}

std::string ket_form(const TableRow& row) {
  std::string out = "1/2(";
  for (std::size_t k = 0; k < row.terms.size(); ++k) {
    const bool negative = row.terms[k].sign < 0;
    if (k > 0 || negative) out += negative ? kMinus : "+";
    out += ket(row.terms[k].ket);
  }
  return out + ")";
}

}  // namespace clusterndd
