#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqrtnot {

/// The four terminals of the gate. A and B enter on the input side, C and D
/// leave on the output side. An electron in A or C encodes qubit |1>, in B
/// or D qubit |0> (dual-rail encoding).
enum class Lead : int { A = 0, B = 1, C = 2, D = 3 };

enum class Side { Input, Output };

inline constexpr std::array<Lead, 4> all_leads{Lead::A, Lead::B, Lead::C, Lead::D};

constexpr int index_of(Lead lead) { return static_cast<int>(lead); }

constexpr Side side_of(Lead lead) {
  return (lead == Lead::A || lead == Lead::B) ? Side::Input : Side::Output;
}

constexpr int qubit_value(Lead lead) {
  return (lead == Lead::A || lead == Lead::C) ? 1 : 0;
}

constexpr char lead_name(Lead lead) { return "ABCD"[index_of(lead)]; }

inline Lead parse_lead(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Lead::A;
      case 'B': case 'b': return Lead::B;
      case 'C': case 'c': return Lead::C;
      case 'D': case 'd': return Lead::D;
      default: break;
    }
  }
  throw std::invalid_argument("parse_lead: expected one of A, B, C, D, got '" +
                              std::string(text) + "'");
}

}  // namespace sqrtnot
