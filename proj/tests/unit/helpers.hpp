#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fpr/core.hpp"

namespace fpr::test {

// Election over candidates a, b, c, ... from rows such as {"abc", "bca"}.
inline Election letters(std::initializer_list<std::string> rows) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows.begin()->size(); ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
  }
  std::vector<PreferenceOrder> voters;
  for (const std::string& row : rows) {
    std::vector<int> ids;
    for (char ch : row) ids.push_back(ch - 'a');
    voters.push_back(PreferenceOrder::from_indices(ids));
  }
  return Election(std::move(names), std::move(voters));
}

inline std::vector<CandidateId> ids(std::initializer_list<int> raw) {
  std::vector<CandidateId> out;
  for (int i : raw) out.emplace_back(i);
  return out;
}

}  // namespace fpr::test
