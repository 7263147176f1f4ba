#pragma once

#include <algorithm>
#include <vector>

namespace neron {

// A labelled side of a separating node: the genus h and the marks P on that side.
// The unordered pair {(P, h), (P^c, g - h)} is represented by the side with smaller h;
// at h == g - h the lexicographically smaller sorted mark set wins.
template <typename Label>
struct Side {
  std::vector<Label> marks;  // sorted
  long genus = 0;
};

template <typename Label>
const Side<Label>& canonical_side(const Side<Label>& a, const Side<Label>& b) {
  if (a.genus != b.genus) return a.genus < b.genus ? a : b;
  return std::lexicographical_compare(b.marks.begin(), b.marks.end(), a.marks.begin(),
                                      a.marks.end())
             ? b
             : a;
}

// Sorted complement of `subset` inside `all` (both sorted).
template <typename Label>
std::vector<Label> complement(const std::vector<Label>& all, const std::vector<Label>& subset) {
  std::vector<Label> out;
  std::set_difference(all.begin(), all.end(), subset.begin(), subset.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace neron
