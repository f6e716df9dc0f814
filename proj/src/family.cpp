#include "forbconf/containment.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

bool Family::add(BinMatrix m, std::string label) {
  for (const BinMatrix& f : members_)
    if (config_equal(f, m)) return false;
  members_.push_back(std::move(m));
  labels_.push_back(std::move(label));
  return true;
}

Family Family::complemented() const {
  Family out;
  for (int i = 0; i < size(); ++i) out.add(complement(members_[static_cast<size_t>(i)]), labels_[static_cast<size_t>(i)]);
  return out;
}

Family Family::minimized() const {
  Family out;
  for (int i = 0; i < size(); ++i) {
    bool dominated = false;
    for (int j = 0; j < size(); ++j) {
      if (i == j) continue;
      const BinMatrix& fi = members_[static_cast<size_t>(i)];
      const BinMatrix& fj = members_[static_cast<size_t>(j)];
      if (config_equal(fi, fj)) {
        dominated = j < i;  // keep the first of an equal pair
        if (dominated) break;
        continue;
      }
      if (contains_config(fi, fj)) {  // fj < fi, so fi is redundant
        dominated = true;
        break;
      }
    }
    if (!dominated) out.add(members_[static_cast<size_t>(i)], labels_[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace forbconf
