#include "lvmb/index_set.hpp"

#include <algorithm>

#include "lvmb/error.hpp"

namespace lvmb {

IndexSet::IndexSet(std::initializer_list<std::size_t> zero_based) {
  for (std::size_t i : zero_based) insert(i);
}

IndexSet IndexSet::full(std::size_t n) {
  if (n > kMaxIndices) throw Error(ErrorCode::domain, "index set capacity exceeded");
  return IndexSet(n == kMaxIndices ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices) {
  IndexSet s;
  for (std::size_t i : indices) {
    if (i == 0 || i > kMaxIndices) {
      throw Error(ErrorCode::domain, "index " + std::to_string(i) + " out of range");
    }
    s.insert(i - 1);
  }
  return s;
}

void IndexSet::insert(std::size_t i) {
  if (i >= kMaxIndices) throw Error(ErrorCode::domain, "index set capacity exceeded");
  bits_ |= std::uint64_t{1} << i;
}

void IndexSet::erase(std::size_t i) {
  if (i < kMaxIndices) bits_ &= ~(std::uint64_t{1} << i);
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::vector<std::size_t> IndexSet::one_based() const {
  auto out = elements();
  for (auto& i : out) ++i;
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : one_based()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool operator<(IndexSet a, IndexSet b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace lvmb
