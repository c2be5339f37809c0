#include "slowent/closed_forms.hpp"

#include <functional>
#include <stdexcept>

namespace slowent {

void validate_block_sequence(const BlockSequence& k) {
  if (k.empty()) throw std::invalid_argument("block sequence is empty");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw std::invalid_argument("block sizes must be >= 1");
    if (i && k[i - 1] > k[i]) throw std::invalid_argument("block sequence must be nondecreasing");
  }
}

Rational r_block_sequence(const BlockSequence& k) {
  validate_block_sequence(k);
  Rational r = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Integer ki(static_cast<unsigned long>(k[i]));
    r += ratio(Integer(ki * (4 * ki + 1) * (ki - 1)), Integer(6));
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const Integer kj(static_cast<unsigned long>(k[j]));
      r += ratio(Integer(ki * (ki * ki + 3 * kj * kj - 3 * kj - 1)), Integer(3));
    }
  }
  return r;
}

Rational r_nilpotent_example(std::size_t d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return Rational(static_cast<unsigned long>(d * (d - 1) / 2));
}

Rational r_twisted(const BlockSequence& k, const std::vector<std::size_t>& jordan_lengths) {
  Rational r = r_block_sequence(k);
  for (std::size_t l : jordan_lengths) {
    if (l < 1) throw std::invalid_argument("Jordan lengths must be >= 1");
    r += Rational(static_cast<unsigned long>(l * (l - 1) / 2));
  }
  return r;
}

std::vector<BlockSequence> partitions(std::size_t total) {
  std::vector<BlockSequence> out;
  BlockSequence cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t min_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (total > 0) rec(total, 1);
  return out;
}

}  // namespace slowent
