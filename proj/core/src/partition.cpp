#include "ggp/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ggp/error.hpp"

namespace ggp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      std::string shown;
      for (int part : parts_) shown += (shown.empty() ? "" : ",") + std::to_string(part);
      throw Error(ErrorCode::invalid_partition, "parts must be positive and weakly decreasing: [" + shown + "]");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition(std::vector<int>{n}); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> out;
  for (int p : parts_) ++out[p];
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  // Largest-part-first generation emits reverse-lexicographic order directly.
  std::function<void(int, int)> emit = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      emit(remaining - p, p);
      current.pop_back();
    }
  };
  emit(n, n);
  return out;
}

Integer z_stat(const Partition& lambda) {
  Integer z = 1;
  for (const auto& [part, mult] : lambda.multiplicities()) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    z *= power * factorial(static_cast<unsigned>(mult));
  }
  return z;
}

long n_stat(const Partition& lambda) {
  long total = 0;
  for (int i = 0; i < lambda.length(); ++i) total += static_cast<long>(i) * lambda[static_cast<std::size_t>(i)];
  return total;
}

Partition concat_sort(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

Partition remove_part(const Partition& lambda, int part) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw Error(ErrorCode::invalid_argument, "part " + std::to_string(part) + " not in " + to_string(lambda));
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition scale_parts(const Partition& lambda, int factor) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  for (int& p : parts) p *= factor;
  return Partition(std::move(parts));
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size() || fine.length() < coarse.length()) return false;
  // Place the parts of `fine` (largest first) into bins sized by `coarse`.
  std::vector<int> room(coarse.parts().begin(), coarse.parts().end());
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == fine.parts().size()) return true;
    const int part = fine[i];
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < part) continue;
      // Bins with equal remaining room are interchangeable.
      bool seen = false;
      for (std::size_t c = 0; c < b; ++c) seen = seen || room[c] == room[b];
      if (seen) continue;
      room[b] -= part;
      if (place(i + 1)) return true;
      room[b] += part;
    }
    return false;
  };
  return place(0);
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lambda[i]);
  }
  return out + "]";
}

}  // namespace ggp
