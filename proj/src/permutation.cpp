#include "qwb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qwb {

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 1);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  for (int i : word) p = p.times_simple_right(i);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("not a permutation");
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[k] = o.img_[img_[k] - 1];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[img_[k] - 1] = static_cast<int>(k) + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < img_.size(); ++a)
    for (std::size_t b = a + 1; b < img_.size(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

// w s_i swaps the values i and i+1 in the one-line form; it shortens w
// exactly when i+1 currently precedes i.
bool Permutation::right_descent(int i) const {
  auto pi = std::find(img_.begin(), img_.end(), i);
  auto pj = std::find(img_.begin(), img_.end(), i + 1);
  return pj < pi;
}

bool Permutation::left_descent(int i) const { return img_[i - 1] > img_[i]; }

Permutation Permutation::times_simple_right(int i) const {
  if (i < 1 || i >= degree()) throw std::out_of_range("simple transposition index out of range");
  Permutation p = *this;
  for (auto& v : p.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return p;
}

Permutation Permutation::times_simple_left(int i) const {
  if (i < 1 || i >= degree()) throw std::out_of_range("simple transposition index out of range");
  Permutation p = *this;
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> rev;
  Permutation w = *this;
  const int n = degree();
  while (!w.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (w.right_descent(i)) {
        rev.push_back(i);
        w = w.times_simple_right(i);
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

std::size_t Permutation::rank() const {
  const int n = degree();
  std::size_t r = 0;
  for (int a = 0; a < n; ++a) {
    int smaller = 0;
    for (int b = a + 1; b < n; ++b)
      if (img_[b] < img_[a]) ++smaller;
    r = r * static_cast<std::size_t>(n - a) + static_cast<std::size_t>(smaller);
  }
  return r;
}

Permutation Permutation::unrank(int n, std::size_t index) {
  std::vector<int> code(n);
  for (int a = n - 1; a >= 0; --a) {
    std::size_t base = static_cast<std::size_t>(n - a);
    code[a] = static_cast<int>(index % base);
    index /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Permutation p;
  p.img_.resize(n);
  for (int a = 0; a < n; ++a) {
    p.img_[a] = pool[code[a]];
    pool.erase(pool.begin() + code[a]);
  }
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < img_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(img_[k]);
  }
  return out + "]";
}

}  // namespace qwb
