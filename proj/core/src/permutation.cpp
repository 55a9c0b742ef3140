#include "fcg/permutation.hpp"

#include <numeric>
#include <sstream>

#include "fcg/errors.hpp"

namespace fcg {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::from_one_based(const std::vector<long long>& images) {
  std::vector<std::uint32_t> img;
  img.reserve(images.size());
  for (long long x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size())
      throw InputError("permutation image " + std::to_string(x) + " out of range 1.." +
                       std::to_string(images.size()));
    img.push_back(static_cast<std::uint32_t>(x - 1));
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

std::size_t Perm::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<long long> Perm::one_based() const {
  std::vector<long long> out;
  out.reserve(images_.size());
  for (auto x : images_) out.push_back(static_cast<long long>(x) + 1);
  return out;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << j + 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("permutation degree mismatch");
  Perm out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace fcg
