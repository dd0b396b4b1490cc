#include "repmatch/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace repmatch {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("from_cycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      size_t end;
      const int v = std::stoi(text.substr(pos), &end);
      pos += end;
      if (v < 1 || v > n) throw std::invalid_argument("from_cycles: entry out of range");
      cyc.push_back(v - 1);
      skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("from_cycles: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      im[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("Permutation::all: n out of range");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<size_t>(i)] = (*this)(o(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<size_t>((*this)(i))] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lens;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = (*this)(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return CycleType(std::move(lens));
}

std::string Permutation::to_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)] || (*this)(i) == i) {
      seen[static_cast<size_t>(i)] = true;
      continue;
    }
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = (*this)(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace repmatch
